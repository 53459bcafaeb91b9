// Acceptance suite: one pass/fail line per criterion, exit 0 only if all pass.
// Usage: lattica_acceptance <path-to-lattica-cli> <golden-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lattica/congruence.hpp"
#include "lattica/constructions.hpp"
#include "lattica/corpus.hpp"
#include "lattica/dot.hpp"
#include "lattica/involution.hpp"
#include "lattica/json_io.hpp"
#include "lattica/lattice.hpp"
#include "lattica/verify.hpp"

using namespace lattica;

namespace {

// Budgets for the two timed criteria, in seconds.
constexpr double kOracleBudget = 60.0;
constexpr double kTowerBudget = 120.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Check {
public:
    explicit Check(std::string on_pass) : pass_detail_(std::move(on_pass)) {}

    // Records the first failure; later calls keep the original diagnosis.
    void require(bool ok, const std::string& detail) {
        if (out_.ok && !ok) out_ = {false, detail};
    }

    void require(const Witnessed& w, const std::string& instance) {
        if (!out_.ok || w.ok) return;
        std::string d = instance + ": " + w.note;
        if (!w.witness.empty()) {
            d += " [";
            for (size_t i = 0; i < w.witness.size(); ++i)
                d += (i ? ", " : "") + std::to_string(w.witness[i]);
            d += "]";
        }
        out_ = {false, d};
    }

    Outcome finish() const {
        if (out_.ok) return {true, pass_detail_};
        return out_;
    }

private:
    std::string pass_detail_;
    Outcome out_;
};

const FiniteLattice& corpus_lat(const CorpusEntry& e) {
    return lattice_of(e.s);
}

const InvolutionStructure& corpus_inv(const CorpusEntry& e) {
    return std::get<InvolutionStructure>(e.s);
}

std::string rand_name(int k) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "rand-%02d", k);
    return buf;
}

const FiniteLattice& lat_by_name(const std::string& name) {
    for (const CorpusEntry& e : corpus_lattices())
        if (e.name == name) return corpus_lat(e);
    throw DomainError("unknown corpus entry: " + name);
}

// The 20 fixed random pairs used by the stacked-sum criteria.
std::vector<std::pair<std::string, std::string>> rand_pairs() {
    std::vector<std::pair<std::string, std::string>> out;
    for (int k = 1; k <= 20; ++k) out.emplace_back(rand_name(k), rand_name(((k + 4) % 25) + 1));
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

Outcome criterion_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    Check c("");
    int lats = 0, invs = 0;
    for (const CorpusEntry& e : corpus_lattices()) {
        AlgebraRef A = make_algebra(corpus_lat(e), Sig::LAT);
        c.require(all_congruences(A).members == brute_force_congruences(A).members,
                  e.name + ": generated congruences disagree with the subset sweep at lat");
        ++lats;
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        const InvolutionStructure& S = corpus_inv(e);
        if (S.lattice.size() > kOracleDefaultMax) continue;
        AlgebraRef A = make_algebra(S, Sig::ILAT);
        c.require(all_congruences(A).members == brute_force_congruences(A).members,
                  e.name + ": generated congruences disagree with the subset sweep at ilat");
        ++invs;
    }
    double dt = seconds_since(t0);
    c.require(dt < kOracleBudget, "runtime " + fmt_seconds(dt) + " over the " +
                                      fmt_seconds(kOracleBudget) + " budget");
    Check done("oracle agreement on " + std::to_string(lats) + " lattices (lat) and " +
               std::to_string(invs) + " involution structures (ilat) in " + fmt_seconds(dt));
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_osum_product() {
    Check c("congruence product bijection on 20 stacked random pairs");
    for (const auto& [a, b] : rand_pairs())
        c.require(laws::osum_con_product(lat_by_name(a), lat_by_name(b)), a + " + " + b);
    return c.finish();
}

Outcome criterion_step() {
    Check c("");
    int n = 0;
    for (const CorpusEntry& e : corpus_lattices()) {
        c.require(laws::step_law(e.s, StepVariant::PLAIN, Sig::LAT), e.name + " (plain, lat)");
        ++n;
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        c.require(laws::step_law(e.s, StepVariant::KLEENE, Sig::ILAT), e.name + " (kleene, ilat)");
        c.require(laws::step_law(e.s, StepVariant::DOUBLE3, Sig::ILAT),
                  e.name + " (double3, ilat)");
        n += 2;
    }
    Check done("one extra congruence per growth step on " + std::to_string(n) + " instances");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_tower() {
    auto t0 = std::chrono::steady_clock::now();
    Check c("");

    Structure plain_seed{m_lattice(3)};
    InvolutionStructure swap = validate_involution(m_lattice(4), {1, 0, 3, 2, 5, 4});
    Structure kleene_seed{swap};

    for (int k = 1; k <= 8; ++k) {
        c.require(structure_size(tower(plain_seed, k, StepVariant::PLAIN).members.back()) ==
                      5 + 4 * k,
                  "plain tower at " + std::to_string(k) + " steps has the wrong size");
        c.require(structure_size(tower(kleene_seed, k, StepVariant::KLEENE).members.back()) ==
                      6 + 4 * k,
                  "kleene tower at " + std::to_string(k) + " steps has the wrong size");
    }
    c.require(laws::tower_law(plain_seed, 8, StepVariant::PLAIN, Sig::LAT),
              "plain tower over the three-midpoint seed");
    c.require(laws::tower_law(kleene_seed, 8, StepVariant::KLEENE, Sig::ILAT),
              "kleene tower over the swap seed");

    TowerFamily F = tower(kleene_seed, 8, StepVariant::KLEENE);
    c.require(laws::tower_inv_equals_lat(F), "kleene tower congruence agreement");
    for (size_t i = 0; i < F.members.size(); ++i)
        c.require(is_pseudo_kleene(std::get<InvolutionStructure>(F.members[i])),
                  "kleene tower member " + std::to_string(i));

    double dt = seconds_since(t0);
    c.require(dt < kTowerBudget, "runtime " + fmt_seconds(dt) + " over the " +
                                     fmt_seconds(kTowerBudget) + " budget");
    Check done("towers to 8 steps (38 elements): sizes, counts, chain conditions in " +
               fmt_seconds(dt));
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_simplicity() {
    Check c("");
    for (int k = 3; k <= 8; ++k) {
        FiniteLattice M = m_lattice(k);
        c.require(is_simple(make_algebra(M, Sig::LAT)),
                  "midpoint lattice with " + std::to_string(k) + " midpoints is not simple");
    }
    for (int k = 1; k <= 3; ++k) {
        FiniteLattice B = boolean_algebra(k).lattice;
        c.require(all_congruences(B, Sig::LAT).size() == (1u << k),
                  "powerset lattice of exponent " + std::to_string(k) +
                      " has the wrong congruence count");
    }
    int n = 0;
    for (const CorpusEntry& e : corpus_lattices()) {
        c.require(laws::finite_bound_law(corpus_lat(e)), e.name);
        ++n;
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        c.require(laws::finite_bound_law(corpus_inv(e).lattice), e.name + " (reduct)");
        ++n;
    }
    Check done("simplicity and congruence-count bounds on " + std::to_string(n) +
               " corpus members");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_chains() {
    Check c("");
    for (int n = 2; n <= 12; ++n)
        c.require(laws::chain_convex_law(n), "chain of " + std::to_string(n));
    for (int m = 1; m <= 6; ++m) {
        InvolutionStructure S = sandwich(chain(m), std::nullopt);
        size_t want = 1u << (m - 1);
        c.require(all_congruences(S, Sig::ILAT).size() == want,
                  "reversal congruences of the glued self-dual chain at " + std::to_string(m));
        c.require(all_congruences(chain(m), Sig::LAT).size() == want,
                  "congruence count of the chain of " + std::to_string(m));
        c.require(laws::sandwich_con_law(chain(m), std::nullopt),
                  "self-dual chain stack at " + std::to_string(m));
    }
    return Outcome{c.finish().ok,
                   c.finish().ok ? "convex-block congruences on chains 2..12, self-dual stacks 1..6"
                                 : c.finish().detail};
}

Outcome criterion_aol() {
    Check c("");
    int n = 0;
    for (const CorpusEntry& e : corpus_involutions()) {
        const InvolutionStructure& S = corpus_inv(e);
        if (S.lattice.size() > 7 || !is_pseudo_kleene(S).ok) continue;
        c.require(laws::aol_conbz_law(S), e.name);
        ++n;
    }
    c.require(n >= 5, "too few pseudo-Kleene corpus members: " + std::to_string(n));
    c.require(laws::lld_simple_law(boolean_algebra(2).lattice), "square self-dual stack");
    c.require(laws::lld_simple_law(m_lattice(3)), "three-midpoint self-dual stack");
    Check done("weak-complement congruence law on " + std::to_string(n) +
               " pseudo-Kleene middles, plus two simple stacks");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_hsum_square() {
    Check c("");
    int n = 0;
    for (const CorpusEntry& e : corpus_lattices()) {
        if (corpus_lat(e).size() <= 2) continue;
        c.require(laws::hsum_square_law(e.s, StepVariant::PLAIN), e.name + " (plain)");
        ++n;
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        if (corpus_inv(e).lattice.size() <= 2) continue;
        c.require(laws::hsum_square_law(e.s, StepVariant::KLEENE), e.name + " (kleene)");
        c.require(laws::hsum_square_law(e.s, StepVariant::DOUBLE3), e.name + " (double3)");
        n += 2;
    }
    Check done("glued-square congruence description on " + std::to_string(n) + " instances");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_constants() {
    Check c("");
    int n = 0;
    for (const CorpusEntry& e : corpus_involutions()) {
        c.require(laws::coni01_equals_coni0(corpus_inv(e)), e.name);
        ++n;
    }
    Check done("fixing the bottom fixes both bounds on " + std::to_string(n) +
               " involution structures");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

Outcome criterion_filters() {
    Check c("");
    int n = 0;
    for (const CorpusEntry& e : corpus_lattices()) {
        c.require(laws::filters_principal(corpus_lat(e)), e.name + " (principal)");
        c.require(laws::filt_bound_delta(corpus_lat(e)), e.name + " (bounds)");
        c.require(laws::filt_step_delta(e.s), e.name + " (step)");
        n += 3;
    }
    for (const auto& [a, b] : rand_pairs()) {
        c.require(laws::filt_osum_delta(lat_by_name(a), lat_by_name(b)), a + " + " + b);
        ++n;
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        c.require(laws::filters_principal(corpus_inv(e).lattice), e.name + " (principal)");
        c.require(laws::filt_selfdual(corpus_inv(e)), e.name + " (self-dual)");
        n += 2;
    }
    Check done("filter counting identities on " + std::to_string(n) + " instances");
    done.require(c.finish().ok, c.finish().detail);
    return done.finish();
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

Outcome criterion_cli(const std::string& bin, const std::string& golden_dir) {
    Check c("verify-all exit code, JSON round-trips, golden byte comparisons");

    std::string cmd = "\"" + bin + "\" verify all > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    bool exited_clean = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    c.require(exited_clean, "verify all did not exit cleanly");

    FiniteLattice labeled = chain(3);
    labeled.set_labels({"a", "b", "c"});
    for (const Structure& s :
         {Structure{chain(5)}, Structure{boolean_algebra(2)}, Structure{m_lattice(4)},
          Structure{aol_sandwich(boolean_algebra(2))}, Structure{labeled}}) {
        std::string text = to_json(s);
        c.require(to_json(load_json(text)) == text, "JSON round-trip changed a document");
    }

    std::optional<std::string> golden_json = read_file(golden_dir + "/aol-square.json");
    c.require(golden_json.has_value(), "missing golden file aol-square.json");
    if (golden_json)
        c.require(*golden_json == to_json(Structure{aol_sandwich(boolean_algebra(2))}),
                  "aol-square.json drifted from the emitted document");

    std::optional<std::string> golden_dot = read_file(golden_dir + "/square.dot");
    c.require(golden_dot.has_value(), "missing golden file square.dot");
    if (golden_dot)
        c.require(*golden_dot == to_dot(Structure{boolean_algebra(2)}),
                  "square.dot drifted from the emitted graph");

    return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: %s <lattica-binary> <golden-dir>\n", argv[0]);
        return 2;
    }
    const std::string bin = argv[1];
    const std::string golden = argv[2];

    struct Row {
        int id;
        Outcome out;
    };
    std::vector<Row> rows;
    rows.push_back({1, criterion_oracle()});
    rows.push_back({2, criterion_osum_product()});
    rows.push_back({3, criterion_step()});
    rows.push_back({4, criterion_tower()});
    rows.push_back({5, criterion_simplicity()});
    rows.push_back({6, criterion_chains()});
    rows.push_back({7, criterion_aol()});
    rows.push_back({8, criterion_hsum_square()});
    rows.push_back({9, criterion_constants()});
    rows.push_back({10, criterion_filters()});
    rows.push_back({11, criterion_cli(bin, golden)});

    int passed = 0;
    for (const Row& r : rows) {
        std::printf("[%s] criterion %d: %s\n", r.out.ok ? "PASS" : "FAIL", r.id,
                    r.out.detail.c_str());
        if (r.out.ok) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, rows.size());
    return passed == static_cast<int>(rows.size()) ? 0 : 1;
}

#include "lattica/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lattica/corpus.hpp"
#include "lattica/partition.hpp"

namespace lattica {
namespace laws {

namespace {

Witnessed fail(std::vector<int> witness, std::string note) {
    return {false, std::move(witness), std::move(note)};
}

std::vector<Partition> sorted_unique(std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Both vectors must be sorted. On mismatch the note names one offending
// member, preferring one the left side is missing.
bool same_members(const std::vector<Partition>& got, const std::vector<Partition>& want,
                  std::string* note) {
    if (got == want) return true;
    for (const Partition& p : want)
        if (!std::binary_search(got.begin(), got.end(), p)) {
            *note = "missing congruence " + p.text();
            return false;
        }
    for (const Partition& p : got)
        if (!std::binary_search(want.begin(), want.end(), p)) {
            *note = "unexpected congruence " + p.text();
            return false;
        }
    *note = "congruence sets differ";
    return false;
}

// theta carried through the injection emb into a universe of `total`
// elements; everything outside the image stays a singleton. The temporary
// ids theta.size()+i cannot collide with theta's class ids.
Partition embed_partition(const Partition& theta, const std::vector<int>& emb, int total) {
    std::vector<int> raw(total);
    for (int i = 0; i < total; ++i) raw[i] = theta.size() + i;
    for (int x = 0; x < theta.size(); ++x) raw[emb[x]] = theta.class_id(x);
    return Partition::from_class_ids(raw);
}

CongruenceSet con_of(const Structure& s, Sig sig) {
    if (const auto* iv = std::get_if<InvolutionStructure>(&s)) return all_congruences(*iv, sig);
    return all_congruences(std::get<FiniteLattice>(s), sig);
}

// Every nonempty up-closed meet-closed subset, by scanning all 2^n masks.
std::vector<std::vector<int>> filters_by_sweep(const FiniteLattice& L) {
    const int n = L.size();
    if (n > 16) throw TooLargeError(n, 16, "subset sweep refuses more than 16 elements");
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!(mask >> x & 1u)) continue;
            for (int y = 0; y < n && ok; ++y)
                if (L.leq(x, y) && !(mask >> y & 1u)) ok = false;
            for (int y = x; y < n && ok; ++y)
                if ((mask >> y & 1u) && !(mask >> L.meet(x, y) & 1u)) ok = false;
        }
        if (!ok) continue;
        std::vector<int> subset;
        for (int x = 0; x < n; ++x)
            if (mask >> x & 1u) subset.push_back(x);
        out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Witnessed osum_con_product(const FiniteLattice& L, const FiniteLattice& M) {
    SumWitness W = ordinal_sum(L, M);
    CongruenceSet CL = all_congruences(L, Sig::LAT);
    CongruenceSet CM = all_congruences(M, Sig::LAT);
    CongruenceSet CR = all_congruences(lattice_of(W.result), Sig::LAT);

    std::vector<Partition> composed;
    composed.reserve(CL.size() * CM.size());
    for (const Partition& al : CL.members)
        for (const Partition& be : CM.members) {
            try {
                composed.push_back(congruence_osum(al, be, W));
            } catch (const NotACongruenceError&) {
                return fail({}, "composite of " + al.text() + " and " + be.text() +
                                    " is not a congruence of the stack");
            }
        }

    std::vector<Partition> image = sorted_unique(composed);
    if (image.size() != composed.size())
        return fail({}, "composition is not injective on congruence pairs");
    std::string note;
    if (!same_members(CR.members, image, &note)) return fail({}, note);

    const size_t nm = CM.size();
    for (size_t i = 0; i < CL.size(); ++i)
        for (size_t j = 0; j < nm; ++j)
            for (size_t k = 0; k < CL.size(); ++k)
                for (size_t l = 0; l < nm; ++l) {
                    bool parts = CL.members[i].refines(CL.members[k]) &&
                                 CM.members[j].refines(CM.members[l]);
                    bool whole = composed[i * nm + j].refines(composed[k * nm + l]);
                    if (parts != whole)
                        return fail({static_cast<int>(i), static_cast<int>(j),
                                     static_cast<int>(k), static_cast<int>(l)},
                                    "composition does not preserve refinement both ways");
                }
    return {};
}

Witnessed step_law(const Structure& M, StepVariant v, Sig sig) {
    SumWitness W = step(M, v);
    const int nM = structure_size(M);
    const int total = nM + 4;

    CongruenceSet CM = con_of(M, sig);
    CongruenceSet CR = con_of(W.result, sig);

    std::vector<int> emb(nM);
    for (int i = 0; i < nM; ++i) emb[i] = i;
    std::vector<Partition> expected;
    expected.reserve(CM.size() + 1);
    for (const Partition& th : CM.members) expected.push_back(embed_partition(th, emb, total));
    expected.push_back(Partition::whole(total));
    expected = sorted_unique(expected);
    if (expected.size() != CM.size() + 1)
        return fail({}, "extended congruences collide");

    std::string note;
    if (!same_members(CR.members, expected, &note)) return fail({}, note);
    if (CR.size() != CM.size() + 1) return fail({}, "count did not grow by exactly one");
    return {};
}

Witnessed tower_law(const Structure& seed, int steps, StepVariant v, Sig sig) {
    TowerFamily F = tower(seed, steps, v);
    const int base = structure_size(seed);
    for (size_t i = 0; i < F.members.size(); ++i)
        if (structure_size(F.members[i]) != base + 4 * static_cast<int>(i))
            return fail({static_cast<int>(i)},
                        "member " + std::to_string(i) + " does not have " +
                            std::to_string(base + 4 * static_cast<int>(i)) + " elements");

    if (Witnessed s = check_condition_s(F, sig); !s.ok)
        return fail(s.witness, "subalgebra chain broken: " + s.note);
    if (Witnessed c = check_condition_c(F, sig); !c.ok)
        return fail(c.witness, "congruence shape wrong: " + c.note);

    for (size_t i = 0; i < F.members.size(); ++i) {
        CongruenceSet C = con_of(F.members[i], sig);
        if (C.size() != 2 + i)
            return fail({static_cast<int>(i)},
                        "member " + std::to_string(i) + " has " + std::to_string(C.size()) +
                            " congruences, expected " + std::to_string(2 + i));
    }
    return {};
}

Witnessed tower_inv_equals_lat(const TowerFamily& F) {
    for (size_t i = 0; i < F.members.size(); ++i) {
        const auto* S = std::get_if<InvolutionStructure>(&F.members[i]);
        if (!S) return fail({static_cast<int>(i)}, "member carries no involution");
        CongruenceSet lat = all_congruences(S->lattice, Sig::LAT);
        CongruenceSet inv = all_congruences(*S, Sig::ILAT);
        if (lat.members != inv.members)
            return fail({static_cast<int>(i)},
                        "member " + std::to_string(i) +
                            ": involution congruences differ from lattice congruences");
    }
    return {};
}

Witnessed aol_conbz_law(const InvolutionStructure& K) {
    if (Witnessed pk = is_pseudo_kleene(K); !pk.ok)
        return fail(pk.witness, "middle structure is not pseudo-Kleene");

    SandwichWitness SW = sandwich_with_witness(chain(2), K);
    std::vector<int> weak = trivial_brouwer(SW.result.lattice);
    InvolutionStructure A = validate_involution(SW.result.lattice, SW.result.inv, weak);

    InvolutionStructure packaged = aol_sandwich(K);
    if (!(packaged.lattice == A.lattice) || packaged.inv != A.inv || packaged.brouwer != A.brouwer)
        return fail({}, "packaged construction disagrees with the glued stack");

    if (Witnessed w = is_antiortholattice(A); !w.ok)
        return fail(w.witness, "stack is not an antiortholattice: " + w.note);

    const int n = A.lattice.size();
    CongruenceSet CBZ = all_congruences(A, Sig::BZ);
    CongruenceSet CI0 = fix_constants(all_congruences(A, Sig::ILAT), {A.lattice.bottom()});

    std::vector<Partition> expected = CI0.members;
    expected.push_back(Partition::whole(n));
    expected = sorted_unique(expected);
    std::string note;
    if (!same_members(CBZ.members, expected, &note))
        return fail({}, "BZ congruences are not the bottom-fixing ones plus full: " + note);

    CongruenceSet CK = all_congruences(K, Sig::ILAT);
    std::vector<Partition> mid;
    mid.reserve(CK.size() + 1);
    for (const Partition& be : CK.members) mid.push_back(embed_partition(be, SW.emb_mid, n));
    mid.push_back(Partition::whole(n));
    mid = sorted_unique(mid);
    if (!same_members(CBZ.members, mid, &note))
        return fail({}, "BZ congruences are not the middle ones with singleton bounds: " + note);

    if (CBZ.size() != CK.size() + 1)
        return fail({}, "BZ count is " + std::to_string(CBZ.size()) + ", expected " +
                            std::to_string(CK.size() + 1));
    return {};
}

Witnessed hsum_square_law(const Structure& S, StepVariant square) {
    const FiniteLattice& L = lattice_of(S);
    if (L.size() <= 2) throw DomainError("glued-square law needs more than two elements");

    SumWitness W = [&] {
        if (!has_involution(S) || square == StepVariant::PLAIN)
            return horizontal_sum({Structure{L}, Structure{boolean_algebra(2).lattice}});
        if (square == StepVariant::KLEENE)
            return horizontal_sum({S, Structure{boolean_algebra(2)}});
        InvolutionStructure r3 = validate_involution(chain(3), {2, 1, 0});
        return horizontal_sum({S, Structure{r3}, Structure{r3}});
    }();

    const bool with_inv = has_involution(W.result);
    const Sig sig = with_inv ? Sig::ILAT : Sig::LAT;
    const int n = structure_size(W.result);

    CongruenceSet CH = con_of(W.result, sig);
    CongruenceSet base =
        with_inv ? fix_constants(con_of(S, Sig::ILAT), {L.bottom()})
                 : fix_constants(all_congruences(L, Sig::LAT), {L.bottom(), L.top()});

    std::vector<Partition> expected;
    expected.reserve(base.size() + 1);
    for (const Partition& al : base.members)
        expected.push_back(embed_partition(al, W.embeddings[0], n));
    expected.push_back(Partition::whole(n));
    expected = sorted_unique(expected);
    if (expected.size() != base.size() + 1) return fail({}, "extended congruences collide");

    std::string note;
    if (!same_members(CH.members, expected, &note)) return fail({}, note);
    return {};
}

Witnessed sandwich_con_law(const FiniteLattice& L, const std::optional<InvolutionStructure>& K) {
    SandwichWitness SW = sandwich_with_witness(L, K);
    const int n = SW.result.lattice.size();

    CongruenceSet CL = all_congruences(L, Sig::LAT);
    std::vector<Partition> betas = K ? all_congruences(*K, Sig::ILAT).members
                                     : std::vector<Partition>{Partition::identity(1)};

    std::vector<Partition> composed;
    composed.reserve(CL.size() * betas.size());
    for (const Partition& al : CL.members)
        for (const Partition& be : betas) {
            UnionFind uf(n);
            for (int x = 0; x < al.size(); ++x)
                for (int y = x + 1; y < al.size(); ++y)
                    if (al.same(x, y)) {
                        uf.unite(SW.emb_low[x], SW.emb_low[y]);
                        uf.unite(SW.emb_high[x], SW.emb_high[y]);
                    }
            for (int x = 0; x < be.size(); ++x)
                for (int y = x + 1; y < be.size(); ++y)
                    if (be.same(x, y)) uf.unite(SW.emb_mid[x], SW.emb_mid[y]);
            composed.push_back(Partition::from_union_find(uf));
        }

    std::vector<Partition> image = sorted_unique(composed);
    if (image.size() != composed.size())
        return fail({}, "mirrored composition is not injective on pairs");

    CongruenceSet CI = all_congruences(SW.result, Sig::ILAT);
    std::string note;
    if (!same_members(CI.members, image, &note)) return fail({}, note);

    const size_t nb = betas.size();
    for (size_t i = 0; i < CL.size(); ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t k = 0; k < CL.size(); ++k)
                for (size_t l = 0; l < nb; ++l) {
                    bool parts =
                        CL.members[i].refines(CL.members[k]) && betas[j].refines(betas[l]);
                    bool whole = composed[i * nb + j].refines(composed[k * nb + l]);
                    if (parts != whole)
                        return fail({static_cast<int>(i), static_cast<int>(j),
                                     static_cast<int>(k), static_cast<int>(l)},
                                    "mirrored composition does not preserve refinement both ways");
                }
    return {};
}

Witnessed filters_principal(const FiniteLattice& L) {
    SubsetFamily F = filters(L);
    if (F.members.size() != static_cast<size_t>(L.size()))
        return fail({}, "filter count " + std::to_string(F.members.size()) +
                            " differs from element count " + std::to_string(L.size()));
    if (filters_by_sweep(L) != F.members)
        return fail({}, "the filter family is not exactly the principal up-sets");
    return {};
}

Witnessed filt_osum_delta(const FiniteLattice& L, const FiniteLattice& M) {
    SumWitness W = ordinal_sum(L, M);
    size_t got = filters(lattice_of(W.result)).size();
    size_t want = filters(L).size() + filters(M).size() - 1;
    if (got != want)
        return fail({}, "stacked sum has " + std::to_string(got) + " filters, expected " +
                            std::to_string(want));
    return {};
}

Witnessed filt_bound_delta(const FiniteLattice& L) {
    SumWitness W = bound_B(Structure{L});
    size_t got = filters(lattice_of(W.result)).size();
    size_t want = filters(L).size() + 2;
    if (got != want)
        return fail({}, "bounded extension has " + std::to_string(got) + " filters, expected " +
                            std::to_string(want));
    return {};
}

Witnessed filt_step_delta(const Structure& M) {
    SumWitness W = step(M, StepVariant::PLAIN);
    size_t got = filters(lattice_of(W.result)).size();
    size_t want = filters(lattice_of(M)).size() + 4;
    if (got != want)
        return fail({}, "step result has " + std::to_string(got) + " filters, expected " +
                            std::to_string(want));
    return {};
}

Witnessed filt_selfdual(const InvolutionStructure& S) {
    size_t nf = filters(S.lattice).size();
    size_t ni = ideals(S.lattice).size();
    if (nf != ni)
        return fail({}, std::to_string(nf) + " filters against " + std::to_string(ni) + " ideals");
    return {};
}

Witnessed chain_convex_law(int n) {
    if (n < 1) throw DomainError("chain needs at least one element");
    if (n > 20) throw TooLargeError(n, 20, "cut enumeration refuses more than 20 elements");

    CongruenceSet got = all_congruences(chain(n), Sig::LAT);
    const uint32_t cuts = uint32_t{1} << (n - 1);
    if (got.size() != cuts)
        return fail({n}, "chain of " + std::to_string(n) + " has " + std::to_string(got.size()) +
                             " congruences, expected " + std::to_string(cuts));

    std::vector<Partition> expected;
    expected.reserve(cuts);
    for (uint32_t mask = 0; mask < cuts; ++mask) {
        std::vector<int> cls(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            cls[i] = c;
            if (mask >> i & 1u) ++c;
        }
        expected.push_back(Partition::from_class_ids(cls));
    }
    expected = sorted_unique(expected);
    std::string note;
    if (!same_members(got.members, expected, &note)) return fail({n}, note);
    return {};
}

Witnessed finite_bound_law(const FiniteLattice& L) {
    const int n = L.size();
    if (n > 20) throw TooLargeError(n, 20, "bound check refuses more than 20 elements");
    const uint64_t bound = uint64_t{1} << (n - 1);
    CongruenceSet C = all_congruences(L, Sig::LAT);
    if (C.size() > bound)
        return fail({}, std::to_string(C.size()) + " congruences exceed the bound " +
                            std::to_string(bound));
    const bool tight = C.size() == bound;
    if (tight != is_chain(L))
        return fail({}, tight ? "bound is tight on a non-chain"
                              : "chain misses the tight congruence count");
    return {};
}

Witnessed coni01_equals_coni0(const InvolutionStructure& S) {
    CongruenceSet CI = all_congruences(S, Sig::ILAT);
    CongruenceSet f0 = fix_constants(CI, {S.lattice.bottom()});
    CongruenceSet f01 = fix_constants(CI, {S.lattice.bottom(), S.lattice.top()});
    if (f0.members != f01.members) {
        for (const Partition& p : f0.members)
            if (!std::binary_search(f01.members.begin(), f01.members.end(), p))
                return fail({}, "congruence " + p.text() +
                                    " keeps the bottom alone but not the top");
        return fail({}, "bottom-fixing and bound-fixing congruences differ");
    }
    return {};
}

Witnessed aol_trivial_brouwer_law(const InvolutionStructure& S) {
    if (!S.brouwer) throw MissingBrouwerError("law needs a weak complement on the input");
    if (Witnessed p = is_pbz_star(S); !p.ok) return {true, {}, "outside scope"};
    const bool aol = is_antiortholattice(S).ok;
    const bool triv = *S.brouwer == trivial_brouwer(S.lattice);
    if (aol != triv)
        return fail({}, aol ? "antiortholattice carrying a nontrivial weak complement"
                            : "trivial weak complement without the antiortholattice property");
    return {};
}

Witnessed lld_simple_law(const FiniteLattice& L) {
    if (L.size() < 2) return fail({}, "needs a nontrivial lattice");
    if (!is_0_regular(L)) return fail({}, "input is not 0-regular");
    InvolutionStructure A0 = sandwich(L, std::nullopt);
    std::vector<int> weak = trivial_brouwer(A0.lattice);
    InvolutionStructure A = validate_involution(A0.lattice, A0.inv, weak);
    CongruenceSet C = all_congruences(A, Sig::BZ);
    if (C.size() != 2)
        return fail({}, "self-dual stack has " + std::to_string(C.size()) +
                            " BZ congruences, expected 2");
    return {};
}

Witnessed sandwich_pk_law(const FiniteLattice& L, const std::optional<InvolutionStructure>& K) {
    if (K) {
        if (Witnessed pk = is_pseudo_kleene(*K); !pk.ok)
            return fail(pk.witness, "middle structure is not pseudo-Kleene");
    }
    InvolutionStructure A = sandwich(L, K);
    if (Witnessed pk = is_pseudo_kleene(A); !pk.ok)
        return fail(pk.witness, "stack violates the pseudo-Kleene inequality");
    return {};
}

Witnessed step_pk_law(const InvolutionStructure& M) {
    if (Witnessed pk = is_pseudo_kleene(M); !pk.ok)
        return fail(pk.witness, "input is not pseudo-Kleene");
    SumWitness W = step(Structure{M}, StepVariant::KLEENE);
    if (Witnessed pk = is_pseudo_kleene(std::get<InvolutionStructure>(W.result)); !pk.ok)
        return fail(pk.witness, "step result violates the pseudo-Kleene inequality");
    return {};
}

}  // namespace laws

namespace {

const Structure& corpus_item(const std::vector<CorpusEntry>& c, const std::string& name) {
    for (const CorpusEntry& e : c)
        if (e.name == name) return e.s;
    throw DomainError("unknown corpus entry: " + name);
}

const FiniteLattice& corpus_lat(const std::string& name) {
    return lattice_of(corpus_item(corpus_lattices(), name));
}

const InvolutionStructure& corpus_inv(const std::string& name) {
    return std::get<InvolutionStructure>(corpus_item(corpus_involutions(), name));
}

// Accumulates law runs for one registry entry: first failure wins, successes
// are tallied into the detail string.
struct Runner {
    TheoremOutcome out;
    int count = 0;

    explicit Runner(std::string id) { out.id = std::move(id); }

    void add(const std::string& instance, const Witnessed& w) {
        if (!out.ok && !out.detail.empty()) return;  // keep the first failure
        ++count;
        if (!w.ok) {
            out.ok = false;
            std::string where;
            for (int v : w.witness) where += (where.empty() ? " [" : ", ") + std::to_string(v);
            if (!where.empty()) where += "]";
            out.detail = instance + ": " + w.note + where;
        }
    }

    TheoremOutcome finish() {
        if (out.detail.empty()) {
            out.ok = true;
            out.detail = std::to_string(count) + " instances";
        }
        return std::move(out);
    }
};

const std::vector<std::pair<std::string, std::string>>& osum_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"chain-1", "m-3"},     {"chain-3", "square"},  {"chain-4", "chain-4"},
        {"m-3", "chain-2"},     {"pentagon", "square"}, {"rand-01", "rand-02"},
        {"rand-03", "rand-04"}, {"square", "m-4"},
    };
    return pairs;
}

// Involution corpus entries of at most `max_n` elements satisfying the
// pseudo-Kleene inequality.
std::vector<const CorpusEntry*> pk_corpus(int max_n) {
    std::vector<const CorpusEntry*> out;
    for (const CorpusEntry& e : corpus_involutions()) {
        if (structure_size(e.s) > max_n) continue;
        if (is_pseudo_kleene(std::get<InvolutionStructure>(e.s)).ok) out.push_back(&e);
    }
    return out;
}

TheoremOutcome thm_osum_con_product() {
    Runner r("osum-con-product");
    for (const auto& [ln, mn] : osum_pairs())
        r.add(ln + " over " + mn, laws::osum_con_product(corpus_lat(ln), corpus_lat(mn)));
    return r.finish();
}

TheoremOutcome thm_bM_square_plus_one() {
    Runner r("bM-square-plus-one");
    for (const CorpusEntry& e : corpus_lattices())
        r.add(e.name, laws::step_law(e.s, StepVariant::PLAIN, Sig::LAT));
    for (const CorpusEntry& e : corpus_involutions()) {
        r.add(e.name + " kleene", laws::step_law(e.s, StepVariant::KLEENE, Sig::ILAT));
        r.add(e.name + " double3", laws::step_law(e.s, StepVariant::DOUBLE3, Sig::ILAT));
        r.add(e.name + " reduct", laws::step_law(e.s, StepVariant::KLEENE, Sig::LAT));
    }
    return r.finish();
}

TheoremOutcome thm_tower_count() {
    Runner r("tower-count");
    Structure m3{m_lattice(3)};
    r.add("midpoint-3 plain", laws::tower_law(m3, 5, StepVariant::PLAIN, Sig::LAT));

    const InvolutionStructure& swap = corpus_inv("m-4-swap");
    r.add("m-4-swap kleene", laws::tower_law(Structure{swap}, 5, StepVariant::KLEENE, Sig::ILAT));
    r.add("m-4-swap kleene reducts",
          laws::tower_inv_equals_lat(tower(Structure{swap}, 5, StepVariant::KLEENE)));

    const InvolutionStructure& fix = corpus_inv("m-3-fix");
    r.add("m-3-fix double3", laws::tower_law(Structure{fix}, 4, StepVariant::DOUBLE3, Sig::ILAT));
    return r.finish();
}

TheoremOutcome thm_aol_conbz() {
    Runner r("aol-conbz");
    int usable = 0;
    for (const CorpusEntry* e : pk_corpus(7)) {
        ++usable;
        r.add(e->name, laws::aol_conbz_law(std::get<InvolutionStructure>(e->s)));
    }
    if (usable < 5) {
        TheoremOutcome out = r.finish();
        out.ok = false;
        out.detail = "only " + std::to_string(usable) + " pseudo-Kleene middles in the corpus";
        return out;
    }
    return r.finish();
}

TheoremOutcome thm_hsum_square_con() {
    Runner r("hsum-square-con");
    for (const CorpusEntry& e : corpus_lattices()) {
        if (structure_size(e.s) <= 2) continue;
        r.add(e.name, laws::hsum_square_law(e.s, StepVariant::PLAIN));
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        if (structure_size(e.s) <= 2) continue;
        r.add(e.name + " kleene", laws::hsum_square_law(e.s, StepVariant::KLEENE));
        r.add(e.name + " double3", laws::hsum_square_law(e.s, StepVariant::DOUBLE3));
    }
    return r.finish();
}

TheoremOutcome thm_sandwich_con() {
    Runner r("sandwich-con");
    const std::vector<std::string> lows = {"chain-2", "chain-3", "square", "m-3", "pentagon"};
    const std::vector<std::string> mids = {"chain-3-rev", "square-comp", "m-3-fix"};
    for (const std::string& ln : lows) {
        const FiniteLattice& L = corpus_lat(ln);
        r.add(ln + " over unit", laws::sandwich_con_law(L, std::nullopt));
        for (const std::string& kn : mids)
            r.add(ln + " over " + kn, laws::sandwich_con_law(L, corpus_inv(kn)));
    }
    return r.finish();
}

TheoremOutcome thm_filt_counts() {
    Runner r("filt-counts");
    for (const CorpusEntry& e : corpus_lattices()) {
        r.add(e.name + " sweep", laws::filters_principal(lattice_of(e.s)));
        r.add(e.name + " bound", laws::filt_bound_delta(lattice_of(e.s)));
        r.add(e.name + " step", laws::filt_step_delta(e.s));
    }
    for (const auto& [ln, mn] : osum_pairs())
        r.add(ln + " over " + mn, laws::filt_osum_delta(corpus_lat(ln), corpus_lat(mn)));
    for (const CorpusEntry& e : corpus_involutions()) {
        r.add(e.name + " sweep", laws::filters_principal(lattice_of(e.s)));
        r.add(e.name + " selfdual", laws::filt_selfdual(std::get<InvolutionStructure>(e.s)));
    }
    return r.finish();
}

TheoremOutcome thm_chain_convex() {
    Runner r("chain-convex");
    for (int n = 2; n <= 12; ++n)
        r.add("chain of " + std::to_string(n), laws::chain_convex_law(n));
    return r.finish();
}

TheoremOutcome thm_finite_bound() {
    Runner r("finite-bound");
    for (const CorpusEntry& e : corpus_lattices())
        r.add(e.name, laws::finite_bound_law(lattice_of(e.s)));
    for (const CorpusEntry& e : corpus_involutions())
        r.add(e.name + " reduct", laws::finite_bound_law(lattice_of(e.s)));
    return r.finish();
}

TheoremOutcome thm_coni01_equals_coni0() {
    Runner r("coni01-equals-coni0");
    for (const CorpusEntry& e : corpus_involutions())
        r.add(e.name, laws::coni01_equals_coni0(std::get<InvolutionStructure>(e.s)));
    return r.finish();
}

TheoremOutcome thm_aol_trivial_brouwer() {
    Runner r("aol-trivial-brouwer");
    int in_scope = 0;
    auto run = [&](const std::string& name, const InvolutionStructure& S) {
        Witnessed w = laws::aol_trivial_brouwer_law(S);
        if (w.note != "outside scope") ++in_scope;
        r.add(name, w);
    };
    for (int k = 1; k <= 3; ++k) {
        InvolutionStructure B = boolean_algebra(k);
        run("powerset-" + std::to_string(k) + " ortho",
            validate_involution(B.lattice, B.inv, B.inv));
    }
    for (const CorpusEntry& e : corpus_involutions()) {
        const auto& S = std::get<InvolutionStructure>(e.s);
        std::vector<int> weak = trivial_brouwer(S.lattice);
        run(e.name + " trivial", validate_involution(S.lattice, S.inv, weak));
    }
    TheoremOutcome out = r.finish();
    if (out.ok && in_scope < 5) {
        out.ok = false;
        out.detail = "only " + std::to_string(in_scope) + " instances satisfy the full axioms";
    } else if (out.ok) {
        out.detail += ", " + std::to_string(in_scope) + " in scope";
    }
    return out;
}

TheoremOutcome thm_lld_simple() {
    Runner r("lld-simple");
    r.add("square", laws::lld_simple_law(corpus_lat("square")));
    r.add("m-3", laws::lld_simple_law(corpus_lat("m-3")));
    return r.finish();
}

TheoremOutcome thm_pk_preserved() {
    Runner r("pk-preserved");
    for (const CorpusEntry& e : corpus_lattices())
        r.add(e.name + " over unit", laws::sandwich_pk_law(lattice_of(e.s), std::nullopt));
    std::vector<const CorpusEntry*> mids = pk_corpus(7);
    for (const std::string& ln : {"chain-2", "square", "pentagon", "m-4"})
        for (const CorpusEntry* k : mids)
            r.add(ln + " over " + k->name,
                  laws::sandwich_pk_law(corpus_lat(ln), std::get<InvolutionStructure>(k->s)));
    for (const CorpusEntry* k : mids)
        r.add(k->name + " step", laws::step_pk_law(std::get<InvolutionStructure>(k->s)));

    TowerFamily F = tower(Structure{corpus_inv("m-4-swap")}, 5, StepVariant::KLEENE);
    for (size_t i = 0; i < F.members.size(); ++i)
        r.add("kleene tower member " + std::to_string(i),
              is_pseudo_kleene(std::get<InvolutionStructure>(F.members[i])));
    return r.finish();
}

using ThmFn = TheoremOutcome (*)();

const std::vector<std::pair<std::string, ThmFn>>& registry() {
    static const std::vector<std::pair<std::string, ThmFn>> table = {
        {"osum-con-product", thm_osum_con_product},
        {"bM-square-plus-one", thm_bM_square_plus_one},
        {"tower-count", thm_tower_count},
        {"aol-conbz", thm_aol_conbz},
        {"hsum-square-con", thm_hsum_square_con},
        {"sandwich-con", thm_sandwich_con},
        {"filt-counts", thm_filt_counts},
        {"chain-convex", thm_chain_convex},
        {"finite-bound", thm_finite_bound},
        {"coni01-equals-coni0", thm_coni01_equals_coni0},
        {"aol-trivial-brouwer", thm_aol_trivial_brouwer},
        {"lld-simple", thm_lld_simple},
        {"pk-preserved", thm_pk_preserved},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

TheoremOutcome run_theorem(const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn();
    throw DomainError("unknown check id: " + id);
}

std::vector<TheoremOutcome> run_all_theorems() {
    std::vector<TheoremOutcome> out;
    out.reserve(registry().size());
    for (const auto& [id, fn] : registry()) out.push_back(fn());
    return out;
}

}  // namespace lattica

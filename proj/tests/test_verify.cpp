#include <doctest.h>

#include <optional>
#include <string>
#include <vector>

#include "lattica/congruence.hpp"
#include "lattica/constructions.hpp"
#include "lattica/involution.hpp"
#include "lattica/lattice.hpp"
#include "lattica/verify.hpp"

using namespace lattica;

namespace {

InvolutionStructure reversed_chain(int n) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = n - 1 - i;
    return validate_involution(chain(n), std::move(inv));
}

InvolutionStructure fixed_m3() {
    return validate_involution(m_lattice(3), {1, 0, 2, 3, 4});
}

InvolutionStructure with_trivial_weak(InvolutionStructure s) {
    std::vector<int> weak = trivial_brouwer(s.lattice);
    return validate_involution(std::move(s.lattice), std::move(s.inv), std::move(weak));
}

bool note_mentions(const Witnessed& w, const std::string& fragment) {
    return w.note.find(fragment) != std::string::npos;
}

}  // namespace

TEST_CASE("the check registry is stable") {
    CHECK(theorem_ids() ==
          std::vector<std::string>{
              "osum-con-product", "bM-square-plus-one", "tower-count", "aol-conbz",
              "hsum-square-con", "sandwich-con", "filt-counts", "chain-convex",
              "finite-bound", "coni01-equals-coni0", "aol-trivial-brouwer", "lld-simple",
              "pk-preserved"});
    CHECK_THROWS_AS(run_theorem("no-such-check"), DomainError);

    TheoremOutcome chains = run_theorem("chain-convex");
    CHECK(chains.ok);
    CHECK(chains.id == "chain-convex");
    CHECK(run_theorem("lld-simple").ok);
    CHECK(run_theorem("coni01-equals-coni0").ok);
}

TEST_CASE("stacked-sum congruence product law") {
    CHECK(laws::osum_con_product(chain(2), m_lattice(3)).ok);
    CHECK(laws::osum_con_product(chain(3), chain(3)).ok);
}

TEST_CASE("step and tower laws") {
    CHECK(laws::step_law(Structure{chain(2)}, StepVariant::PLAIN, Sig::LAT).ok);
    CHECK(laws::step_law(Structure{reversed_chain(2)}, StepVariant::KLEENE, Sig::ILAT).ok);
    CHECK(laws::step_law(Structure{reversed_chain(3)}, StepVariant::DOUBLE3, Sig::ILAT).ok);
    CHECK(laws::tower_law(Structure{chain(2)}, 2, StepVariant::PLAIN, Sig::LAT).ok);
    CHECK(laws::tower_inv_equals_lat(
              tower(Structure{reversed_chain(2)}, 2, StepVariant::KLEENE))
              .ok);

    Witnessed plain = laws::tower_inv_equals_lat(
        tower(Structure{chain(2)}, 1, StepVariant::PLAIN));
    CHECK(!plain.ok);
    CHECK(note_mentions(plain, "member carries no involution"));
}

TEST_CASE("antiortholattice BZ congruence law") {
    CHECK(laws::aol_conbz_law(boolean_algebra(2)).ok);
    CHECK(laws::aol_conbz_law(reversed_chain(3)).ok);

    Witnessed bad = laws::aol_conbz_law(fixed_m3());
    CHECK(!bad.ok);
    CHECK(note_mentions(bad, "not pseudo-Kleene"));
}

TEST_CASE("glued-square congruence law") {
    CHECK(laws::hsum_square_law(Structure{m_lattice(3)}, StepVariant::PLAIN).ok);
    CHECK(laws::hsum_square_law(Structure{boolean_algebra(2)}, StepVariant::KLEENE).ok);
    CHECK(laws::hsum_square_law(Structure{boolean_algebra(2)}, StepVariant::DOUBLE3).ok);
    CHECK_THROWS_AS(laws::hsum_square_law(Structure{chain(2)}, StepVariant::PLAIN),
                    DomainError);
}

TEST_CASE("self-dual stack congruence description") {
    CHECK(laws::sandwich_con_law(boolean_algebra(2).lattice, std::nullopt).ok);
    CHECK(laws::sandwich_con_law(chain(3), reversed_chain(3)).ok);
    CHECK(laws::sandwich_con_law(m_lattice(3), boolean_algebra(2)).ok);
}

TEST_CASE("filter counting laws") {
    CHECK(laws::filters_principal(m_lattice(4)).ok);
    CHECK(laws::filt_osum_delta(chain(3), boolean_algebra(2).lattice).ok);
    CHECK(laws::filt_bound_delta(boolean_algebra(2).lattice).ok);
    CHECK(laws::filt_step_delta(Structure{boolean_algebra(2).lattice}).ok);
    CHECK(laws::filt_selfdual(boolean_algebra(2)).ok);
    CHECK_THROWS_AS(laws::filters_principal(chain(17)), TooLargeError);
}

TEST_CASE("chain congruences are the consecutive-block partitions") {
    CHECK(laws::chain_convex_law(1).ok);
    CHECK(laws::chain_convex_law(5).ok);
    CHECK_THROWS_AS(laws::chain_convex_law(0), DomainError);
    CHECK_THROWS_AS(laws::chain_convex_law(21), TooLargeError);
}

TEST_CASE("congruence count bound is tight exactly on chains") {
    CHECK(laws::finite_bound_law(chain(5)).ok);
    CHECK(laws::finite_bound_law(boolean_algebra(2).lattice).ok);
    CHECK(laws::finite_bound_law(m_lattice(3)).ok);
    CHECK_THROWS_AS(laws::finite_bound_law(chain(21)), TooLargeError);
}

TEST_CASE("fixing the bottom alone already fixes both bounds") {
    CHECK(laws::coni01_equals_coni0(boolean_algebra(2)).ok);
    CHECK(laws::coni01_equals_coni0(fixed_m3()).ok);
    CHECK(laws::coni01_equals_coni0(reversed_chain(5)).ok);
}

TEST_CASE("antiortholattices are the PBZ* structures with the trivial weak complement") {
    InvolutionStructure ortho = boolean_algebra(2);
    std::vector<int> self = ortho.inv;
    InvolutionStructure ortho_weak =
        validate_involution(std::move(ortho.lattice), std::move(ortho.inv), std::move(self));
    CHECK(laws::aol_trivial_brouwer_law(ortho_weak).ok);

    CHECK(laws::aol_trivial_brouwer_law(with_trivial_weak(reversed_chain(3))).ok);

    Witnessed skipped = laws::aol_trivial_brouwer_law(with_trivial_weak(fixed_m3()));
    CHECK(skipped.ok);
    CHECK(skipped.note == "outside scope");

    CHECK_THROWS_AS(laws::aol_trivial_brouwer_law(boolean_algebra(2)), MissingBrouwerError);
}

TEST_CASE("0-regular lattices give simple self-dual BZ stacks") {
    CHECK(laws::lld_simple_law(boolean_algebra(2).lattice).ok);
    CHECK(laws::lld_simple_law(m_lattice(3)).ok);

    Witnessed bad = laws::lld_simple_law(chain(3));
    CHECK(!bad.ok);
    CHECK(note_mentions(bad, "not 0-regular"));
    CHECK(!laws::lld_simple_law(chain(1)).ok);
}

TEST_CASE("pseudo-Kleene preservation") {
    CHECK(laws::sandwich_pk_law(m_lattice(3), std::nullopt).ok);
    CHECK(laws::sandwich_pk_law(chain(2), boolean_algebra(2)).ok);
    CHECK(laws::step_pk_law(reversed_chain(2)).ok);

    Witnessed bad_mid = laws::sandwich_pk_law(chain(2), fixed_m3());
    CHECK(!bad_mid.ok);
    CHECK(note_mentions(bad_mid, "not pseudo-Kleene"));
    CHECK(!laws::step_pk_law(fixed_m3()).ok);
}

TEST_CASE("the fixed-point step variant always breaks the pseudo-Kleene inequality") {
    for (const InvolutionStructure& M :
         {reversed_chain(2), reversed_chain(3), boolean_algebra(2)}) {
        SumWitness W = step(Structure{M}, StepVariant::DOUBLE3);
        const InvolutionStructure& R = std::get<InvolutionStructure>(W.result);
        Witnessed pk = is_pseudo_kleene(R);
        REQUIRE(!pk.ok);
        REQUIRE(pk.witness.size() == 2);
        int x = pk.witness[0], y = pk.witness[1];
        CHECK(!R.lattice.leq(R.lattice.meet(x, R.inv[x]), R.lattice.join(y, R.inv[y])));
    }
}

#include <doctest.h>

#include <optional>
#include <vector>

#include "lattica/constructions.hpp"
#include "lattica/involution.hpp"

using namespace lattica;

namespace {

InvolutionStructure reversed_chain(int n) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = n - 1 - i;
    return validate_involution(chain(n), inv);
}

InvolutionStructure fixed_m3() {
    return validate_involution(m_lattice(3), {1, 0, 2, 3, 4});
}

}  // namespace

TEST_CASE("validation rejects bad maps") {
    CHECK_THROWS_AS(validate_involution(chain(3), {1, 2, 0}), NotInvolutiveError);
    CHECK_THROWS_AS(validate_involution(chain(3), {0, 1, 2}), NotOrderReversingError);
    CHECK_THROWS_AS(validate_involution(chain(3), {2, 1}), Error);  // size mismatch
    CHECK_THROWS_AS(validate_involution(chain(3), {2, 1, 0}, std::vector<int>{2, 2, 2}),
                    BrouwerAxiomError);
}

TEST_CASE("trivial weak complement always validates") {
    for (int n = 1; n <= 5; ++n) {
        InvolutionStructure s = reversed_chain(n);
        std::vector<int> weak = trivial_brouwer(s.lattice);
        InvolutionStructure t = validate_involution(s.lattice, s.inv, weak);
        CHECK(t.brouwer == weak);
    }
    CHECK(trivial_brouwer(chain(3)) == std::vector<int>{2, 0, 0});
}

TEST_CASE("pseudo-kleene inequality") {
    CHECK(is_pseudo_kleene(reversed_chain(4)).ok);
    CHECK(is_pseudo_kleene(boolean_algebra(2)).ok);

    Witnessed w = is_pseudo_kleene(fixed_m3());
    CHECK(!w.ok);
    CHECK(w.witness == std::vector<int>{2, 3});
}

TEST_CASE("paraorthomodularity") {
    CHECK(is_paraorthomodular(reversed_chain(4)).ok);
    CHECK(is_paraorthomodular(boolean_algebra(3)).ok);

    // glueing two squares side by side: atoms a <= a but inv(a) meet a = 0
    SumWitness W = horizontal_sum({Structure{boolean_algebra(2)}, Structure{boolean_algebra(2)}});
    const auto& S = std::get<InvolutionStructure>(W.result);
    CHECK(is_paraorthomodular(S).ok);  // distinct atoms are incomparable
    CHECK(is_pseudo_kleene(S).ok);
}

TEST_CASE("orthocomplemented powerset is pbz-star but only the segment is antiortho") {
    for (int k = 1; k <= 3; ++k) {
        InvolutionStructure B = boolean_algebra(k);
        InvolutionStructure O = validate_involution(B.lattice, B.inv, B.inv);
        CHECK(is_pbz_star(O).ok);
        Witnessed a = is_antiortholattice(O);
        CHECK(a.ok == (k == 1));
        if (k == 2) CHECK(a.witness == std::vector<int>{1});
    }
}

TEST_CASE("pbz-star needs a weak complement") {
    CHECK_THROWS_AS(is_pbz_star(reversed_chain(3)), MissingBrouwerError);
}

TEST_CASE("classification report") {
    TaxonomyReport chain_r = classify(reversed_chain(4));
    CHECK(chain_r.involutive.ok);
    CHECK(chain_r.bounded.ok);
    CHECK(chain_r.pseudo_kleene.ok);
    CHECK(chain_r.de_morgan.ok);
    CHECK(chain_r.kleene.ok);
    CHECK(chain_r.paraorthomodular.ok);
    CHECK(!chain_r.bz.ok);
    CHECK(chain_r.bz.note == "no weak complement present");

    TaxonomyReport m3_r = classify(fixed_m3());
    CHECK(m3_r.involutive.ok);
    CHECK(!m3_r.pseudo_kleene.ok);
    CHECK(!m3_r.de_morgan.ok);
    CHECK(!m3_r.kleene.ok);

    // implications hold between flags
    InvolutionStructure aol = aol_sandwich(boolean_algebra(2));
    TaxonomyReport aol_r = classify(aol);
    CHECK(aol_r.antiortholattice.ok);
    CHECK(aol_r.pbz_star.ok);
    CHECK(aol_r.bz.ok);
    CHECK(aol_r.pseudo_kleene.ok);
}

TEST_CASE("dual keeps the involution, drops the weak complement") {
    InvolutionStructure aol = aol_sandwich(boolean_algebra(2));
    REQUIRE(aol.brouwer.has_value());
    InvolutionStructure d = dual(aol);
    CHECK(!d.brouwer.has_value());
    CHECK(d.inv == aol.inv);
    CHECK(d.lattice == dual(aol.lattice));
}

TEST_CASE("structure variant helpers") {
    Structure bare{chain(3)};
    Structure with{reversed_chain(3)};
    CHECK(!has_involution(bare));
    CHECK(has_involution(with));
    CHECK(involution_of(bare) == nullptr);
    REQUIRE(involution_of(with) != nullptr);
    CHECK((*involution_of(with))[0] == 2);
    CHECK(weak_of(with) == nullptr);
    CHECK(structure_size(bare) == 3);
    CHECK(&lattice_of(with) == &std::get<InvolutionStructure>(with).lattice);
}

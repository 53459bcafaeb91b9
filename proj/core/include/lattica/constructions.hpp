#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattica/congruence.hpp"
#include "lattica/involution.hpp"
#include "lattica/lattice.hpp"
#include "lattica/partition.hpp"

namespace lattica {

// One glued element of a sum: where it lives in the result, and which
// summand elements were identified into it.
struct GluedClass {
    int result_index = -1;
    std::vector<std::pair<int, int>> sources;  // (summand, element)
};

// Result of a sum construction: the structure itself, one element map per
// summand, and the identified classes. Element numbering is deterministic
// and documented on each construction.
struct SumWitness {
    Structure result;
    std::vector<std::vector<int>> embeddings;
    std::vector<GluedClass> identified;
};

// 0 < 1 < ... < n-1. Requires n >= 1.
FiniteLattice chain(int n);

// The 2^k-element powerset lattice: element x is a k-bit mask, the order is
// mask inclusion, the involution complements the mask. Requires 0 <= k <= 20.
InvolutionStructure boolean_algebra(int k);

// Bottom 0, top 1, and k pairwise incomparable midpoints 2..k+1. Requires
// k >= 1. (Same numbering as horizontal_sum of k three-element chains.)
FiniteLattice m_lattice(int k);

// Stacks M on top of L, gluing M's bottom onto L's top. L keeps its indices;
// the other M elements are appended in ascending original order, so the
// result has |L| + |M| - 1 elements. embeddings = [L map, M map];
// identified = the single glued class.
SumWitness ordinal_sum(const FiniteLattice& L, const FiniteLattice& M);

// The congruence of the stacked lattice whose classes are alpha's classes,
// beta's classes, and the union of the class of L's top with the class of
// M's bottom. Validates both inputs by checking the composite is compatible;
// throws NotACongruenceError otherwise. The witness must come from
// ordinal_sum.
Partition congruence_osum(const Partition& alpha, const Partition& beta, const SumWitness& W);

// Glues all bottoms to index 0 and all tops to index 1; interiors are
// appended summand by summand in ascending original order, and elements of
// different summands stay incomparable. Every summand must have at least two
// elements (TrivialSummandError); a two-element summand contributes nothing.
// The result carries an involution exactly when every summand does.
SumWitness horizontal_sum(const std::vector<Structure>& parts);

// Adds a fresh bottom |L| and fresh top |L|+1 around the whole input, which
// keeps its indices. An involution extends by swapping the new bounds; a
// weak complement does not survive and is dropped.
SumWitness bound_B(const Structure& S);

// Self-dual stack L, K, dual(L): built as ordinal_sum(ordinal_sum(L, K),
// dual(L)), so L keeps its indices, K's non-bottom elements follow, and the
// upper copy's elements are appended in ascending original order. The
// involution exchanges the two copies of L through the identity on indices
// and applies K's own involution in the middle. K may be absent (the
// one-element structure), giving the glued stack of L and its dual.
struct SandwichWitness {
    InvolutionStructure result;
    std::vector<int> emb_low;   // L into the result
    std::vector<int> emb_mid;   // K into the result
    std::vector<int> emb_high;  // dual(L) into the result
};
SandwichWitness sandwich_with_witness(const FiniteLattice& L,
                                      const std::optional<InvolutionStructure>& K);
InvolutionStructure sandwich(const FiniteLattice& L,
                             const std::optional<InvolutionStructure>& K);

// The two-element chain sandwich around K, equipped with the trivial weak
// complement. Requires K pseudo-Kleene (NotPseudoKleeneError); the result
// satisfies is_antiortholattice.
InvolutionStructure aol_sandwich(const InvolutionStructure& K);

// One growth step: a fresh bottom and top around M plus an incomparable pair
// a, b at the new co-atom level. Result universe: M keeps 0..|M|-1, then
// new bottom |M|, new top |M|+1, a = |M|+2, b = |M|+3.
//   KLEENE:  extends M's involution with a' = b (needs an involution on M)
//   DOUBLE3: extends M's involution with a' = a, b' = b
//   PLAIN:   drops any involution
// embeddings = [bounded-M map (identity on |M|+2 indices), four-element
// square map]; identified = the two glued classes.
enum class StepVariant { PLAIN, KLEENE, DOUBLE3 };
const char* step_variant_name(StepVariant v);
std::optional<StepVariant> step_variant_from_name(const std::string& name);

SumWitness step(const Structure& M, StepVariant v);

// members[0] is the seed, members[i+1] = step(members[i], variant). Indices
// are preserved, so each member's universe is literally a prefix of the
// next one and |members[i]| = |seed| + 4i.
struct TowerFamily {
    StepVariant variant = StepVariant::PLAIN;
    std::vector<Structure> members;
};

// Requires |seed| >= 2 (TrivialSeedError) and, for the involution variants,
// an involution on the seed. PLAIN drops a seed involution.
TowerFamily tower(const Structure& seed, int steps, StepVariant v);

// Every earlier member is a proper subalgebra of every later member under
// the signature: same universe prefix, with the later member's operations
// agreeing on it. Witness on failure: (earlier, later, x, y).
Witnessed check_condition_s(const TowerFamily& F, Sig sig);

// Every member's congruence set is exactly the identity, the full relation,
// and one congruence per earlier member collapsing that member's universe
// to a single class and nothing else. Requires the subalgebra condition
// first (ConditionSViolatedError). Witness on failure: the member index.
Witnessed check_condition_c(const TowerFamily& F, Sig sig);

}  // namespace lattica

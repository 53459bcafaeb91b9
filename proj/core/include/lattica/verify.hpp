#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattica/congruence.hpp"
#include "lattica/constructions.hpp"
#include "lattica/involution.hpp"
#include "lattica/lattice.hpp"

namespace lattica {

// Result of one registered structural check.
struct TheoremOutcome {
    std::string id;
    bool ok = false;
    std::string detail;  // instance tally on success, first failure otherwise
};

// Stable check identifiers, in reporting order.
const std::vector<std::string>& theorem_ids();

// Runs one registered check over the shipped corpus. Throws DomainError for
// an unknown id.
TheoremOutcome run_theorem(const std::string& id);

std::vector<TheoremOutcome> run_all_theorems();

// The parameterized laws behind the registry, exposed so test and acceptance
// suites can drive them over their own instance sets. Every law returns ok
// plus a first-failure witness/note; preconditions violated by the caller
// surface as failures with an explanatory note, never as silent passes.
namespace laws {

// The pairwise composition of summand congruences is a bijection onto the
// congruences of the stacked lattice and preserves refinement both ways.
Witnessed osum_con_product(const FiniteLattice& L, const FiniteLattice& M);

// Congruences of step(M, v) under sig are exactly the congruences of M
// extended by four fresh singletons, plus the full relation; so the count
// grows by exactly one.
Witnessed step_law(const Structure& M, StepVariant v, Sig sig);

// Tower growth: members are a strictly growing subalgebra chain, each
// member's congruences are exactly the identity, the full relation, and
// one collapse per earlier member, |Con(members[i])| = 2 + i, and
// |members[i]| = |seed| + 4i.
Witnessed tower_law(const Structure& seed, int steps, StepVariant v, Sig sig);

// On every member the involution-compatible congruences coincide with the
// plain lattice congruences (towers whose seed has a simple lattice reduct).
Witnessed tower_inv_equals_lat(const TowerFamily& F);

// For pseudo-Kleene K and A = two-element chains glued around K carrying the
// trivial weak complement: A is an antiortholattice; its BZ congruences are
// exactly the bottom-fixing members of its involution congruences plus the
// full relation; those members are exactly K's involution congruences with
// the two bounds as singletons; and the count is |Con_ILAT(K)| + 1.
Witnessed aol_conbz_law(const InvolutionStructure& K);

// Congruences of S glued with the four-element square at both bounds are
// exactly the bound-fixing congruences of S extended by two singletons, plus
// the full relation. Needs |S| > 2 (DomainError otherwise). For a bare
// lattice the square carries no involution and the base set fixes both
// bounds; for an involution input the law runs under ILAT with the bottom
// fixed, and `square` picks the square's involution: KLEENE = the Boolean
// swap, DOUBLE3 = two reversed three-element chains with fixed midpoints.
Witnessed hsum_square_law(const Structure& S, StepVariant square);

// Involution congruences of the self-dual stack around K are exactly the
// mirrored compositions (alpha on both copies, beta in the middle), in
// refinement-preserving bijection with Con(L) x Con_ILAT(K).
Witnessed sandwich_con_law(const FiniteLattice& L,
                           const std::optional<InvolutionStructure>& K);

// Every filter is a principal up-set and there are exactly |L| of them,
// established by sweeping all subsets (TooLargeError past 16 elements).
Witnessed filters_principal(const FiniteLattice& L);
// |Filt(L + M)| = |Filt(L)| + |Filt(M)| - 1 for the stacked sum.
Witnessed filt_osum_delta(const FiniteLattice& L, const FiniteLattice& M);
// |Filt(B(L))| = |Filt(L)| + 2 after adjoining fresh bounds.
Witnessed filt_bound_delta(const FiniteLattice& L);
// |Filt(step(M))| = |Filt(M)| + 4.
Witnessed filt_step_delta(const Structure& M);
// An involution makes the lattice self-dual: as many filters as ideals.
Witnessed filt_selfdual(const InvolutionStructure& S);

// Congruences of the n-element chain are exactly the partitions with
// consecutive blocks; 2^(n-1) of them.
Witnessed chain_convex_law(int n);

// |Con(L)| <= 2^(|L|-1), with equality exactly for chains.
Witnessed finite_bound_law(const FiniteLattice& L);

// Fixing both bounds inside the involution congruences is the same as
// fixing the bottom alone.
Witnessed coni01_equals_coni0(const InvolutionStructure& S);

// Among weak-complemented structures satisfying the full PBZ* axioms,
// the antiortholattice predicate holds exactly when the weak complement is
// the trivial one. Vacuously true (with a note) outside PBZ* scope.
Witnessed aol_trivial_brouwer_law(const InvolutionStructure& S);

// For a 0-regular nontrivial lattice L, the self-dual stack of L with the
// trivial weak complement has exactly two BZ congruences.
Witnessed lld_simple_law(const FiniteLattice& L);

// The pseudo-Kleene inequality survives stacking around a middle that
// satisfies it (or around no middle at all).
Witnessed sandwich_pk_law(const FiniteLattice& L,
                          const std::optional<InvolutionStructure>& K);
// ... and survives a KLEENE step applied to a structure satisfying it.
Witnessed step_pk_law(const InvolutionStructure& M);

}  // namespace laws

}  // namespace lattica

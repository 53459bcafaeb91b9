#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lattica/lattice.hpp"

namespace lattica {

// A bounded lattice carrying an order-reversing involution, and optionally a
// second, weaker complement map (the kind whose double application may move
// the element up). The weak complement is a plain optional field, not a
// subtype: most operations here ignore it.
//
// Build through validate_involution so every stored map has been checked.
struct InvolutionStructure {
    FiniteLattice lattice;
    std::vector<int> inv;
    std::optional<std::vector<int>> brouwer;
};

// Checks that inv is an order-reversing involution on L and, when given,
// that weak obeys its three identities:
//   x meet weak(x) == bottom
//   x <= weak(weak(x)) and weak(weak(x)) == inv(weak(x))
//   weak is order-reversing
// Throws NotInvolutiveError, NotOrderReversingError, BrouwerAxiomError. The
// witness is always the first violation in element / lexicographic pair
// order, and axioms are checked in the order listed above.
InvolutionStructure validate_involution(FiniteLattice L, std::vector<int> inv,
                                        std::optional<std::vector<int>> weak = std::nullopt);

// The map sending bottom to top and everything else to bottom. This is the
// only weak complement an antiortholattice admits.
std::vector<int> trivial_brouwer(const FiniteLattice& L);

// Predicate result carrying the first counterexample found, in lexicographic
// order over the tuple being scanned. Empty witness on success.
struct Witnessed {
    bool ok = true;
    std::vector<int> witness;
    std::string note;
};

// x meet inv(x) <= y join inv(y) for all x, y. Witness: (x, y).
Witnessed is_pseudo_kleene(const InvolutionStructure& S);

// x <= y and inv(x) meet y == bottom imply x == y. Witness: (x, y).
Witnessed is_paraorthomodular(const InvolutionStructure& S);

// Requires the weak complement (MissingBrouwerError otherwise). Checks, in
// order: pseudo-Kleene, the weak-complement axioms (revalidated for
// hand-built values), paraorthomodularity, and the interchange identity
//   weak(x meet inv(x)) == weak(x) join weak(inv(x)).
// Witness: the first element (or pair) violating the first failing stage.
Witnessed is_pbz_star(const InvolutionStructure& S);

// is_pbz_star plus: no element outside {bottom, top} satisfies both
// x join inv(x) == top and x meet inv(x) == bottom. Witness: that element.
Witnessed is_antiortholattice(const InvolutionStructure& S);

// One flag of a classification report.
struct TaxonomyFlag {
    bool ok = false;
    std::vector<int> witness;  // counterexample when !ok and one exists
    std::string note;          // e.g. "no weak complement present"
};

// Full classification of one structure. Implications that hold by
// definition (kleene -> de_morgan -> pseudo_kleene, antiortholattice ->
// pbz_star -> bz -> pseudo_kleene) always hold between the flags.
struct TaxonomyReport {
    TaxonomyFlag involutive;        // inv is a valid order-reversing involution
    TaxonomyFlag bounded;           // always true for values of FiniteLattice
    TaxonomyFlag pseudo_kleene;
    TaxonomyFlag de_morgan;         // distributive with involution
    TaxonomyFlag kleene;            // de_morgan and pseudo_kleene
    TaxonomyFlag paraorthomodular;
    TaxonomyFlag bz;                // pseudo_kleene with valid weak complement
    TaxonomyFlag pbz_star;
    TaxonomyFlag antiortholattice;
};

TaxonomyReport classify(const InvolutionStructure& S);

// Same universe with the order turned upside down. The involution survives
// (an order-reversing involution of L reverses the dual order too); the weak
// complement does not, so it is dropped.
InvolutionStructure dual(const InvolutionStructure& S);

// Either a bare lattice or one carrying an involution. Constructions and
// the expression evaluator pass these around so involutions propagate
// through sums whenever every input has one.
using Structure = std::variant<FiniteLattice, InvolutionStructure>;

const FiniteLattice& lattice_of(const Structure& s);
bool has_involution(const Structure& s);
// Null when the structure is a bare lattice.
const std::vector<int>* involution_of(const Structure& s);
const std::vector<int>* weak_of(const Structure& s);
int structure_size(const Structure& s);

}  // namespace lattica

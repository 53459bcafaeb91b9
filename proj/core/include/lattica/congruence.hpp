#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattica/involution.hpp"
#include "lattica/lattice.hpp"
#include "lattica/partition.hpp"

namespace lattica {

// Operation sets a congruence must respect. LAT and BLAT produce the same
// relations (nullary constants impose nothing); they differ for subuniverse
// checks, where the bounded signatures require 0 and 1 to be present.
enum class Sig { LAT, BLAT, ILAT, BILAT, BZ };

constexpr bool sig_has_involution(Sig s) { return s == Sig::ILAT || s == Sig::BILAT || s == Sig::BZ; }
constexpr bool sig_has_weak(Sig s) { return s == Sig::BZ; }
constexpr bool sig_has_bounds(Sig s) { return s == Sig::BLAT || s == Sig::BILAT || s == Sig::BZ; }
const char* sig_name(Sig s);
std::optional<Sig> sig_from_name(const std::string& name);

// Non-owning view of a finite algebra: the lattice plus whichever unary maps
// the signature mentions. Build through the make_algebra helpers, which
// check that every operation the signature needs is actually present.
struct AlgebraRef {
    const FiniteLattice* lat = nullptr;
    const std::vector<int>* inv = nullptr;   // set iff signature uses it
    const std::vector<int>* weak = nullptr;  // set iff signature uses it
    Sig sig = Sig::LAT;

    int size() const { return lat->size(); }
};

AlgebraRef make_algebra(const FiniteLattice& L, Sig sig);
AlgebraRef make_algebra(const InvolutionStructure& S, Sig sig);

// The set of congruences of one algebra, sorted by (block count, canonical
// block lists) so listings and reports are reproducible.
struct CongruenceSet {
    Sig sig = Sig::LAT;
    int n = 0;
    std::vector<Partition> members;

    size_t size() const { return members.size(); }
    bool contains(const Partition& p) const;
    bool operator==(const CongruenceSet& o) const { return n == o.n && members == o.members; }
};

// True when the partition respects every operation of the signature.
bool is_congruence(const AlgebraRef& A, const Partition& p);

// Smallest congruence identifying a and b: union-find closure propagating
// every signature operation over each merge event.
Partition principal_congruence(const AlgebraRef& A, int a, int b);

// Congruence join is the transitive closure of the union; exposed here
// because for congruences this equivalence join stays compatible.
Partition join_partitions(const Partition& a, const Partition& b);

// Every congruence, generated as the join closure of the principal ones.
CongruenceSet all_congruences(const AlgebraRef& A);
CongruenceSet all_congruences(const FiniteLattice& L, Sig sig = Sig::LAT);
CongruenceSet all_congruences(const InvolutionStructure& S, Sig sig);

inline constexpr int kOracleDefaultMax = 8;

// Independent oracle: walks every equivalence relation on the universe
// (restricted growth strings) and keeps the compatible ones. Exponential;
// refuses universes larger than `limit` with TooLargeError.
CongruenceSet brute_force_congruences(const AlgebraRef& A, int limit = kOracleDefaultMax);

// The relation { (inv(a), inv(b)) : a theta b }.
Partition involution_image(const Partition& theta, const std::vector<int>& inv);

// Members whose class of every listed constant is a singleton.
CongruenceSet fix_constants(const CongruenceSet& C, const std::vector<int>& constants);

// theta intersected with S x S, renumbered along sorted S. Throws
// NotSubalgebraError when S is not closed under the signature operations
// (for bounded signatures S must contain bottom and top).
Partition restrict_to_subuniverse(const AlgebraRef& A, const Partition& theta,
                                  const std::vector<int>& subuniverse);

bool is_simple(const AlgebraRef& A);

// Only the identity congruence keeps the bottom class a singleton.
bool is_0_regular(const FiniteLattice& L);

// The congruence set ordered by refinement, as a lattice on indices
// 0..|C|-1 in the set's canonical member order.
FiniteLattice refinement_lattice(const CongruenceSet& C);

bool conlattice_isomorphic(const CongruenceSet& a, const CongruenceSet& b);

}  // namespace lattica

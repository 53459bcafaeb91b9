#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattica/bitrows.hpp"
#include "lattica/errors.hpp"

namespace lattica {

// A finite bounded lattice on the universe {0, ..., n-1}.
//
// Values are immutable once built. Construction always runs the full
// validation pipeline: the relation must be a partial order in which every
// pair has a unique least upper bound and greatest lower bound, and the
// order must have a global bottom and top. Join and meet tables are filled
// in during that sweep, so lookups afterwards are table reads.
//
// The one-element lattice is permitted; its bottom and top coincide.
class FiniteLattice {
public:
    // Builds from a cover list: (x, y) means y covers x. The reflexive
    // transitive closure is taken first. Throws NotAPartialOrderError on a
    // cyclic input, UnboundedError when a global bound is missing, and
    // NotALatticeError when some pair has no unique lub or glb.
    static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    // Builds from a full order relation (leq must already be reflexive and
    // transitive); same validation and errors as from_covers.
    static FiniteLattice from_order(const BitMatrix& leq);

    int size() const { return n_; }
    bool leq(int x, int y) const { return leq_.get(x, y); }
    int join(int x, int y) const { return join_[static_cast<size_t>(x) * n_ + y]; }
    int meet(int x, int y) const { return meet_[static_cast<size_t>(x) * n_ + y]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    const BitMatrix& relation() const { return leq_; }

    // Cover pairs (x, y) with y covering x, sorted lexicographically.
    std::vector<std::pair<int, int>> covers() const;

    // Optional per-element display names. Empty when unset.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Structural equality: same universe size and same order relation.
    // Labels do not participate.
    bool operator==(const FiniteLattice& o) const { return n_ == o.n_ && leq_ == o.leq_; }

private:
    FiniteLattice() = default;

    int n_ = 0;
    BitMatrix leq_;
    std::vector<int> join_;
    std::vector<int> meet_;
    int bottom_ = 0;
    int top_ = 0;
    std::vector<std::string> labels_;
};

// A family of subsets of a fixed ground universe {0, ..., n-1}. Members are
// kept sorted (each subset ascending, the list of subsets lexicographic) so
// listings are deterministic.
struct SubsetFamily {
    int ground_n = 0;
    std::vector<std::vector<int>> members;

    bool contains(const std::vector<int>& subset) const;
    size_t size() const { return members.size(); }
};

// Same universe, order reversed; join and meet swap roles. Labels carry over.
FiniteLattice dual(const FiniteLattice& L);

// All filters (up-closed, meet-closed, nonempty subsets). In a finite
// lattice every filter is the principal filter of its least element, so the
// family is { up-set of a : a in L }.
SubsetFamily filters(const FiniteLattice& L);

// All ideals, dually.
SubsetFamily ideals(const FiniteLattice& L);

// Exhaustive triple checks. On failure the witness triple (x, y, z) is the
// lexicographically first violation.
struct TripleCheck {
    bool ok = true;
    int x = -1, y = -1, z = -1;
};
TripleCheck is_distributive(const FiniteLattice& L);
TripleCheck is_modular(const FiniteLattice& L);

// Order isomorphism search. Returns the mapping a -> b (as a vector indexed
// by elements of `a`) or nullopt. Deterministic: among all isomorphisms the
// lexicographically least mapping is returned, found by backtracking with
// invariant pruning (up-set size, down-set size, cover degrees).
std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

// True when the order is total.
bool is_chain(const FiniteLattice& L);

}  // namespace lattica

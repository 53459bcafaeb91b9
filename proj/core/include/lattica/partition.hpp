#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lattica {

// Disjoint-set forest with union by size and path halving.
struct UnionFind {
    std::vector<int> parent;
    std::vector<int> rank_;

    explicit UnionFind(int n) : parent(n), rank_(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns true when the two classes were distinct and got merged.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        rank_[a] += rank_[b];
        return true;
    }
};

// An equivalence relation on {0, ..., n-1} held in canonical form: the class
// identifier vector is a restricted growth string (cls[0] == 0 and each new
// class takes the next unused id), which is exactly "blocks ordered by least
// element". Two Partition values are equal iff they are the same relation.
class Partition {
public:
    Partition() = default;

    static Partition identity(int n);
    static Partition whole(int n);
    static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    // Accepts any class-id vector and normalizes it.
    static Partition from_class_ids(const std::vector<int>& raw);
    static Partition from_union_find(UnionFind& uf);

    int size() const { return static_cast<int>(cls_.size()); }
    int block_count() const { return nblocks_; }
    int class_id(int x) const { return cls_[x]; }
    bool same(int x, int y) const { return cls_[x] == cls_[y]; }
    const std::vector<int>& class_ids() const { return cls_; }

    // Blocks ordered by least element, elements ascending inside each.
    std::vector<std::vector<int>> blocks() const;

    // Transitive closure of the union: the least equivalence above both.
    Partition join(const Partition& o) const;
    // Common refinement: classes are the nonempty pairwise intersections.
    Partition meet(const Partition& o) const;
    // True when every block of *this lies inside a block of o.
    bool refines(const Partition& o) const;

    // Relabels the universe through the bijection f (x becomes f(x)).
    Partition map_through(const std::vector<int>& f) const;

    // Restriction to a sorted subset, renumbered to {0, ..., |S|-1}.
    Partition restrict(const std::vector<int>& sorted_subset) const;

    // "0 1|2 3|4" style rendering: blocks joined with '|'.
    std::string text() const;
    static Partition parse(int n, const std::string& text);

    bool operator==(const Partition& o) const { return cls_ == o.cls_; }
    // Orders by (block count, canonical block lists). Used for all sorted
    // congruence listings.
    bool operator<(const Partition& o) const;

private:
    std::vector<int> cls_;
    int nblocks_ = 0;
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int c : p.class_ids()) {
            h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace lattica

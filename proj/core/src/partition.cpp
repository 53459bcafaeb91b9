#include "lattica/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lattica/errors.hpp"

namespace lattica {
namespace {

// Renumber an arbitrary class-id vector into restricted growth form.
std::pair<std::vector<int>, int> normalize(const std::vector<int>& raw) {
    std::vector<int> out(raw.size());
    std::vector<int> seen;  // raw id -> new id, discovered in order
    std::vector<int> ids;
    for (size_t i = 0; i < raw.size(); ++i) {
        int id = raw[i];
        int found = -1;
        for (size_t k = 0; k < ids.size(); ++k)
            if (ids[k] == id) {
                found = static_cast<int>(k);
                break;
            }
        if (found < 0) {
            found = static_cast<int>(ids.size());
            ids.push_back(id);
        }
        out[i] = found;
    }
    return {out, static_cast<int>(ids.size())};
}

}  // namespace

Partition Partition::identity(int n) {
    Partition p;
    p.cls_.resize(n);
    for (int i = 0; i < n; ++i) p.cls_[i] = i;
    p.nblocks_ = n;
    return p;
}

Partition Partition::whole(int n) {
    Partition p;
    p.cls_.assign(n, 0);
    p.nblocks_ = n > 0 ? 1 : 0;
    return p;
}

Partition Partition::from_class_ids(const std::vector<int>& raw) {
    Partition p;
    auto [cls, k] = normalize(raw);
    p.cls_ = std::move(cls);
    p.nblocks_ = k;
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> raw(n, -1);
    int id = 0;
    for (const auto& b : blocks) {
        for (int x : b) {
            if (x < 0 || x >= n) throw DomainError("block element outside universe");
            if (raw[x] != -1) throw DomainError("element appears in two blocks");
            raw[x] = id;
        }
        ++id;
    }
    for (int i = 0; i < n; ++i)
        if (raw[i] == -1) throw DomainError("element missing from all blocks");
    return from_class_ids(raw);
}

Partition Partition::from_union_find(UnionFind& uf) {
    std::vector<int> raw(uf.parent.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = uf.find(static_cast<int>(i));
    return from_class_ids(raw);
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(nblocks_);
    for (int i = 0; i < size(); ++i) out[cls_[i]].push_back(i);
    return out;
}

Partition Partition::join(const Partition& o) const {
    UnionFind uf(size());
    // Linking each element to its block's first representative realizes the
    // union of both relations; the forest closes it transitively.
    std::vector<int> first_here(nblocks_, -1), first_there(o.nblocks_, -1);
    for (int i = 0; i < size(); ++i) {
        int& a = first_here[cls_[i]];
        if (a < 0) a = i; else uf.unite(a, i);
        int& b = first_there[o.cls_[i]];
        if (b < 0) b = i; else uf.unite(b, i);
    }
    return from_union_find(uf);
}

Partition Partition::meet(const Partition& o) const {
    std::vector<int> raw(size());
    for (int i = 0; i < size(); ++i) raw[i] = cls_[i] * (o.nblocks_ + 1) + o.cls_[i];
    return from_class_ids(raw);
}

bool Partition::refines(const Partition& o) const {
    std::vector<int> rep(nblocks_, -1);
    for (int i = 0; i < size(); ++i) {
        int& r = rep[cls_[i]];
        if (r < 0) r = i;
        else if (o.cls_[r] != o.cls_[i]) return false;
    }
    return true;
}

Partition Partition::map_through(const std::vector<int>& f) const {
    std::vector<int> raw(size());
    for (int i = 0; i < size(); ++i) raw[f[i]] = cls_[i];
    return from_class_ids(raw);
}

Partition Partition::restrict(const std::vector<int>& sorted_subset) const {
    std::vector<int> raw(sorted_subset.size());
    for (size_t k = 0; k < sorted_subset.size(); ++k) raw[k] = cls_[sorted_subset[k]];
    return from_class_ids(raw);
}

std::string Partition::text() const {
    std::ostringstream os;
    auto bl = blocks();
    for (size_t b = 0; b < bl.size(); ++b) {
        if (b) os << '|';
        for (size_t i = 0; i < bl[b].size(); ++i) {
            if (i) os << ' ';
            os << bl[b][i];
        }
    }
    return os.str();
}

Partition Partition::parse(int n, const std::string& text) {
    for (char c : text)
        if (c != '|' && c != ' ' && (c < '0' || c > '9'))
            throw DomainError("bad character in partition text");
    std::vector<std::vector<int>> blocks;
    std::istringstream bs(text);
    std::string part;
    while (std::getline(bs, part, '|')) {
        std::istringstream ws(part);
        std::vector<int> b;
        int v;
        while (ws >> v) b.push_back(v);
        blocks.push_back(std::move(b));
    }
    return from_blocks(n, blocks);
}

bool Partition::operator<(const Partition& o) const {
    if (nblocks_ != o.nblocks_) return nblocks_ < o.nblocks_;
    return blocks() < o.blocks();
}

}  // namespace lattica

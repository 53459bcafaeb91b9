#include "lattica/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace lattica {
namespace {

// Minimal elements of the set held in `mask` (as element list) under leq.
std::vector<int> minimal_of(const BitMatrix& leq, const std::vector<int>& set) {
    std::vector<int> out;
    for (int m : set) {
        bool minimal = true;
        for (int v : set) {
            if (v != m && leq.get(v, m)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

std::vector<int> maximal_of(const BitMatrix& leq, const std::vector<int>& set) {
    std::vector<int> out;
    for (int m : set) {
        bool maximal = true;
        for (int v : set) {
            if (v != m && leq.get(m, v)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(m);
    }
    return out;
}

}  // namespace

FiniteLattice FiniteLattice::from_order(const BitMatrix& leq) {
    const int n = leq.size();
    if (n <= 0) throw DomainError("lattice universe must be nonempty");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && leq.get(i, j) && leq.get(j, i))
                throw NotAPartialOrderError(i, j,
                    "relation is not antisymmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");

    int bottom = -1, top = -1;
    for (int i = 0; i < n; ++i) {
        if (leq.popcount_row(i) == n) bottom = i;
        bool is_top = true;
        for (int j = 0; j < n && is_top; ++j) is_top = leq.get(j, i);
        if (is_top) top = i;
    }
    if (bottom < 0 || top < 0) throw UnboundedError("order has no global bottom/top");

    FiniteLattice L;
    L.n_ = n;
    L.leq_ = leq;
    L.bottom_ = bottom;
    L.top_ = top;
    L.join_.assign(static_cast<size_t>(n) * n, -1);
    L.meet_.assign(static_cast<size_t>(n) * n, -1);

    std::vector<int> common;
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            // least upper bound: the unique minimal common upper bound
            common.clear();
            for (int u = 0; u < n; ++u)
                if (leq.get(x, u) && leq.get(y, u)) common.push_back(u);
            std::vector<int> mins = minimal_of(leq, common);
            if (mins.size() != 1)
                throw NotALatticeError(x, y, true, mins,
                    "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has " +
                    std::to_string(mins.size()) + " minimal upper bounds");
            L.join_[static_cast<size_t>(x) * n + y] = L.join_[static_cast<size_t>(y) * n + x] = mins[0];

            common.clear();
            for (int u = 0; u < n; ++u)
                if (leq.get(u, x) && leq.get(u, y)) common.push_back(u);
            std::vector<int> maxs = maximal_of(leq, common);
            if (maxs.size() != 1)
                throw NotALatticeError(x, y, false, maxs,
                    "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has " +
                    std::to_string(maxs.size()) + " maximal lower bounds");
            L.meet_[static_cast<size_t>(x) * n + y] = L.meet_[static_cast<size_t>(y) * n + x] = maxs[0];
        }
    }
    return L;
}

FiniteLattice FiniteLattice::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n <= 0) throw DomainError("lattice universe must be nonempty");
    BitMatrix leq(n);
    for (int i = 0; i < n; ++i) leq.set(i, i);
    for (auto [x, y] : covers) {
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw DomainError("cover pair (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") outside universe of size " + std::to_string(n));
        leq.set(x, y);
    }
    // Warshall closure on packed rows: if i <= k then everything above k is above i.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (leq.get(i, k)) leq.or_row(i, k);
    return from_order(leq);
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (x == y || !leq_.get(x, y)) continue;
            bool covered = true;
            for (int z = 0; z < n_ && covered; ++z)
                if (z != x && z != y && leq_.get(x, z) && leq_.get(z, y)) covered = false;
            if (covered) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void FiniteLattice::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw DomainError("label list size does not match universe size");
    labels_ = std::move(labels);
}

bool SubsetFamily::contains(const std::vector<int>& subset) const {
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    return std::binary_search(members.begin(), members.end(), s);
}

FiniteLattice dual(const FiniteLattice& L) {
    const int n = L.size();
    BitMatrix rev(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (L.leq(j, i)) rev.set(i, j);
    FiniteLattice D = FiniteLattice::from_order(rev);
    D.set_labels(L.labels());
    return D;
}

SubsetFamily filters(const FiniteLattice& L) {
    SubsetFamily fam;
    fam.ground_n = L.size();
    for (int a = 0; a < L.size(); ++a) {
        std::vector<int> up;
        for (int x = 0; x < L.size(); ++x)
            if (L.leq(a, x)) up.push_back(x);
        fam.members.push_back(std::move(up));
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

SubsetFamily ideals(const FiniteLattice& L) {
    SubsetFamily fam;
    fam.ground_n = L.size();
    for (int a = 0; a < L.size(); ++a) {
        std::vector<int> down;
        for (int x = 0; x < L.size(); ++x)
            if (L.leq(x, a)) down.push_back(x);
        fam.members.push_back(std::move(down));
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

TripleCheck is_distributive(const FiniteLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
                    return {false, x, y, z};
    return {};
}

TripleCheck is_modular(const FiniteLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (!L.leq(x, z)) continue;
                if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z))
                    return {false, x, y, z};
            }
    return {};
}

namespace {

// Per-element fingerprint preserved by any order isomorphism.
struct Invariant {
    int up, down, covers_up, covers_down;
    auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const FiniteLattice& L) {
    const int n = L.size();
    std::vector<Invariant> inv(n);
    auto cov = L.covers();
    std::vector<int> cup(n, 0), cdown(n, 0);
    for (auto [x, y] : cov) {
        ++cup[x];
        ++cdown[y];
    }
    for (int i = 0; i < n; ++i) {
        int up = 0, down = 0;
        for (int j = 0; j < n; ++j) {
            if (L.leq(i, j)) ++up;
            if (L.leq(j, i)) ++down;
        }
        inv[i] = {up, down, cup[i], cdown[i]};
    }
    return inv;
}

bool extend(const FiniteLattice& a, const FiniteLattice& b,
            const std::vector<Invariant>& ia, const std::vector<Invariant>& ib,
            std::vector<int>& map, std::vector<char>& used, int next) {
    const int n = a.size();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || ia[next] != ib[cand]) continue;
        bool fits = true;
        for (int prev = 0; prev < next && fits; ++prev) {
            if (a.leq(next, prev) != b.leq(cand, map[prev])) fits = false;
            if (a.leq(prev, next) != b.leq(map[prev], cand)) fits = false;
        }
        if (!fits) continue;
        map[next] = cand;
        used[cand] = 1;
        if (extend(a, b, ia, ib, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    auto ia = invariants(a), ib = invariants(b);
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    // Candidates are tried in ascending index order, so the first complete
    // assignment is the lexicographically least isomorphism.
    if (extend(a, b, ia, ib, map, used, 0)) return map;
    return std::nullopt;
}

bool is_chain(const FiniteLattice& L) {
    for (int i = 0; i < L.size(); ++i)
        for (int j = i + 1; j < L.size(); ++j)
            if (!L.leq(i, j) && !L.leq(j, i)) return false;
    return true;
}

}  // namespace lattica

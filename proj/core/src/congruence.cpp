#include "lattica/congruence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace lattica {

const char* sig_name(Sig s) {
    switch (s) {
        case Sig::LAT: return "lat";
        case Sig::BLAT: return "blat";
        case Sig::ILAT: return "ilat";
        case Sig::BILAT: return "bilat";
        case Sig::BZ: return "bz";
    }
    return "?";
}

std::optional<Sig> sig_from_name(const std::string& name) {
    if (name == "lat") return Sig::LAT;
    if (name == "blat") return Sig::BLAT;
    if (name == "ilat") return Sig::ILAT;
    if (name == "bilat") return Sig::BILAT;
    if (name == "bz") return Sig::BZ;
    return std::nullopt;
}

AlgebraRef make_algebra(const FiniteLattice& L, Sig sig) {
    if (sig_has_involution(sig))
        throw SignatureMismatchError(std::string("signature ") + sig_name(sig) +
                                     " needs an involution, but a bare lattice was given");
    return {&L, nullptr, nullptr, sig};
}

AlgebraRef make_algebra(const InvolutionStructure& S, Sig sig) {
    AlgebraRef A{&S.lattice, nullptr, nullptr, sig};
    if (sig_has_involution(sig)) A.inv = &S.inv;
    if (sig_has_weak(sig)) {
        if (!S.brouwer)
            throw MissingBrouwerError("signature bz needs a weak complement, but none is present");
        A.weak = &*S.brouwer;
    }
    return A;
}

bool CongruenceSet::contains(const Partition& p) const {
    return std::binary_search(members.begin(), members.end(), p,
                              [](const Partition& a, const Partition& b) { return a < b; });
}

namespace {

// Closure of a seed pair set under all signature operations. Each actual
// merge event (x, y) is queued once; propagating events along chains is
// complete because compatibility composes transitively.
Partition close_pairs(const AlgebraRef& A, std::deque<std::pair<int, int>> work, UnionFind& uf) {
    const FiniteLattice& L = *A.lat;
    const int n = L.size();
    auto merge = [&](int x, int y) {
        if (uf.unite(x, y)) work.emplace_back(x, y);
    };
    // Seed pairs may not have been united yet.
    std::deque<std::pair<int, int>> seeds;
    seeds.swap(work);
    for (auto [x, y] : seeds) merge(x, y);

    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (int z = 0; z < n; ++z) {
            merge(L.join(x, z), L.join(y, z));
            merge(L.meet(x, z), L.meet(y, z));
        }
        if (A.inv) merge((*A.inv)[x], (*A.inv)[y]);
        if (A.weak) merge((*A.weak)[x], (*A.weak)[y]);
    }
    return Partition::from_union_find(uf);
}

}  // namespace

Partition principal_congruence(const AlgebraRef& A, int a, int b) {
    const int n = A.size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw DomainError("generator pair outside universe");
    UnionFind uf(n);
    return close_pairs(A, {{a, b}}, uf);
}

Partition join_partitions(const Partition& a, const Partition& b) {
    return a.join(b);
}

CongruenceSet all_congruences(const AlgebraRef& A) {
    const int n = A.size();

    std::unordered_set<Partition, PartitionHash> seen;
    std::vector<Partition> principals;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Partition p = principal_congruence(A, a, b);
            if (seen.insert(p).second) principals.push_back(p);
        }
    seen.insert(Partition::identity(n));

    // Join closure against principals only: every congruence is the join of
    // the principal congruences below it, so this reaches all of them.
    std::deque<Partition> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Partition t = std::move(work.front());
        work.pop_front();
        for (const Partition& p : principals) {
            Partition j = t.join(p);
            if (seen.insert(j).second) work.push_back(j);
        }
    }

    CongruenceSet out;
    out.sig = A.sig;
    out.n = n;
    out.members.assign(seen.begin(), seen.end());
    std::sort(out.members.begin(), out.members.end());
    return out;
}

CongruenceSet all_congruences(const FiniteLattice& L, Sig sig) {
    return all_congruences(make_algebra(L, sig));
}

CongruenceSet all_congruences(const InvolutionStructure& S, Sig sig) {
    return all_congruences(make_algebra(S, sig));
}

namespace {

bool compatible(const AlgebraRef& A, const std::vector<int>& cls) {
    const FiniteLattice& L = *A.lat;
    const int n = L.size();
    // Checking each element against its block's first representative covers
    // all pairs by transitivity.
    std::vector<int> rep(n, -1);
    for (int x = 0; x < n; ++x) {
        int& r = rep[cls[x]];
        if (r < 0) {
            r = x;
            continue;
        }
        int y = r;
        for (int z = 0; z < n; ++z) {
            if (cls[L.join(x, z)] != cls[L.join(y, z)]) return false;
            if (cls[L.meet(x, z)] != cls[L.meet(y, z)]) return false;
        }
        if (A.inv && cls[(*A.inv)[x]] != cls[(*A.inv)[y]]) return false;
        if (A.weak && cls[(*A.weak)[x]] != cls[(*A.weak)[y]]) return false;
    }
    return true;
}

}  // namespace

bool is_congruence(const AlgebraRef& A, const Partition& p) {
    if (p.size() != A.size()) throw DomainError("partition universe does not match algebra");
    return compatible(A, p.class_ids());
}

CongruenceSet brute_force_congruences(const AlgebraRef& A, int limit) {
    const int n = A.size();
    if (n > limit)
        throw TooLargeError(n, limit,
                            "universe of " + std::to_string(n) +
                            " exceeds the brute-force cap of " + std::to_string(limit));

    CongruenceSet out;
    out.sig = A.sig;
    out.n = n;

    // Restricted growth strings enumerate every set partition exactly once:
    // a[0] == 0 and a[i] <= max(a[0..i-1]) + 1.
    std::vector<int> a(n, 0), m(n, 0);
    while (true) {
        if (compatible(A, a)) out.members.push_back(Partition::from_class_ids(a));
        int i = n - 1;
        while (i > 0 && a[i] == m[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        m[i] = std::max(m[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            m[j] = m[j - 1];
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Partition involution_image(const Partition& theta, const std::vector<int>& inv) {
    return theta.map_through(inv);
}

CongruenceSet fix_constants(const CongruenceSet& C, const std::vector<int>& constants) {
    CongruenceSet out;
    out.sig = C.sig;
    out.n = C.n;
    for (const Partition& p : C.members) {
        bool keep = true;
        auto bl = p.blocks();
        for (int c : constants)
            if (bl[p.class_id(c)].size() != 1) {
                keep = false;
                break;
            }
        if (keep) out.members.push_back(p);
    }
    return out;
}

Partition restrict_to_subuniverse(const AlgebraRef& A, const Partition& theta,
                                  const std::vector<int>& subuniverse) {
    const FiniteLattice& L = *A.lat;
    std::vector<int> S = subuniverse;
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.empty()) throw DomainError("subuniverse must be nonempty");

    std::vector<char> in(L.size(), 0);
    for (int x : S) {
        if (x < 0 || x >= L.size()) throw DomainError("subuniverse element outside universe");
        in[x] = 1;
    }
    auto check = [&](int x, int y, int img) {
        if (!in[img])
            throw NotSubalgebraError(x, y, img,
                "operations escape the subset at (" + std::to_string(x) + ", " + std::to_string(y) +
                ") -> " + std::to_string(img));
    };
    for (int x : S)
        for (int y : S) {
            check(x, y, L.join(x, y));
            check(x, y, L.meet(x, y));
        }
    if (A.inv)
        for (int x : S) check(x, x, (*A.inv)[x]);
    if (A.weak)
        for (int x : S) check(x, x, (*A.weak)[x]);
    if (sig_has_bounds(A.sig)) {
        if (!in[L.bottom()]) throw NotSubalgebraError(L.bottom(), L.bottom(), L.bottom(),
                                                      "bounded signature: subset misses bottom");
        if (!in[L.top()]) throw NotSubalgebraError(L.top(), L.top(), L.top(),
                                                   "bounded signature: subset misses top");
    }
    return theta.restrict(S);
}

bool is_simple(const AlgebraRef& A) {
    return all_congruences(A).size() <= 2;
}

bool is_0_regular(const FiniteLattice& L) {
    CongruenceSet C = all_congruences(L, Sig::LAT);
    CongruenceSet fixed = fix_constants(C, {L.bottom()});
    return fixed.size() == 1 && fixed.members[0] == Partition::identity(L.size());
}

FiniteLattice refinement_lattice(const CongruenceSet& C) {
    const int k = static_cast<int>(C.members.size());
    BitMatrix leq(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (C.members[i].refines(C.members[j])) leq.set(i, j);
    return FiniteLattice::from_order(leq);
}

bool conlattice_isomorphic(const CongruenceSet& a, const CongruenceSet& b) {
    if (a.size() != b.size()) return false;
    return is_isomorphic(refinement_lattice(a), refinement_lattice(b)).has_value();
}

}  // namespace lattica

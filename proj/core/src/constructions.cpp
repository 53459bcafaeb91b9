#include "lattica/constructions.hpp"

#include <algorithm>

namespace lattica {

FiniteLattice chain(int n) {
    if (n < 1) throw DomainError("chain needs at least one element");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return FiniteLattice::from_covers(n, covers);
}

InvolutionStructure boolean_algebra(int k) {
    if (k < 0 || k > 20) throw DomainError("powerset exponent must be in 0..20");
    const int n = 1 << k;
    BitMatrix leq(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((x & y) == x) leq.set(x, y);
    FiniteLattice L = FiniteLattice::from_order(leq);
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[x] = ~x & (n - 1);
    return validate_involution(std::move(L), std::move(inv));
}

FiniteLattice m_lattice(int k) {
    if (k < 1) throw DomainError("midpoint count must be at least 1");
    std::vector<Structure> parts(static_cast<size_t>(k), Structure{chain(3)});
    return lattice_of(horizontal_sum(parts).result);
}

SumWitness ordinal_sum(const FiniteLattice& L, const FiniteLattice& M) {
    const int nL = L.size(), nM = M.size();
    const int n = nL + nM - 1;

    std::vector<int> embL(nL), embM(nM);
    for (int i = 0; i < nL; ++i) embL[i] = i;
    int next = nL;
    for (int j = 0; j < nM; ++j) embM[j] = (j == M.bottom()) ? L.top() : next++;

    BitMatrix leq(n);
    for (int x = 0; x < nL; ++x)
        for (int y = 0; y < nL; ++y)
            if (L.leq(x, y)) leq.set(x, y);
    for (int x = 0; x < nM; ++x)
        for (int y = 0; y < nM; ++y)
            if (M.leq(x, y)) leq.set(embM[x], embM[y]);
    // everything in the lower summand sits below everything in the upper one
    for (int x = 0; x < nL; ++x)
        for (int y = 0; y < nM; ++y)
            leq.set(x, embM[y]);

    return SumWitness{FiniteLattice::from_order(leq),
                      {std::move(embL), std::move(embM)},
                      {GluedClass{L.top(), {{0, L.top()}, {1, M.bottom()}}}}};
}

Partition congruence_osum(const Partition& alpha, const Partition& beta, const SumWitness& W) {
    if (W.embeddings.size() != 2)
        throw DomainError("witness does not come from a two-summand ordinal sum");
    const auto& embL = W.embeddings[0];
    const auto& embM = W.embeddings[1];
    if (alpha.size() != static_cast<int>(embL.size()) ||
        beta.size() != static_cast<int>(embM.size()))
        throw DomainError("partition sizes do not match the summands");

    const FiniteLattice& R = lattice_of(W.result);
    UnionFind uf(R.size());
    for (int x = 0; x < alpha.size(); ++x)
        for (int y = x + 1; y < alpha.size(); ++y)
            if (alpha.same(x, y)) uf.unite(embL[x], embL[y]);
    for (int x = 0; x < beta.size(); ++x)
        for (int y = x + 1; y < beta.size(); ++y)
            if (beta.same(x, y)) uf.unite(embM[x], embM[y]);
    Partition out = Partition::from_union_find(uf);

    // The composite restricts back to alpha and beta, so it is compatible
    // exactly when both inputs are congruences of their summands.
    if (!is_congruence(make_algebra(R, Sig::LAT), out))
        throw NotACongruenceError("inputs are not congruences of the summands");
    return out;
}

SumWitness horizontal_sum(const std::vector<Structure>& parts) {
    if (parts.empty()) throw DomainError("horizontal sum of an empty list");
    for (const Structure& p : parts)
        if (structure_size(p) < 2)
            throw TrivialSummandError("every summand needs at least two elements");

    int n = 2;
    for (const Structure& p : parts) n += structure_size(p) - 2;

    std::vector<std::vector<int>> embs;
    int next = 2;
    for (const Structure& p : parts) {
        const FiniteLattice& P = lattice_of(p);
        std::vector<int> e(P.size());
        for (int x = 0; x < P.size(); ++x) {
            if (x == P.bottom()) e[x] = 0;
            else if (x == P.top()) e[x] = 1;
            else e[x] = next++;
        }
        embs.push_back(std::move(e));
    }

    BitMatrix leq(n);
    for (int u = 0; u < n; ++u) {
        leq.set(u, u);
        leq.set(0, u);
        leq.set(u, 1);
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        const FiniteLattice& P = lattice_of(parts[i]);
        for (int x = 0; x < P.size(); ++x)
            for (int y = 0; y < P.size(); ++y)
                if (P.leq(x, y)) leq.set(embs[i][x], embs[i][y]);
    }
    FiniteLattice R = FiniteLattice::from_order(leq);

    GluedClass bottoms{0, {}}, tops{1, {}};
    for (size_t i = 0; i < parts.size(); ++i) {
        bottoms.sources.emplace_back(static_cast<int>(i), lattice_of(parts[i]).bottom());
        tops.sources.emplace_back(static_cast<int>(i), lattice_of(parts[i]).top());
    }

    bool all_inv = std::all_of(parts.begin(), parts.end(),
                               [](const Structure& p) { return has_involution(p); });
    std::optional<std::vector<int>> inv;
    if (all_inv) {
        inv.emplace(n, -1);
        (*inv)[0] = 1;
        (*inv)[1] = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            const auto& pi = *involution_of(parts[i]);
            const FiniteLattice& P = lattice_of(parts[i]);
            for (int x = 0; x < P.size(); ++x)
                if (x != P.bottom() && x != P.top()) (*inv)[embs[i][x]] = embs[i][pi[x]];
        }
    }
    return SumWitness{inv ? Structure{validate_involution(std::move(R), std::move(*inv))}
                          : Structure{std::move(R)},
                      std::move(embs),
                      {std::move(bottoms), std::move(tops)}};
}

SumWitness bound_B(const Structure& S) {
    const FiniteLattice& L = lattice_of(S);
    const int n = L.size();
    BitMatrix leq(n + 2);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y)) leq.set(x, y);
    for (int u = 0; u < n + 2; ++u) {
        leq.set(u, u);
        leq.set(n, u);      // fresh bottom
        leq.set(u, n + 1);  // fresh top
    }
    FiniteLattice R = FiniteLattice::from_order(leq);

    std::vector<int> emb(n);
    for (int i = 0; i < n; ++i) emb[i] = i;
    std::optional<std::vector<int>> inv;
    if (has_involution(S)) {
        inv = *involution_of(S);
        inv->push_back(n + 1);
        inv->push_back(n);
    }
    return SumWitness{inv ? Structure{validate_involution(std::move(R), std::move(*inv))}
                          : Structure{std::move(R)},
                      {std::move(emb)},
                      {}};
}

SandwichWitness sandwich_with_witness(const FiniteLattice& L,
                                      const std::optional<InvolutionStructure>& K) {
    FiniteLattice mid = K ? K->lattice : chain(1);
    std::vector<int> mid_inv = K ? K->inv : std::vector<int>{0};

    SumWitness W1 = ordinal_sum(L, mid);
    FiniteLattice D = dual(L);
    SumWitness W2 = ordinal_sum(lattice_of(W1.result), D);

    const auto& e_mid = W1.embeddings[1];
    const auto& e_high = W2.embeddings[1];
    FiniteLattice R = lattice_of(W2.result);
    const int n = R.size();

    std::vector<int> inv(n, -1);
    for (int i = 0; i < L.size(); ++i) {
        inv[i] = e_high[i];
        inv[e_high[i]] = i;
    }
    // Middle elements map through the middle involution; this rewrites the
    // two glue points consistently (bottom of the middle is L's top, whose
    // image is the middle's top glued into the upper copy).
    for (int j = 0; j < mid.size(); ++j) inv[e_mid[j]] = e_mid[mid_inv[j]];

    SandwichWitness out{validate_involution(std::move(R), std::move(inv)),
                        W2.embeddings[0], e_mid, e_high};
    out.emb_low.resize(L.size());
    for (int i = 0; i < L.size(); ++i) out.emb_low[i] = i;
    return out;
}

InvolutionStructure sandwich(const FiniteLattice& L,
                             const std::optional<InvolutionStructure>& K) {
    return sandwich_with_witness(L, K).result;
}

InvolutionStructure aol_sandwich(const InvolutionStructure& K) {
    if (Witnessed w = is_pseudo_kleene(K); !w.ok)
        throw NotPseudoKleeneError("middle structure must satisfy the pseudo-Kleene inequality; "
                                   "witness pair (" + std::to_string(w.witness[0]) + ", " +
                                   std::to_string(w.witness[1]) + ")");
    InvolutionStructure S = sandwich(chain(2), K);
    std::vector<int> weak = trivial_brouwer(S.lattice);
    return validate_involution(std::move(S.lattice), std::move(S.inv), std::move(weak));
}

const char* step_variant_name(StepVariant v) {
    switch (v) {
        case StepVariant::PLAIN: return "plain";
        case StepVariant::KLEENE: return "kleene";
        case StepVariant::DOUBLE3: return "double3";
    }
    return "?";
}

std::optional<StepVariant> step_variant_from_name(const std::string& name) {
    if (name == "plain") return StepVariant::PLAIN;
    if (name == "kleene") return StepVariant::KLEENE;
    if (name == "double3") return StepVariant::DOUBLE3;
    return std::nullopt;
}

SumWitness step(const Structure& M, StepVariant v) {
    const FiniteLattice& L = lattice_of(M);
    const int n = L.size();
    const int z0 = n, z1 = n + 1, a = n + 2, b = n + 3;

    if (v != StepVariant::PLAIN && !has_involution(M))
        throw SignatureMismatchError("involution step variants need an involution on the input");

    BitMatrix leq(n + 4);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y)) leq.set(x, y);
    for (int u = 0; u < n + 4; ++u) {
        leq.set(u, u);
        leq.set(z0, u);
        leq.set(u, z1);
    }
    FiniteLattice R = FiniteLattice::from_order(leq);

    std::vector<int> emb_bounded(n + 2), emb_square{z0, a, b, z1};
    for (int i = 0; i < n + 2; ++i) emb_bounded[i] = i;

    std::optional<std::vector<int>> inv;
    if (v != StepVariant::PLAIN) {
        inv = *involution_of(M);
        inv->resize(n + 4);
        (*inv)[z0] = z1;
        (*inv)[z1] = z0;
        if (v == StepVariant::KLEENE) {
            (*inv)[a] = b;
            (*inv)[b] = a;
        } else {
            (*inv)[a] = a;
            (*inv)[b] = b;
        }
    }
    return SumWitness{inv ? Structure{validate_involution(std::move(R), std::move(*inv))}
                          : Structure{std::move(R)},
                      {std::move(emb_bounded), std::move(emb_square)},
                      {GluedClass{z0, {{0, n}, {1, 0}}}, GluedClass{z1, {{0, n + 1}, {1, 3}}}}};
}

TowerFamily tower(const Structure& seed, int steps, StepVariant v) {
    if (structure_size(seed) < 2) throw TrivialSeedError("tower seed must have at least two elements");
    if (steps < 0) throw DomainError("step count must be nonnegative");
    if (v != StepVariant::PLAIN && !has_involution(seed))
        throw SignatureMismatchError("involution step variants need an involution on the seed");

    TowerFamily F;
    F.variant = v;
    if (v == StepVariant::PLAIN)
        F.members.push_back(lattice_of(seed));
    else
        F.members.push_back(seed);
    for (int i = 0; i < steps; ++i) F.members.push_back(step(F.members.back(), v).result);
    return F;
}

namespace {

const std::vector<int>* member_involution(const TowerFamily& F, size_t i, Sig sig) {
    if (!sig_has_involution(sig)) return nullptr;
    const std::vector<int>* inv = involution_of(F.members[i]);
    if (!inv)
        throw SignatureMismatchError("signature needs an involution, but a family member lacks one");
    return inv;
}

}  // namespace

Witnessed check_condition_s(const TowerFamily& F, Sig sig) {
    for (size_t i = 0; i < F.members.size(); ++i)
        for (size_t j = i + 1; j < F.members.size(); ++j) {
            const FiniteLattice& A = lattice_of(F.members[i]);
            const FiniteLattice& B = lattice_of(F.members[j]);
            const int ni = A.size();
            if (ni >= B.size())
                return {false, {static_cast<int>(i), static_cast<int>(j)},
                        "universe is not a proper prefix of the later member"};
            for (int x = 0; x < ni; ++x)
                for (int y = 0; y < ni; ++y) {
                    if (B.join(x, y) != A.join(x, y) || B.meet(x, y) != A.meet(x, y))
                        return {false, {static_cast<int>(i), static_cast<int>(j), x, y},
                                "lattice operations disagree on the smaller universe"};
                }
            if (sig_has_involution(sig)) {
                const auto& ia = *member_involution(F, i, sig);
                const auto& ib = *member_involution(F, j, sig);
                for (int x = 0; x < ni; ++x)
                    if (ia[x] != ib[x])
                        return {false, {static_cast<int>(i), static_cast<int>(j), x},
                                "involutions disagree on the smaller universe"};
            }
            if (sig_has_weak(sig)) {
                const std::vector<int>* wa = weak_of(F.members[i]);
                const std::vector<int>* wb = weak_of(F.members[j]);
                if (!wa || !wb)
                    return {false, {static_cast<int>(i), static_cast<int>(j)},
                            "signature needs weak complements on both members"};
                for (int x = 0; x < ni; ++x)
                    if ((*wa)[x] != (*wb)[x])
                        return {false, {static_cast<int>(i), static_cast<int>(j), x},
                                "weak complements disagree on the smaller universe"};
            }
            if (sig_has_bounds(sig)) {
                if (B.bottom() >= ni || B.top() >= ni ||
                    B.bottom() != A.bottom() || B.top() != A.top())
                    return {false, {static_cast<int>(i), static_cast<int>(j)},
                            "bounded signature: bounds of the later member leave the smaller universe"};
            }
        }
    return {};
}

Witnessed check_condition_c(const TowerFamily& F, Sig sig) {
    if (Witnessed s = check_condition_s(F, sig); !s.ok)
        throw ConditionSViolatedError("subalgebra chain condition fails: " + s.note);

    for (size_t j = 0; j < F.members.size(); ++j) {
        const FiniteLattice& B = lattice_of(F.members[j]);
        const int nj = B.size();

        std::vector<Partition> expected;
        expected.push_back(Partition::identity(nj));
        expected.push_back(Partition::whole(nj));
        for (size_t i = 0; i < j; ++i) {
            const int ni = lattice_of(F.members[i]).size();
            std::vector<int> cls(nj);
            for (int x = 0; x < nj; ++x) cls[x] = x < ni ? 0 : x - ni + 1;
            expected.push_back(Partition::from_class_ids(cls));
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

        AlgebraRef A{&B, nullptr, nullptr, sig};
        if (sig_has_involution(sig)) A.inv = member_involution(F, j, sig);
        if (sig_has_weak(sig)) {
            A.weak = weak_of(F.members[j]);
            if (!A.weak)
                throw MissingBrouwerError("signature bz needs a weak complement on every member");
        }
        CongruenceSet got = all_congruences(A);
        if (got.members != expected)
            return {false, {static_cast<int>(j)},
                    "member " + std::to_string(j) + " has " + std::to_string(got.size()) +
                        " congruences where " + std::to_string(expected.size()) + " were expected"};
    }
    return {};
}

}  // namespace lattica

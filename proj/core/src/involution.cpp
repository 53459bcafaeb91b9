#include "lattica/involution.hpp"

#include <utility>

namespace lattica {
namespace {

// Weak-complement axioms, reported as a witnessed predicate so both the
// validator (throwing) and is_pbz_star (witnessing) share one sweep.
Witnessed weak_axioms(const FiniteLattice& L, const std::vector<int>& inv,
                      const std::vector<int>& weak) {
    const int n = L.size();
    for (int x = 0; x < n; ++x) {
        if (L.meet(x, weak[x]) != L.bottom())
            return {false, {x}, "x meet weak(x) is not bottom"};
    }
    for (int x = 0; x < n; ++x) {
        int ww = weak[weak[x]];
        if (!L.leq(x, ww) || ww != inv[weak[x]])
            return {false, {x}, "weak(weak(x)) must lie above x and equal inv(weak(x))"};
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y) && !L.leq(weak[y], weak[x]))
                return {false, {x, y}, "weak complement is not order-reversing"};
    return {};
}

}  // namespace

InvolutionStructure validate_involution(FiniteLattice L, std::vector<int> inv,
                                        std::optional<std::vector<int>> weak) {
    const int n = L.size();
    if (static_cast<int>(inv.size()) != n)
        throw DomainError("involution map size does not match universe");
    for (int x = 0; x < n; ++x)
        if (inv[x] < 0 || inv[x] >= n)
            throw DomainError("involution map leaves the universe");
    for (int x = 0; x < n; ++x)
        if (inv[inv[x]] != x)
            throw NotInvolutiveError(x, "inv(inv(" + std::to_string(x) + ")) != " + std::to_string(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y) && !L.leq(inv[y], inv[x]))
                throw NotOrderReversingError(x, y,
                    "x <= y but inv(y) <= inv(x) fails at (" + std::to_string(x) + ", " +
                    std::to_string(y) + ")");
    if (weak) {
        if (static_cast<int>(weak->size()) != n)
            throw DomainError("weak complement map size does not match universe");
        for (int x = 0; x < n; ++x)
            if ((*weak)[x] < 0 || (*weak)[x] >= n)
                throw DomainError("weak complement map leaves the universe");
        Witnessed w = weak_axioms(L, inv, *weak);
        if (!w.ok) throw BrouwerAxiomError(w.witness[0], w.note);
    }
    return {std::move(L), std::move(inv), std::move(weak)};
}

std::vector<int> trivial_brouwer(const FiniteLattice& L) {
    std::vector<int> weak(L.size(), L.bottom());
    weak[L.bottom()] = L.top();
    return weak;
}

Witnessed is_pseudo_kleene(const InvolutionStructure& S) {
    const auto& L = S.lattice;
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!L.leq(L.meet(x, S.inv[x]), L.join(y, S.inv[y])))
                return {false, {x, y}, "x meet inv(x) is not below y join inv(y)"};
    return {};
}

Witnessed is_paraorthomodular(const InvolutionStructure& S) {
    const auto& L = S.lattice;
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y) && L.meet(S.inv[x], y) == L.bottom() && x != y)
                return {false, {x, y}, "x < y with inv(x) meet y == bottom"};
    return {};
}

Witnessed is_pbz_star(const InvolutionStructure& S) {
    if (!S.brouwer) throw MissingBrouwerError("structure carries no weak complement");
    const auto& L = S.lattice;
    const auto& weak = *S.brouwer;

    if (Witnessed w = is_pseudo_kleene(S); !w.ok) return w;
    if (Witnessed w = weak_axioms(L, S.inv, weak); !w.ok) return w;
    if (Witnessed w = is_paraorthomodular(S); !w.ok) return w;
    for (int x = 0; x < L.size(); ++x)
        if (weak[L.meet(x, S.inv[x])] != L.join(weak[x], weak[S.inv[x]]))
            return {false, {x}, "weak(x meet inv(x)) != weak(x) join weak(inv(x))"};
    return {};
}

Witnessed is_antiortholattice(const InvolutionStructure& S) {
    if (Witnessed w = is_pbz_star(S); !w.ok) return w;
    const auto& L = S.lattice;
    for (int x = 0; x < L.size(); ++x) {
        if (x == L.bottom() || x == L.top()) continue;
        if (L.join(x, S.inv[x]) == L.top() && L.meet(x, S.inv[x]) == L.bottom())
            return {false, {x}, "interior element is complemented by its involution image"};
    }
    return {};
}

InvolutionStructure dual(const InvolutionStructure& S) {
    return validate_involution(dual(S.lattice), S.inv);
}

const FiniteLattice& lattice_of(const Structure& s) {
    if (const auto* L = std::get_if<FiniteLattice>(&s)) return *L;
    return std::get<InvolutionStructure>(s).lattice;
}

bool has_involution(const Structure& s) {
    return std::holds_alternative<InvolutionStructure>(s);
}

const std::vector<int>* involution_of(const Structure& s) {
    if (const auto* I = std::get_if<InvolutionStructure>(&s)) return &I->inv;
    return nullptr;
}

const std::vector<int>* weak_of(const Structure& s) {
    if (const auto* I = std::get_if<InvolutionStructure>(&s))
        if (I->brouwer) return &*I->brouwer;
    return nullptr;
}

int structure_size(const Structure& s) {
    return lattice_of(s).size();
}

TaxonomyReport classify(const InvolutionStructure& S) {
    TaxonomyReport r;
    const auto& L = S.lattice;
    const int n = L.size();

    r.involutive.ok = true;
    for (int x = 0; x < n && r.involutive.ok; ++x)
        if (S.inv[S.inv[x]] != x) r.involutive = {false, {x}, "not involutive"};
    for (int x = 0; x < n && r.involutive.ok; ++x)
        for (int y = 0; y < n; ++y)
            if (L.leq(x, y) && !L.leq(S.inv[y], S.inv[x])) {
                r.involutive = {false, {x, y}, "not order-reversing"};
                break;
            }

    r.bounded.ok = true;  // FiniteLattice values are bounded by construction

    auto from = [](const Witnessed& w) { return TaxonomyFlag{w.ok, w.witness, w.note}; };
    r.pseudo_kleene = from(is_pseudo_kleene(S));

    TripleCheck d = is_distributive(L);
    if (d.ok) {
        r.de_morgan.ok = true;
    } else {
        r.de_morgan = {false, {d.x, d.y, d.z}, "lattice is not distributive"};
    }
    if (r.de_morgan.ok && r.pseudo_kleene.ok) {
        r.kleene.ok = true;
    } else {
        r.kleene = r.de_morgan.ok ? TaxonomyFlag{false, r.pseudo_kleene.witness, r.pseudo_kleene.note}
                                  : TaxonomyFlag{false, r.de_morgan.witness, r.de_morgan.note};
    }

    r.paraorthomodular = from(is_paraorthomodular(S));

    if (!S.brouwer) {
        r.bz = {false, {}, "no weak complement present"};
        r.pbz_star = {false, {}, "no weak complement present"};
        r.antiortholattice = {false, {}, "no weak complement present"};
        return r;
    }

    Witnessed ax = weak_axioms(L, S.inv, *S.brouwer);
    if (r.pseudo_kleene.ok && ax.ok) {
        r.bz.ok = true;
    } else {
        r.bz = r.pseudo_kleene.ok ? from(ax)
                                  : TaxonomyFlag{false, r.pseudo_kleene.witness, r.pseudo_kleene.note};
    }
    r.pbz_star = from(is_pbz_star(S));
    r.antiortholattice = from(is_antiortholattice(S));
    return r;
}

}  // namespace lattica

#include "lattica/corpus.hpp"

#include <cstdio>
#include <random>

#include "lattica/constructions.hpp"

namespace lattica {

std::vector<FiniteLattice> random_cover_lattices(int count, int max_n, uint32_t seed) {
    if (max_n < 3) throw DomainError("random lattices need room for at least three elements");
    std::mt19937 rng(seed);
    // Raw engine output with modulo keeps the stream portable; the standard
    // distributions are not pinned down across library implementations.
    auto draw = [&](uint32_t m) { return static_cast<int>(rng() % m); };

    std::vector<FiniteLattice> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 200000) throw Error("random lattice generation is not converging");
        const int n = 3 + draw(static_cast<uint32_t>(max_n - 2));
        BitMatrix leq(n);
        for (int i = 0; i < n; ++i) leq.set(i, i);
        for (int i = 1; i + 1 < n; ++i)
            for (int j = i + 1; j + 1 < n; ++j)
                if (draw(100) < 35) leq.set(i, j);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (leq.get(i, k)) leq.or_row(i, k);
        for (int u = 0; u < n; ++u) {
            leq.set(0, u);
            leq.set(u, n - 1);
        }
        try {
            out.push_back(FiniteLattice::from_order(leq));
        } catch (const NotALatticeError&) {
        }
    }
    return out;
}

namespace {

InvolutionStructure reversed_chain(int n) {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = n - 1 - i;
    return validate_involution(chain(n), std::move(inv));
}

InvolutionStructure fixed_midpoints(int k) {
    // Midpoint lattice where the involution only exchanges the bounds.
    FiniteLattice M = m_lattice(k);
    std::vector<int> inv(M.size());
    inv[0] = 1;
    inv[1] = 0;
    for (int i = 2; i < M.size(); ++i) inv[i] = i;
    return validate_involution(std::move(M), std::move(inv));
}

FiniteLattice pentagon() {
    // 0 < 1 < 4 on one side, 0 < 2 < 3 < 4 on the other.
    return FiniteLattice::from_covers(5, {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
}

InvolutionStructure reversed_pentagon() {
    return validate_involution(pentagon(), {4, 1, 3, 2, 0});
}

std::vector<CorpusEntry> build_lattices() {
    std::vector<CorpusEntry> c;
    for (int n = 1; n <= 6; ++n)
        c.push_back({"chain-" + std::to_string(n), chain(n)});
    c.push_back({"square", boolean_algebra(2).lattice});
    c.push_back({"cube", boolean_algebra(3).lattice});
    for (int k = 3; k <= 5; ++k)
        c.push_back({"m-" + std::to_string(k), m_lattice(k)});
    c.push_back({"pentagon", pentagon()});
    c.push_back({"bounded-square", lattice_of(bound_B(boolean_algebra(2).lattice).result)});
    auto rnd = random_cover_lattices(25, 7, kCorpusSeed);
    for (size_t i = 0; i < rnd.size(); ++i) {
        char name[16];
        std::snprintf(name, sizeof name, "rand-%02zu", i + 1);
        c.push_back({name, std::move(rnd[i])});
    }
    return c;
}

std::vector<CorpusEntry> build_involutions() {
    std::vector<CorpusEntry> c;
    for (int n = 1; n <= 6; ++n)
        c.push_back({"chain-" + std::to_string(n) + "-rev", reversed_chain(n)});
    c.push_back({"square-comp", boolean_algebra(2)});
    c.push_back({"cube-comp", boolean_algebra(3)});
    for (int k = 3; k <= 5; ++k)
        c.push_back({"m-" + std::to_string(k) + "-fix", fixed_midpoints(k)});
    c.push_back({"m-4-swap",
                 horizontal_sum({boolean_algebra(2), boolean_algebra(2)}).result});
    c.push_back({"square-fix",
                 horizontal_sum({reversed_chain(3), reversed_chain(3)}).result});
    c.push_back({"pentagon-rev", reversed_pentagon()});
    c.push_back({"bounded-square-comp", bound_B(boolean_algebra(2)).result});
    c.push_back({"sandwich-square", sandwich(boolean_algebra(2).lattice, std::nullopt)});
    return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus_lattices() {
    static const std::vector<CorpusEntry> c = build_lattices();
    return c;
}

const std::vector<CorpusEntry>& corpus_involutions() {
    static const std::vector<CorpusEntry> c = build_involutions();
    return c;
}

}  // namespace lattica

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lattica/involution.hpp"

namespace lattica {

struct CorpusEntry {
    std::string name;
    Structure s;
};

// Pseudorandom bounded lattices: a random middle order is closed
// transitively, wrapped in fresh bounds, and kept only when the result
// validates as a lattice. Fully deterministic for a given seed (the raw
// mersenne-twister stream is specified by the standard).
std::vector<FiniteLattice> random_cover_lattices(int count, int max_n, uint32_t seed);

// The fixed evaluation corpus: chains of 1..6 elements, the 4- and
// 8-element powerset lattices, the three smallest midpoint lattices, the
// pentagon, the bounded square, and 25 random lattices with at most 7
// elements.
const std::vector<CorpusEntry>& corpus_lattices();

// Involution-carrying companions: reversed chains, complemented powersets,
// midpoint lattices with fixed or swapped midpoints, the reversed pentagon,
// the bounded complemented square, and a self-dual square stack.
const std::vector<CorpusEntry>& corpus_involutions();

inline constexpr uint32_t kCorpusSeed = 0x17ac3u;

}  // namespace lattica

#pragma once

// Seeded instance generators for property tests and `tcycle verify --random`.
// Sizes: |Q_0| <= 6, |Q_1| <= 10, word length <= 3.

#include <cstdint>
#include <random>

#include "tensorcycle/hypergraph.hpp"
#include "tensorcycle/ohg.hpp"

namespace tcyc {

using Rng = std::mt19937_64;

inline constexpr std::size_t kMaxRandomVertices = 6;
inline constexpr std::size_t kMaxRandomEdges = 10;
inline constexpr std::size_t kMaxRandomDegree = 3;

/// Uniform in [0, n); the plain modulo keeps streams identical across standard libraries.
std::size_t draw(Rng& rng, std::size_t n);
bool coin(Rng& rng, double p);

/// One standard construction for every edge. Parallel copies and loops each
/// appear with probability 0.2; vertices are drawn from a small pool half the
/// time so multiplicities reach the characteristic.
TensorHypergraph random_standard_instance(Rng& rng, Construction tag, FieldSpec field);

/// Independent tag per edge, raw edges included.
TensorHypergraph random_mixed_instance(Rng& rng, FieldSpec field);

/// Raw edges only, with random integer coefficients in [-2, 2].
TensorHypergraph random_raw_instance(Rng& rng, FieldSpec field);

/// sym_quad graph on `vertices` vertices with loops and parallel edges allowed.
TensorHypergraph random_sym_quad_graph(Rng& rng, FieldSpec field, std::size_t vertices);

/// Entries i.i.d. uniform over {-1, 0, +1}.
OrientedHypergraph random_oriented(Rng& rng, std::size_t vertices, std::size_t edges);

}  // namespace tcyc

#pragma once

#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Throws Error(bad_n) for n < 2.
Digraph gen_directed_cycle(int n);

/// Circulant digraph on Z_n with arcs (i, i+s mod n) for every step s.
/// Steps must lie in [1, n-1]; duplicates are ignored. A step pair {s, n-s}
/// produces digons, which is the caller's responsibility to avoid when a
/// digon-free instance is needed. Throws Error(bad_step) on empty or
/// out-of-range steps, Error(bad_n) for n < 1.
Digraph gen_circulant(int n, const std::vector<int>& steps);

/// Random digraph with digirth >= gamma: every ordered pair is sampled
/// independently with probability p, then shortest directed cycles of
/// length < gamma are broken by deleting one uniformly chosen arc each
/// until none remains. Deterministic for fixed (n, p, gamma, seed); the
/// random source is MT19937 as fixed by the C++ standard.
Digraph gen_random_digirth(int n, double p, int gamma, unsigned seed);

}  // namespace dichro

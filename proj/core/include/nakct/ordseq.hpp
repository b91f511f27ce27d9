#pragma once

// Index combinatorics of the ordered sequences os^k attached to a Kupisch
// series: membership, enumeration, the interleaving relation, the boundary
// maps f and g, and shift-class canonicalization in the cyclic case.

#include <optional>
#include <utility>
#include <vector>

#include "nakct/kupisch.hpp"

namespace nakct {

using Coords = std::vector<int>;

bool strictly_increasing(const Coords& x);

// x in os^k: strictly increasing and x_k - x_1 + 1 <= l_{x_k - k + 1} + k - 1.
bool member(const KupischSeries& s, int k, const Coords& x);

// Acyclic: all members in lexicographic order. Cyclic: one representative per
// shift orbit, x_1 in [1, m], lexicographic.
std::vector<Coords> enumerate_os(const KupischSeries& s, int k);

// x_1 <= y_1 < x_2 <= y_2 < ... < x_k <= y_k. Throws LengthMismatch.
bool precedes(const Coords& x, const Coords& y);

// f(i) = min{ x_1 : (x_1, ..., i) in os^{d+1} }, g dual. None when the fiber
// is empty (acyclic boundary).
std::optional<int> f_map(const KupischSeries& s, int d, int i);
std::optional<int> g_map(const KupischSeries& s, int d, int i);

// Cyclic only: representative with x_1 in [1, m] and the shift exponent j
// with x = rep + j*(m, ..., m). Throws AcyclicContext.
std::pair<Coords, int> canonicalize_shift(const KupischSeries& s, const Coords& x);

Coords shift_by(const Coords& x, int amount);

}  // namespace nakct

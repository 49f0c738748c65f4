#pragma once

#include <cstdint>
#include <vector>

namespace rbmlab {

// Unique integers approximately geometrically spaced on [lo, hi], both
// included, in increasing order. Consecutive duplicates from rounding are
// dropped, so fewer than n_points values may come back.
std::vector<std::uint64_t> log_spaced(std::uint64_t lo, std::uint64_t hi, int n_points);

}  // namespace rbmlab

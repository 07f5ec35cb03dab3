#pragma once

#include <cstdint>
#include <random>

#include "coloc/geometry.hpp"

namespace coloc {

/// SplitMix64 finalizer; bijective on 64-bit values.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent stream, e.g. one simulation run. Streams can be
/// consumed in any order without correlation.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream);

/// Uniform double in [0,1) from the top 53 bits of the generator output.
/// mt19937_64 output values are pinned by the standard, so results are
/// reproducible across platforms (std distributions are not).
double uniform_unit(std::mt19937_64& rng);

double uniform_in(std::mt19937_64& rng, double lo, double hi);

/// Unbiased integer in [0, n) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

Point2D uniform_in_box(std::mt19937_64& rng, const BBox& box);

/// Rejection sampling in the bounding square.
Point2D uniform_in_disk(std::mt19937_64& rng, Point2D center, double radius);

/// Fisher-Yates with uniform_below; deterministic across platforms.
template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace coloc

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coloc/geometry.hpp"

namespace coloc {

/// Randomization strategy for the null hypothesis that features are
/// spatially independent. Source sites can be kept fixed with their labels
/// permuted, case points re-placed over weighted regions, or everything
/// scattered uniformly.
enum class NullStrategy {
    randomize_both,
    randomize_sources_only,
    randomize_cases_only,
    fully_random,
};

std::string to_string(NullStrategy s);
NullStrategy parse_null_strategy(const std::string& name);

/// Rectangular placement stratum with a sampling weight (e.g. population).
struct PlacementRegion {
    BBox box;
    double weight = 1.0;
};

struct NullModelSpec {
    NullStrategy strategy = NullStrategy::randomize_both;
    /// Feature treated as the "case" (e.g. disease) side; all other features
    /// are "sources". Empty means every object is a source.
    std::string case_feature;
    /// Strata for case placement; empty means the whole study region.
    std::vector<PlacementRegion> case_regions;
    /// Defaults to the dataset's geometry bounding box.
    std::optional<BBox> study_region;
};

/// Randomized dataset under the null hypothesis. Per-feature instance counts
/// always match the input exactly. Sources keep their site geometry and
/// exchange payloads (feature, amount, radius) by a uniform permutation;
/// case points are re-placed region-weighted. Deterministic given the seed.
std::vector<SpatialObject> generate_null(std::span<const SpatialObject> dataset,
                                         const NullModelSpec& spec, std::uint64_t seed);

/// Synthetic association benchmark: features C1..C7 and D in a 100x100
/// square, unit buffers. C1-C2 associated (20 each); C3-C4 with 20
/// associated pairs of 30 each; D tied to C1, C3-pairs, and 30 of 40 C5
/// instances, plus 30 random cases; C6 independent; C7 placed so no C7/D
/// buffers intersect. Associated partners are uniform within one buffer
/// radius of their source.
std::vector<SpatialObject> gen_synthetic_assoc(std::uint64_t seed);

/// Two-feature distance benchmark: 30 F1 instances uniform in a 100x100
/// square, each paired with an F2 instance at distance uniform in [lo,hi)
/// at a uniform bearing. Unit buffers. Requires 0 <= lo < hi <= 2.
std::vector<SpatialObject> gen_distance_pair(double lo, double hi, std::uint64_t seed);

}  // namespace coloc

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coloc/geometry.hpp"
#include "coloc/uncertainty.hpp"
#include "coloc/wind.hpp"

namespace coloc {

/// Probabilistic transaction derived at one grid point. Entries are sorted
/// by feature name; probabilities lie in (0,1]; one entry per feature (the
/// maximum over instances is kept).
struct Transaction {
    Point2D grid_point;
    std::vector<std::pair<std::string, double>> entries;

    /// Probability of `feature`, or 0 when absent.
    double probability_of(const std::string& feature) const;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct TransactionSet {
    GridSpec grid;
    std::uint64_t fingerprint = 0;
    std::vector<Transaction> transactions;
};

struct BufferOptions {
    double r_min = 0.1;  // floor for ln-derived radii, km
    double gamma = 0.3;  // wind stretching coefficient
};

struct TransactionizeOptions {
    UncertaintyModel model = UncertaintyModel::curve();
    BufferOptions buffer;
    std::optional<WindField> wind;
};

/// Buffer for one object. Radius comes from fixed_radius when set, otherwise
/// from the release amount. Point objects with an amount are wind-morphed
/// when a field is given; fixed-radius zones (e.g. case mobility ranges) and
/// extended shapes stay as drawn.
Buffer make_buffer(const SpatialObject& obj, const BufferOptions& opts,
                   const WindField* wind);

/// Grid covering the union of all buffer zones, anchored at its minimum
/// corner, so edge buffers are fully inside.
GridSpec grid_covering(std::span<const SpatialObject> dataset, double spacing,
                       const BufferOptions& opts, const WindField* wind);

/// Transactionization: for every grid point, collect the presence
/// probability of each feature whose buffer contains the point, keeping the
/// maximum per feature. Grid points intersecting nothing produce no
/// transaction. Output is in grid (row-major) order and is deterministic.
TransactionSet get_transactions(std::span<const SpatialObject> dataset,
                                const GridSpec& grid,
                                const TransactionizeOptions& opts);

/// CSV `gx,gy,feature,probability`, one row per entry, grid order.
void write_transactions_csv(std::ostream& out, const TransactionSet& txs);

/// 64-bit FNV-1a over a canonical, bit-exact encoding of the object list.
std::uint64_t dataset_fingerprint(std::span<const SpatialObject> dataset);

/// Sorted unique feature names.
std::vector<std::string> dataset_features(std::span<const SpatialObject> dataset);

}  // namespace coloc

#pragma once

#include <random>
#include <string>
#include <vector>

#include "coloc/geometry.hpp"
#include "coloc/rng.hpp"
#include "coloc/transactions.hpp"

namespace coloc::testing {

/// The six-row probabilistic transaction example used throughout the measure
/// tests: A(0.7) B(1.0) C(0.2) / A(0.9) D(0.5) E(0.4) F(0.8) / ...
inline TransactionSet example_transactions() {
    auto tx = [](std::vector<std::pair<std::string, double>> entries) {
        Transaction t;
        t.entries = std::move(entries);
        return t;
    };
    TransactionSet set;
    set.transactions = {
        tx({{"A", 0.7}, {"B", 1.0}, {"C", 0.2}}),
        tx({{"A", 0.9}, {"D", 0.5}, {"E", 0.4}, {"F", 0.8}}),
        tx({{"B", 0.3}, {"D", 1.0}, {"G", 0.7}}),
        tx({{"A", 0.1}, {"B", 0.6}, {"C", 0.7}, {"E", 0.2}, {"G", 0.4}}),
        tx({{"C", 0.5}, {"D", 0.2}, {"E", 0.8}}),
        tx({{"B", 0.6}, {"C", 0.3}, {"E", 1.0}, {"F", 0.4}}),
    };
    return set;
}

/// Point dataset with `per_feature` instances of each feature, uniform in the
/// box, all with the given fixed buffer radius.
inline std::vector<SpatialObject> random_point_dataset(std::mt19937_64& rng,
                                                       const std::vector<std::string>& features,
                                                       int per_feature, const BBox& box,
                                                       double radius) {
    std::vector<SpatialObject> out;
    for (const auto& feature : features) {
        for (int i = 0; i < per_feature; ++i) {
            out.push_back(SpatialObject{
                .id = feature + "_" + std::to_string(i + 1),
                .feature = feature,
                .shape = uniform_in_box(rng, box),
                .amount = std::nullopt,
                .fixed_radius = radius,
            });
        }
    }
    return out;
}

}  // namespace coloc::testing

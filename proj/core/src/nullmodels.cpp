#include "coloc/nullmodels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coloc/errors.hpp"
#include "coloc/rng.hpp"

namespace coloc {

std::string to_string(NullStrategy s) {
    switch (s) {
        case NullStrategy::randomize_both: return "both";
        case NullStrategy::randomize_sources_only: return "sources";
        case NullStrategy::randomize_cases_only: return "cases";
        case NullStrategy::fully_random: return "random";
    }
    return "both";
}

NullStrategy parse_null_strategy(const std::string& name) {
    if (name == "both") return NullStrategy::randomize_both;
    if (name == "sources") return NullStrategy::randomize_sources_only;
    if (name == "cases") return NullStrategy::randomize_cases_only;
    if (name == "random") return NullStrategy::fully_random;
    throw ValidationError("unknown null strategy '" + name + "'");
}

namespace {

BBox dataset_bbox(std::span<const SpatialObject> dataset) {
    BBox box;
    bool first = true;
    for (const auto& obj : dataset) {
        BBox b = shape_bbox(obj.shape);
        if (first) {
            box = b;
            first = false;
        } else {
            box.include(b);
        }
    }
    return box;
}

Point2D shape_anchor(const Shape& shape) {
    if (const auto* point = std::get_if<Point2D>(&shape)) return *point;
    BBox box = shape_bbox(shape);
    return Point2D{(box.min_x + box.max_x) / 2.0, (box.min_y + box.max_y) / 2.0};
}

Shape translate_shape(const Shape& shape, Point2D to) {
    Point2D from = shape_anchor(shape);
    double dx = to.x - from.x;
    double dy = to.y - from.y;
    if (const auto* point = std::get_if<Point2D>(&shape)) {
        return Point2D{point->x + dx, point->y + dy};
    }
    if (const auto* line = std::get_if<Polyline>(&shape)) {
        Polyline moved = *line;
        for (auto& p : moved.points) {
            p.x += dx;
            p.y += dy;
        }
        return moved;
    }
    Polygon moved = std::get<Polygon>(shape);
    for (auto& p : moved.ring) {
        p.x += dx;
        p.y += dy;
    }
    return moved;
}

std::vector<PlacementRegion> case_strata(const NullModelSpec& spec, const BBox& region) {
    if (spec.case_regions.empty()) {
        return {PlacementRegion{region, 1.0}};
    }
    double total = 0.0;
    for (const auto& r : spec.case_regions) {
        if (r.weight < 0.0) throw ValidationError("null model: negative region weight");
        total += r.weight;
    }
    if (total == 0.0) throw ValidationError("null model: region weights sum to zero");
    return spec.case_regions;
}

Point2D place_case(std::mt19937_64& rng, const std::vector<PlacementRegion>& strata) {
    double total = 0.0;
    for (const auto& r : strata) total += r.weight;
    double pick = uniform_unit(rng) * total;
    for (const auto& r : strata) {
        pick -= r.weight;
        if (pick < 0.0) return uniform_in_box(rng, r.box);
    }
    return uniform_in_box(rng, strata.back().box);
}

}  // namespace

std::vector<SpatialObject> generate_null(std::span<const SpatialObject> dataset,
                                         const NullModelSpec& spec, std::uint64_t seed) {
    std::vector<SpatialObject> out(dataset.begin(), dataset.end());
    if (out.empty()) return out;

    BBox region = spec.study_region ? *spec.study_region : dataset_bbox(dataset);
    std::mt19937_64 rng(seed);

    if (spec.strategy == NullStrategy::fully_random) {
        for (auto& obj : out) {
            obj.shape = translate_shape(obj.shape, uniform_in_box(rng, region));
        }
        return out;
    }

    bool shuffle_sources = spec.strategy == NullStrategy::randomize_both ||
                           spec.strategy == NullStrategy::randomize_sources_only;
    bool move_cases = spec.strategy == NullStrategy::randomize_both ||
                      spec.strategy == NullStrategy::randomize_cases_only;

    auto is_case = [&](const SpatialObject& obj) {
        return !spec.case_feature.empty() && obj.feature == spec.case_feature;
    };

    if (shuffle_sources) {
        // Sites stay put; the payloads (feature, amount, radius) are dealt
        // out by a uniform permutation, so each site keeps its slot count
        // and each feature keeps its instance count.
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!is_case(out[i])) slots.push_back(i);
        }
        std::vector<std::size_t> payload = slots;
        shuffle(rng, payload);
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const SpatialObject& src = dataset[payload[k]];
            SpatialObject& dst = out[slots[k]];
            dst.feature = src.feature;
            dst.amount = src.amount;
            dst.fixed_radius = src.fixed_radius;
        }
    }

    if (move_cases && !spec.case_feature.empty()) {
        auto strata = case_strata(spec, region);
        for (auto& obj : out) {
            if (is_case(obj)) {
                obj.shape = translate_shape(obj.shape, place_case(rng, strata));
            }
        }
    }
    return out;
}

namespace {

void add_points(std::vector<SpatialObject>& out, const std::string& feature,
                const std::vector<Point2D>& points, double radius) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.push_back(SpatialObject{.id = feature + "_" + std::to_string(i + 1),
                                    .feature = feature,
                                    .shape = points[i],
                                    .amount = std::nullopt,
                                    .fixed_radius = radius});
    }
}

}  // namespace

std::vector<SpatialObject> gen_synthetic_assoc(std::uint64_t seed) {
    const BBox region{0.0, 0.0, 100.0, 100.0};
    const double r = 1.0;  // buffer size, units
    std::mt19937_64 rng(seed);

    auto uniform_points = [&](std::size_t n) {
        std::vector<Point2D> pts(n);
        for (auto& p : pts) p = uniform_in_box(rng, region);
        return pts;
    };
    // Associated partner: distance uniform within one buffer radius, at a
    // uniform bearing (the same law the distance benchmark uses).
    auto partner_of = [&](Point2D anchor) {
        double dist = uniform_in(rng, 0.0, r);
        double bearing = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
        return Point2D{anchor.x + dist * std::cos(bearing), anchor.y + dist * std::sin(bearing)};
    };

    std::vector<Point2D> c1 = uniform_points(20);
    std::vector<Point2D> c2(20);
    for (std::size_t i = 0; i < 20; ++i) c2[i] = partner_of(c1[i]);

    std::vector<Point2D> c3 = uniform_points(30);
    std::vector<Point2D> c4(30);
    for (std::size_t i = 0; i < 20; ++i) c4[i] = partner_of(c3[i]);
    for (std::size_t i = 20; i < 30; ++i) c4[i] = uniform_in_box(rng, region);

    std::vector<Point2D> c5 = uniform_points(40);
    std::vector<Point2D> c6 = uniform_points(30);

    // Disease cases: one per associated C1-C2 pair, one per associated C3-C4
    // pair, one for 30 of the 40 C5 instances, plus 30 spread at random.
    // A case tied to a pair is a partner of the pair's midpoint, kept within
    // one buffer radius of both members so it sits where the pair co-locates.
    auto pair_case = [&](Point2D a, Point2D b) {
        Point2D mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        for (;;) {
            Point2D p = partner_of(mid);
            if (std::hypot(p.x - a.x, p.y - a.y) <= r &&
                std::hypot(p.x - b.x, p.y - b.y) <= r) {
                return p;
            }
        }
    };
    std::vector<Point2D> d;
    d.reserve(100);
    for (std::size_t i = 0; i < 20; ++i) d.push_back(pair_case(c1[i], c2[i]));
    for (std::size_t i = 0; i < 20; ++i) d.push_back(pair_case(c3[i], c4[i]));
    for (std::size_t i = 0; i < 30; ++i) d.push_back(partner_of(c5[i]));
    for (std::size_t i = 0; i < 30; ++i) d.push_back(uniform_in_box(rng, region));

    // C7 is negatively correlated with D: centers kept more than two buffer
    // radii from every case, so their buffers never share a grid point.
    std::vector<Point2D> c7;
    c7.reserve(30);
    while (c7.size() < 30) {
        Point2D p = uniform_in_box(rng, region);
        bool clear = true;
        for (Point2D q : d) {
            if (std::hypot(p.x - q.x, p.y - q.y) <= 2.0 * r) {
                clear = false;
                break;
            }
        }
        if (clear) c7.push_back(p);
    }

    std::vector<SpatialObject> out;
    out.reserve(20 + 20 + 30 + 30 + 40 + 30 + 30 + 100);
    add_points(out, "C1", c1, r);
    add_points(out, "C2", c2, r);
    add_points(out, "C3", c3, r);
    add_points(out, "C4", c4, r);
    add_points(out, "C5", c5, r);
    add_points(out, "C6", c6, r);
    add_points(out, "C7", c7, r);
    add_points(out, "D", d, r);
    return out;
}

std::vector<SpatialObject> gen_distance_pair(double lo, double hi, std::uint64_t seed) {
    if (!(lo >= 0.0 && lo < hi && hi <= 2.0)) {
        throw ValidationError("distance pair: range must satisfy 0 <= lo < hi <= 2");
    }
    const BBox region{0.0, 0.0, 100.0, 100.0};
    std::mt19937_64 rng(seed);

    std::vector<Point2D> f1(30);
    for (auto& p : f1) p = uniform_in_box(rng, region);

    std::vector<Point2D> f2(30);
    for (std::size_t i = 0; i < 30; ++i) {
        double dist = uniform_in(rng, lo, hi);
        double bearing = uniform_in(rng, 0.0, 2.0 * std::numbers::pi);
        f2[i] = Point2D{f1[i].x + dist * std::cos(bearing), f1[i].y + dist * std::sin(bearing)};
    }

    std::vector<SpatialObject> out;
    out.reserve(60);
    add_points(out, "F1", f1, 1.0);
    add_points(out, "F2", f2, 1.0);
    return out;
}

}  // namespace coloc

#include "coloc/transactions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <unordered_map>

#include "coloc/errors.hpp"

namespace coloc {

namespace {

// Probabilities below this are numerical noise and never stored.
constexpr double kProbFloor = 1e-12;

double buffer_radius(const SpatialObject& obj, const BufferOptions& opts) {
    if (obj.fixed_radius) return *obj.fixed_radius;
    if (obj.amount) return buffer_radius_from_amount(*obj.amount, opts.r_min);
    throw ValidationError("object '" + obj.id + "': neither amount nor fixed radius");
}

}  // namespace

double Transaction::probability_of(const std::string& feature) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), feature,
                               [](const auto& e, const std::string& f) { return e.first < f; });
    if (it != entries.end() && it->first == feature) return it->second;
    return 0.0;
}

Buffer make_buffer(const SpatialObject& obj, const BufferOptions& opts,
                   const WindField* wind) {
    validate_object(obj);
    double r = buffer_radius(obj, opts);
    if (!(r > 0.0)) throw ValidationError("object '" + obj.id + "': nonpositive buffer radius");

    Buffer buf;
    if (const auto* point = std::get_if<Point2D>(&obj.shape)) {
        // Only amount-driven plumes respond to wind; fixed-radius zones are
        // mobility ranges, not dispersions.
        if (wind && obj.amount) {
            buf = morph_to_ellipse(*point, r, wind->at(*point), opts.gamma);
        } else {
            buf.zone = CircleZone{*point, r};
        }
    } else {
        buf.zone = ShapeZone{obj.shape, r};
    }
    buf.owner = obj.id;
    return buf;
}

GridSpec grid_covering(std::span<const SpatialObject> dataset, double spacing,
                       const BufferOptions& opts, const WindField* wind) {
    if (!(spacing > 0.0)) throw ValidationError("grid covering: spacing must be positive");
    GridSpec spec;
    spec.spacing = spacing;
    if (dataset.empty()) return spec;

    bool first = true;
    BBox box;
    for (const auto& obj : dataset) {
        BBox b = make_buffer(obj, opts, wind).bounds();
        if (first) {
            box = b;
            first = false;
        } else {
            box.include(b);
        }
    }
    spec.min_x = box.min_x;
    spec.min_y = box.min_y;
    spec.max_x = box.max_x;
    spec.max_y = box.max_y;
    return spec;
}

TransactionSet get_transactions(std::span<const SpatialObject> dataset,
                                const GridSpec& grid, const TransactionizeOptions& opts) {
    grid.validate();
    opts.model.validate();

    TransactionSet result;
    result.grid = grid;
    result.fingerprint = dataset_fingerprint(dataset);

    std::vector<std::string> features = dataset_features(dataset);
    std::unordered_map<std::string, std::uint32_t> feature_id;
    feature_id.reserve(features.size());
    for (std::uint32_t i = 0; i < features.size(); ++i) feature_id[features[i]] = i;

    const WindField* wind = opts.wind ? &*opts.wind : nullptr;
    std::size_t nx = grid.k1();
    std::size_t ny = grid.k2();

    // Probability entries per covered grid point; most grid points intersect
    // nothing, so only touched cells are materialized.
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, double>>> cells;

    for (const auto& obj : dataset) {
        Buffer buf = make_buffer(obj, opts.buffer, wind);
        std::uint32_t fid = feature_id.at(obj.feature);
        BBox bounds = buf.bounds();

        // Index window of grid points overlapping the buffer's bbox. A hair
        // of slack keeps boundary points in; exact containment is re-checked
        // per point.
        double ix_lo = std::ceil((bounds.min_x - grid.min_x) / grid.spacing - 1e-9);
        double ix_hi = std::floor((bounds.max_x - grid.min_x) / grid.spacing + 1e-9);
        double iy_lo = std::ceil((bounds.min_y - grid.min_y) / grid.spacing - 1e-9);
        double iy_hi = std::floor((bounds.max_y - grid.min_y) / grid.spacing + 1e-9);
        if (ix_hi < 0 || iy_hi < 0) continue;
        std::size_t i_lo = ix_lo < 0 ? 0 : static_cast<std::size_t>(ix_lo);
        std::size_t j_lo = iy_lo < 0 ? 0 : static_cast<std::size_t>(iy_lo);
        std::size_t i_hi = std::min(nx - 1, static_cast<std::size_t>(std::max(0.0, ix_hi)));
        std::size_t j_hi = std::min(ny - 1, static_cast<std::size_t>(std::max(0.0, iy_hi)));
        if (i_lo > i_hi || j_lo > j_hi) continue;

        for (std::size_t j = j_lo; j <= j_hi; ++j) {
            double gy = grid.min_y + static_cast<double>(j) * grid.spacing;
            for (std::size_t i = i_lo; i <= i_hi; ++i) {
                Point2D g{grid.min_x + static_cast<double>(i) * grid.spacing, gy};
                auto x = normalized_buffer_distance(g, buf);
                if (!x) continue;
                double p = presence_probability(opts.model, *x);
                if (p < kProbFloor) continue;

                auto& cell = cells[static_cast<std::uint64_t>(j) * nx + i];
                bool merged = false;
                for (auto& entry : cell) {
                    if (entry.first == fid) {
                        entry.second = std::max(entry.second, p);  // max per feature
                        merged = true;
                        break;
                    }
                }
                if (!merged) cell.emplace_back(fid, p);
            }
        }
    }

    std::vector<std::uint64_t> indices;
    indices.reserve(cells.size());
    for (const auto& [idx, _] : cells) indices.push_back(idx);
    std::sort(indices.begin(), indices.end());

    result.transactions.reserve(indices.size());
    for (std::uint64_t idx : indices) {
        auto& cell = cells[idx];
        std::sort(cell.begin(), cell.end());
        Transaction t;
        std::size_t i = idx % nx;
        std::size_t j = idx / nx;
        t.grid_point = Point2D{grid.min_x + static_cast<double>(i) * grid.spacing,
                               grid.min_y + static_cast<double>(j) * grid.spacing};
        t.entries.reserve(cell.size());
        for (auto [fid, p] : cell) t.entries.emplace_back(features[fid], p);
        result.transactions.push_back(std::move(t));
    }
    return result;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, end);
}

}  // namespace

void write_transactions_csv(std::ostream& out, const TransactionSet& txs) {
    out << "gx,gy,feature,probability\n";
    std::string line;
    for (const auto& t : txs.transactions) {
        for (const auto& [feature, p] : t.entries) {
            line.clear();
            append_double(line, t.grid_point.x);
            line.push_back(',');
            append_double(line, t.grid_point.y);
            line.push_back(',');
            line += feature;
            line.push_back(',');
            append_double(line, p);
            line.push_back('\n');
            out << line;
        }
    }
}

namespace {

struct Fnv1a {
    std::uint64_t state = 0xCBF29CE484222325ULL;

    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            state ^= p[i];
            state *= 0x100000001B3ULL;
        }
    }
    void str(const std::string& s) {
        bytes(s.data(), s.size());
        sep();
    }
    void num(double v) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        bytes(&bits, sizeof(bits));
    }
    void sep() {
        unsigned char z = 0;
        bytes(&z, 1);
    }
};

}  // namespace

std::uint64_t dataset_fingerprint(std::span<const SpatialObject> dataset) {
    Fnv1a h;
    for (const auto& obj : dataset) {
        h.str(obj.id);
        h.str(obj.feature);
        if (const auto* point = std::get_if<Point2D>(&obj.shape)) {
            h.bytes("P", 1);
            h.num(point->x);
            h.num(point->y);
        } else if (const auto* line = std::get_if<Polyline>(&obj.shape)) {
            h.bytes("L", 1);
            for (Point2D p : line->points) {
                h.num(p.x);
                h.num(p.y);
            }
        } else {
            h.bytes("G", 1);
            for (Point2D p : std::get<Polygon>(obj.shape).ring) {
                h.num(p.x);
                h.num(p.y);
            }
        }
        h.sep();
        h.num(obj.amount ? *obj.amount : -1.0);
        h.num(obj.fixed_radius ? *obj.fixed_radius : -1.0);
        h.sep();
    }
    return h.state;
}

std::vector<std::string> dataset_features(std::span<const SpatialObject> dataset) {
    std::vector<std::string> features;
    features.reserve(dataset.size());
    for (const auto& obj : dataset) features.push_back(obj.feature);
    std::sort(features.begin(), features.end());
    features.erase(std::unique(features.begin(), features.end()), features.end());
    return features;
}

}  // namespace coloc

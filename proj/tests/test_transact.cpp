#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <doctest.h>

#include "coloc/errors.hpp"
#include "coloc/measures.hpp"
#include "coloc/rng.hpp"
#include "coloc/transactions.hpp"
#include "support/fixtures.hpp"

using namespace coloc;

namespace {

SpatialObject point_obj(std::string id, std::string feature, double x, double y,
                        double radius) {
    return SpatialObject{.id = std::move(id), .feature = std::move(feature),
                         .shape = Point2D{x, y}, .amount = std::nullopt,
                         .fixed_radius = radius};
}

}  // namespace

TEST_CASE("grid points outside all buffers yield no transaction") {
    std::vector<SpatialObject> data{point_obj("a", "A", 0, 0, 1.0)};
    GridSpec grid{-1, -1, 9, 9, 1.0};
    auto txs = get_transactions(data, grid, {});
    for (const auto& t : txs.transactions) {
        CHECK(std::hypot(t.grid_point.x, t.grid_point.y) <= 1.0);
    }
    CHECK(!txs.transactions.empty());
    CHECK(txs.transactions.size() < grid.k3());
}

TEST_CASE("a grid point at the source reads probability one") {
    std::vector<SpatialObject> data{point_obj("a", "A", 2, 2, 1.5)};
    GridSpec grid{0, 0, 4, 4, 1.0};
    auto txs = get_transactions(data, grid, {});
    bool found = false;
    for (const auto& t : txs.transactions) {
        if (t.grid_point == Point2D{2, 2}) {
            found = true;
            CHECK(t.probability_of("A") == 1.0);
        }
    }
    CHECK(found);
}

TEST_CASE("several instances of one feature keep the maximum probability") {
    // Grid point at the origin; two A-instances at normalized distances 0.2
    // and 0.8 within unit buffers.
    std::vector<SpatialObject> data{
        point_obj("a1", "A", 0.2, 0, 1.0),
        point_obj("a2", "A", 0.8, 0, 1.0),
    };
    GridSpec grid{0, 0, 0, 0, 1.0};  // single grid point
    auto txs = get_transactions(data, grid, {});
    REQUIRE(txs.transactions.size() == 1);
    const auto& t = txs.transactions[0];
    REQUIRE(t.entries.size() == 1);
    double expected = std::cos(0.2 * std::numbers::pi) / 2.0 + 0.5;
    CHECK(t.probability_of("A") == doctest::Approx(expected));
}

TEST_CASE("halving the spacing never loses transactions") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto data = testing::random_point_dataset(rng, {"A", "B", "C"}, 4,
                                                  BBox{0, 0, 20, 20}, 1.5);
        BufferOptions buffer;
        GridSpec coarse = grid_covering(data, 1.0, buffer, nullptr);
        GridSpec fine = coarse;
        fine.spacing = 0.5;
        auto coarse_txs = get_transactions(data, coarse, {});
        auto fine_txs = get_transactions(data, fine, {});
        CHECK(fine_txs.transactions.size() >= coarse_txs.transactions.size());
    }
}

TEST_CASE("certain model makes membership equal buffer containment") {
    std::mt19937_64 rng(11);
    auto data = testing::random_point_dataset(rng, {"A", "B"}, 5, BBox{0, 0, 10, 10}, 2.0);
    TransactionizeOptions opts;
    opts.model = UncertaintyModel::certain();
    GridSpec grid = grid_covering(data, 0.5, opts.buffer, nullptr);
    auto txs = get_transactions(data, grid, opts);

    std::vector<Buffer> buffers;
    for (const auto& obj : data) buffers.push_back(make_buffer(obj, opts.buffer, nullptr));

    std::size_t contained_points = 0;
    for (Point2D g : make_grid(grid)) {
        bool inside_any = false;
        for (std::size_t i = 0; i < buffers.size(); ++i) {
            if (normalized_buffer_distance(g, buffers[i])) {
                inside_any = true;
                break;
            }
        }
        if (inside_any) ++contained_points;
    }
    CHECK(txs.transactions.size() == contained_points);
    for (const auto& t : txs.transactions) {
        for (const auto& [feature, p] : t.entries) CHECK(p == 1.0);
    }
}

TEST_CASE("closer feature pairs collect at least as many joint transactions") {
    GridSpec grid{-2, -2, 5, 2, 0.1};
    std::size_t prev = 0;
    // Sweep the second instance from touching range back to coincidence.
    for (double dist = 2.0; dist >= 0.0; dist -= 0.1) {
        std::vector<SpatialObject> data{
            point_obj("a", "A", 0, 0, 1.0),
            point_obj("b", "B", dist, 0, 1.0),
        };
        auto txs = get_transactions(data, grid, {});
        std::size_t joint = 0;
        for (const auto& t : txs.transactions) {
            if (t.probability_of("A") > 0 && t.probability_of("B") > 0) ++joint;
        }
        CHECK(joint >= prev);
        prev = joint;
    }
    CHECK(prev > 0);
}

TEST_CASE("objects need a radius source") {
    std::vector<SpatialObject> data{
        SpatialObject{.id = "x", .feature = "X", .shape = Point2D{0, 0},
                      .amount = std::nullopt, .fixed_radius = std::nullopt}};
    CHECK_THROWS_AS(get_transactions(data, GridSpec{0, 0, 1, 1, 1}, {}), ValidationError);
}

TEST_CASE("wind morphs amount-driven buffers only") {
    WindField field{{WindStation{"s", Point2D{0, 0}, 10.0, 0.0}}, 2.0};
    BufferOptions opts;

    SpatialObject plume{.id = "p", .feature = "P", .shape = Point2D{0, 0},
                        .amount = std::exp(2.0), .fixed_radius = std::nullopt};
    Buffer morphed = make_buffer(plume, opts, &field);
    CHECK(std::holds_alternative<EllipseZone>(morphed.zone));

    SpatialObject range{.id = "c", .feature = "C", .shape = Point2D{0, 0},
                        .amount = std::nullopt, .fixed_radius = 3.0};
    Buffer circle = make_buffer(range, opts, &field);
    CHECK(std::holds_alternative<CircleZone>(circle.zone));
}

TEST_CASE("polyline buffers assign probability one on the line itself") {
    SpatialObject road{.id = "r", .feature = "ROAD",
                       .shape = Polyline{{Point2D{0, 0}, Point2D{4, 0}}},
                       .amount = std::nullopt, .fixed_radius = 1.0};
    std::vector<SpatialObject> data{road};
    GridSpec grid{0, -2, 4, 2, 1.0};
    auto txs = get_transactions(data, grid, {});
    bool on_line = false;
    for (const auto& t : txs.transactions) {
        if (t.grid_point == Point2D{2, 0}) {
            on_line = true;
            CHECK(t.probability_of("ROAD") == 1.0);
        }
        CHECK(std::abs(t.grid_point.y) <= 1.0);
    }
    CHECK(on_line);
}

TEST_CASE("transaction dump is grid-ordered csv") {
    std::vector<SpatialObject> data{point_obj("a", "A", 1, 1, 1.0)};
    GridSpec grid{0, 0, 2, 2, 1.0};
    auto txs = get_transactions(data, grid, {});
    std::ostringstream out;
    write_transactions_csv(out, txs);
    std::string text = out.str();
    CHECK(text.rfind("gx,gy,feature,probability\n", 0) == 0);
    CHECK(text.find("1,1,A,1\n") != std::string::npos);
}

TEST_CASE("fingerprint tracks dataset content") {
    std::vector<SpatialObject> a{point_obj("a", "A", 0, 0, 1.0)};
    std::vector<SpatialObject> b{point_obj("a", "A", 0, 0.5, 1.0)};
    CHECK(dataset_fingerprint(a) == dataset_fingerprint(a));
    CHECK(dataset_fingerprint(a) != dataset_fingerprint(b));
}

TEST_CASE("grid covering spans every buffer") {
    std::mt19937_64 rng(3);
    auto data = testing::random_point_dataset(rng, {"A", "B"}, 6, BBox{0, 0, 30, 30}, 2.5);
    BufferOptions buffer;
    GridSpec grid = grid_covering(data, 1.0, buffer, nullptr);
    for (const auto& obj : data) {
        BBox b = make_buffer(obj, buffer, nullptr).bounds();
        CHECK(b.min_x >= grid.min_x - 1e-12);
        CHECK(b.min_y >= grid.min_y - 1e-12);
        CHECK(b.max_x <= grid.max_x + 1e-12);
        CHECK(b.max_y <= grid.max_y + 1e-12);
    }
}

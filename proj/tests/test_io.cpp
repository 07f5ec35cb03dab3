#include <random>
#include <sstream>

#include <doctest.h>

#include "coloc/dataset_io.hpp"
#include "coloc/errors.hpp"
#include "coloc/rng.hpp"

using namespace coloc;

TEST_CASE("ingest parses the feature csv") {
    std::istringstream in(
        "id,feature,shape_type,coords,amount\n"
        "p1,BENZENE,point,3.0 4.0,1000\n"
        "l1,ROAD,line,0 0;5 0;5 5,\n"
        "g1,CITY,polygon,0 0;4 0;4 4;0 4,\n");
    auto data = ingest(in);
    REQUIRE(data.size() == 3);

    CHECK(data[0].id == "p1");
    CHECK(data[0].feature == "BENZENE");
    CHECK(std::get<Point2D>(data[0].shape) == Point2D{3.0, 4.0});
    CHECK(data[0].amount == 1000.0);
    CHECK(!data[0].fixed_radius);

    CHECK(std::get<Polyline>(data[1].shape).points.size() == 3);
    CHECK(!data[1].amount);
    CHECK(std::get<Polygon>(data[2].shape).ring.size() == 4);
}

TEST_CASE("a closed polygon ring drops its duplicate vertex") {
    std::istringstream in(
        "id,feature,shape_type,coords,amount\n"
        "g1,CITY,polygon,0 0;4 0;4 4;0 4;0 0,\n");
    auto data = ingest(in);
    CHECK(std::get<Polygon>(data[0].shape).ring.size() == 4);
}

TEST_CASE("ingest errors carry line numbers") {
    auto expect_error = [](const std::string& body, const char* needle) {
        std::istringstream in("id,feature,shape_type,coords,amount\n" + body);
        try {
            ingest(in);
            FAIL_CHECK("expected a validation error for: " << body);
        } catch (const ValidationError& e) {
            std::string what = e.what();
            CHECK(what.find("line 2") != std::string::npos);
            CHECK(what.find(needle) != std::string::npos);
        }
    };
    expect_error("g1,CITY,polygon,0 0;1 1,\n", "polygon");
    expect_error("p1,A,point,1 2,-5\n", "negative amount");
    expect_error("p1,A,point,1 x,\n", "coordinate");
    expect_error("p1,A,blob,1 2,\n", "shape_type");
    expect_error("p1,A,point,1 2\n", "5 fields");
}

TEST_CASE("header is mandatory, duplicate ids are not allowed") {
    std::istringstream missing("p1,A,point,1 2,\n");
    CHECK_THROWS_AS(ingest(missing), ValidationError);

    std::istringstream dup(
        "id,feature,shape_type,coords,amount\n"
        "p1,A,point,1 2,\n"
        "p1,B,point,3 4,\n");
    CHECK_THROWS_AS(ingest(dup), ValidationError);
}

TEST_CASE("empty file after the header is an empty dataset") {
    std::istringstream in("id,feature,shape_type,coords,amount\n");
    CHECK(ingest(in).empty());
}

namespace {

std::vector<SpatialObject> random_dataset(std::mt19937_64& rng) {
    std::vector<SpatialObject> data;
    int n = 1 + static_cast<int>(uniform_below(rng, 12));
    for (int i = 0; i < n; ++i) {
        SpatialObject obj;
        obj.id = "o" + std::to_string(i);
        obj.feature = "F" + std::to_string(uniform_below(rng, 4));
        switch (uniform_below(rng, 3)) {
            case 0:
                obj.shape = uniform_in_box(rng, BBox{-100, -100, 100, 100});
                break;
            case 1: {
                Polyline line;
                int pts = 2 + static_cast<int>(uniform_below(rng, 3));
                for (int p = 0; p < pts; ++p) {
                    line.points.push_back(uniform_in_box(rng, BBox{-10, -10, 10, 10}));
                }
                obj.shape = line;
                break;
            }
            default: {
                // A triangle built around a random center is always simple.
                Point2D c = uniform_in_box(rng, BBox{-10, -10, 10, 10});
                obj.shape = Polygon{{Point2D{c.x - 1, c.y - 1}, Point2D{c.x + 1, c.y - 1},
                                     Point2D{c.x, c.y + 1}}};
                break;
            }
        }
        if (uniform_unit(rng) < 0.6) obj.amount = uniform_in(rng, 0.0, 5e7);
        data.push_back(std::move(obj));
    }
    return data;
}

}  // namespace

TEST_CASE("serialize and ingest round-trip") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 100; ++trial) {
        auto data = random_dataset(rng);
        std::ostringstream out;
        serialize(out, data);
        std::istringstream in(out.str());
        auto back = ingest(in);
        CHECK(back == data);
    }
}

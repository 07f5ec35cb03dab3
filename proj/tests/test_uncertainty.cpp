#include <doctest.h>

#include "coloc/errors.hpp"
#include "coloc/uncertainty.hpp"

using namespace coloc;

TEST_CASE("curve model values") {
    auto m = UncertaintyModel::curve();
    CHECK(presence_probability(m, 0.0) == doctest::Approx(1.0));
    CHECK(presence_probability(m, 0.5) == doctest::Approx(0.5));
    CHECK(presence_probability(m, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("linear model values") {
    auto m = UncertaintyModel::linear();
    CHECK(presence_probability(m, 0.25) == doctest::Approx(0.75));
    CHECK(presence_probability(m, 0.0) == 1.0);
    CHECK(presence_probability(m, 1.0) == 0.0);
}

TEST_CASE("categorical steps") {
    auto m = UncertaintyModel::default_categorical();
    CHECK(presence_probability(m, 0.0) == 1.0);
    CHECK(presence_probability(m, 0.25) == 1.0);   // bound is inclusive
    CHECK(presence_probability(m, 0.26) == 0.75);
    CHECK(presence_probability(m, 0.6) == 0.5);
    CHECK(presence_probability(m, 1.0) == 0.25);
}

TEST_CASE("certain model is an indicator") {
    auto m = UncertaintyModel::certain();
    CHECK(presence_probability(m, 0.0) == 1.0);
    CHECK(presence_probability(m, 1.0) == 1.0);
}

TEST_CASE("distance outside [0,1] is a caller bug") {
    auto m = UncertaintyModel::curve();
    CHECK_THROWS_AS(presence_probability(m, -0.01), ValidationError);
    CHECK_THROWS_AS(presence_probability(m, 1.01), ValidationError);
}

TEST_CASE("all models are nonincreasing over the unit interval") {
    for (auto m : {UncertaintyModel::curve(), UncertaintyModel::linear(),
                   UncertaintyModel::certain(), UncertaintyModel::default_categorical()}) {
        double prev = 2.0;
        for (int i = 0; i <= 1000; ++i) {
            double p = presence_probability(m, i / 1000.0);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p <= prev);
            prev = p;
        }
    }
}

TEST_CASE("curve is symmetric about its midpoint") {
    auto m = UncertaintyModel::curve();
    for (int i = 0; i <= 1000; ++i) {
        double x = i / 1000.0;
        double sum = presence_probability(m, x) + presence_probability(m, 1.0 - x);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("categorical validation") {
    CHECK_THROWS_AS(UncertaintyModel::categorical({{0.5, 0.4}, {0.4, 0.2}}), ValidationError);
    CHECK_THROWS_AS(UncertaintyModel::categorical({{0.5, 0.4}, {1.0, 0.6}}), ValidationError);
    CHECK_THROWS_AS(UncertaintyModel::categorical({{0.5, 1.0}, {0.9, 0.5}}), ValidationError);
    CHECK_NOTHROW(UncertaintyModel::categorical({{0.5, 1.0}, {1.0, 0.5}}));
}

TEST_CASE("model names round-trip through parse") {
    for (const char* name : {"curve", "linear", "categorical", "certain"}) {
        CHECK(UncertaintyModel::parse(name).name() == name);
    }
    CHECK_THROWS_AS(UncertaintyModel::parse("bogus"), ValidationError);
}

#include <doctest.h>

#include "coloc/candidates.hpp"
#include "coloc/errors.hpp"
#include "support/fixtures.hpp"

using namespace coloc;

namespace {

std::vector<std::string> feature_range(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        names.push_back("F" + std::string(i < 9 ? "0" : "") + std::to_string(i + 1));
    }
    return names;
}

std::size_t choose_sum(int n, int d) {
    std::size_t total = 0;
    for (int k = 1; k <= d; ++k) {
        std::size_t c = 1;
        for (int i = 0; i < k; ++i) {
            c = c * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
        }
        total += c;
    }
    return total;
}

}  // namespace

TEST_CASE("rule enumeration counts") {
    CHECK(enumerate_rules(feature_range(47), "CANCER", 3).items.size() == 17343);
    CHECK(enumerate_rules(feature_range(7), "D", 3).items.size() == 63);
    CHECK(enumerate_rules(feature_range(1), "D", 1).items.size() == 1);
}

TEST_CASE("rule enumeration count equals the binomial sum for all small shapes") {
    for (int n = 1; n <= 50; ++n) {
        for (int d = 1; d <= 3; ++d) {
            CHECK(enumerate_rules(feature_range(n), "Y", d).items.size() == choose_sum(n, d));
        }
    }
}

TEST_CASE("pattern enumeration counts") {
    CHECK(enumerate_patterns(feature_range(4), 2).items.size() == 6);
    CHECK(enumerate_patterns(feature_range(3), 3).items.size() == 4);
    CHECK(enumerate_patterns(feature_range(2), 2).items.size() == 1);
}

TEST_CASE("enumeration is deterministic and ordered by size then lexicographically") {
    auto set = enumerate_rules(std::vector<std::string>{"B", "A", "C"}, "Y", 2);
    REQUIRE(set.items.size() == 6);
    CHECK(item_label(set.items[0].item) == "A->Y");
    CHECK(item_label(set.items[1].item) == "B->Y");
    CHECK(item_label(set.items[2].item) == "C->Y");
    CHECK(item_label(set.items[3].item) == "A+B->Y");
    CHECK(item_label(set.items[4].item) == "A+C->Y");
    CHECK(item_label(set.items[5].item) == "B+C->Y");

    auto again = enumerate_rules(std::vector<std::string>{"C", "A", "B"}, "Y", 2);
    for (std::size_t i = 0; i < set.items.size(); ++i) {
        CHECK(item_label(set.items[i].item) == item_label(again.items[i].item));
    }
}

TEST_CASE("consequent may not appear among the causes") {
    CHECK_THROWS_AS(enumerate_rules(std::vector<std::string>{"A", "Y"}, "Y", 2),
                    ValidationError);
}

TEST_CASE("zero-prevalence pruning") {
    auto txs = testing::example_transactions();

    SUBCASE("zero-prevalence rules are removed") {
        auto set = enumerate_rules(std::vector<std::string>{"A", "Z"}, "B", 1);
        auto kept = prune_zero_prevalence(set, txs, Measure::expected);
        REQUIRE(kept.items.size() == 1);
        CHECK(item_label(kept.items[0].item) == "A->B");
        CHECK(kept.items[0].prevalence == doctest::Approx(0.76 / 1.7));
    }
    SUBCASE("prevalent candidates are untouched") {
        auto set = enumerate_rules(std::vector<std::string>{"A", "C"}, "B", 2);
        auto kept = prune_zero_prevalence(set, txs, Measure::expected);
        CHECK(kept.items.size() == set.items.size());
    }
    SUBCASE("threshold semantics are a non-strict cut") {
        auto set = enumerate_rules(std::vector<std::string>{"A"}, "B", 1);
        auto kept = prune_zero_prevalence(set, txs, Measure::expected, 1.0);
        CHECK(kept.items.empty());  // 0.447 <= 1.0
    }
}

TEST_CASE("labels render rules and patterns") {
    CHECK(item_label(CandidateItem{make_rule({"C1", "C2"}, {"D"})}) == "C1+C2->D");
    CHECK(item_label(CandidateItem{make_pattern({"B", "A"})}) == "A+B");
}

#pragma once

#include <string>
#include <vector>

#include "coloc/transactions.hpp"

namespace coloc {

/// Prevalence semantics: probability-weighted (expected support/confidence)
/// or deterministic presence counting.
enum class Measure { expected, certain };

std::string to_string(Measure m);
Measure parse_measure(const std::string& name);

/// Non-empty set of distinct features, kept sorted.
struct Pattern {
    std::vector<std::string> features;

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Co-location rule X -> Y with disjoint non-empty feature sets.
struct Rule {
    std::vector<std::string> antecedent;
    std::vector<std::string> consequent;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Sorts, dedups, and validates.
Pattern make_pattern(std::vector<std::string> features);
Rule make_rule(std::vector<std::string> antecedent, std::vector<std::string> consequent);

/// X given as already-sorted; result is sorted(X union Y).
Pattern rule_union(const Rule& r);

/// Product of the pattern's per-feature probabilities in t; 0 when any
/// feature is absent.
double pattern_probability(const Pattern& p, const Transaction& t);

/// Sum of pattern_probability over transactions, in transaction order. The
/// order is fixed so results are bit-reproducible.
double expected_support(const Pattern& p, const TransactionSet& txs);

/// ExpSup(X u Y) / ExpSup(X). Throws UndefinedConfidenceError when the
/// antecedent's expected support is zero.
double expected_confidence(const Rule& r, const TransactionSet& txs);

/// Deterministic support: a transaction contains a pattern when every
/// feature is present with any positive probability.
long support(const Pattern& p, const TransactionSet& txs);

/// Sup(X u Y) / Sup(X). Throws UndefinedConfidenceError when Sup(X) == 0.
double confidence(const Rule& r, const TransactionSet& txs);

}  // namespace coloc

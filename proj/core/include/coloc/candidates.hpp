#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "coloc/measures.hpp"

namespace coloc {

using CandidateItem = std::variant<Pattern, Rule>;

struct Candidate {
    CandidateItem item;
    double prevalence = 0.0;  // observed; filled by prune_zero_prevalence
};

struct CandidateSet {
    std::vector<Candidate> items;
    int max_size = 3;  // d: antecedent size cap for rules, pattern size cap otherwise
};

/// "C1+C2->D" for rules, "A+B" for patterns.
std::string item_label(const CandidateItem& item);

/// All rules X -> {consequent} with X drawn from cause_features and
/// 1 <= |X| <= max_antecedent, in deterministic order: by antecedent size,
/// lexicographic within each size.
CandidateSet enumerate_rules(std::span<const std::string> cause_features,
                             const std::string& consequent, int max_antecedent);

/// All feature subsets of size 2..max_size, same ordering scheme.
CandidateSet enumerate_patterns(std::span<const std::string> features, int max_size);

/// Observed prevalence of one candidate: expected support (or deterministic
/// support) for patterns, expected confidence (or confidence) for rules.
/// A rule whose antecedent has zero support reads as prevalence 0 here; such
/// rules are exactly what the zero-prevalence filter removes.
double observed_prevalence(const CandidateItem& item, const TransactionSet& txs,
                           Measure measure);

/// Filter 1: drops candidates with observed prevalence <= min_prevalence and
/// records the prevalence on the survivors. The default threshold 0 removes
/// exactly the zero-prevalence candidates, which can never be significant.
CandidateSet prune_zero_prevalence(const CandidateSet& cands, const TransactionSet& txs,
                                   Measure measure, double min_prevalence = 0.0);

}  // namespace coloc

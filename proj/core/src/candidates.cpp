#include "coloc/candidates.hpp"

#include <algorithm>

#include "coloc/errors.hpp"

namespace coloc {

namespace {

std::vector<std::string> sorted_unique(std::span<const std::string> names) {
    std::vector<std::string> out(names.begin(), names.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Visits all k-subsets of `pool` in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<std::string>& pool, int k, Fn&& fn) {
    int n = static_cast<int>(pool.size());
    if (k > n || k <= 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<std::string> subset;
        subset.reserve(static_cast<std::size_t>(k));
        for (int i : idx) subset.push_back(pool[static_cast<std::size_t>(i)]);
        fn(std::move(subset));

        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) {
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += '+';
        out += names[i];
    }
    return out;
}

}  // namespace

std::string item_label(const CandidateItem& item) {
    if (const auto* rule = std::get_if<Rule>(&item)) {
        return join(rule->antecedent) + "->" + join(rule->consequent);
    }
    return join(std::get<Pattern>(item).features);
}

CandidateSet enumerate_rules(std::span<const std::string> cause_features,
                             const std::string& consequent, int max_antecedent) {
    if (max_antecedent < 1) throw ValidationError("enumerate rules: max antecedent must be >= 1");
    std::vector<std::string> causes = sorted_unique(cause_features);
    if (std::binary_search(causes.begin(), causes.end(), consequent)) {
        throw ValidationError("enumerate rules: consequent '" + consequent +
                              "' appears among cause features");
    }

    CandidateSet set;
    set.max_size = max_antecedent;
    for (int k = 1; k <= max_antecedent; ++k) {
        for_each_combination(causes, k, [&](std::vector<std::string> subset) {
            set.items.push_back(
                Candidate{Rule{std::move(subset), {consequent}}, 0.0});
        });
    }
    return set;
}

CandidateSet enumerate_patterns(std::span<const std::string> features, int max_size) {
    if (max_size < 2) throw ValidationError("enumerate patterns: max size must be >= 2");
    std::vector<std::string> pool = sorted_unique(features);

    CandidateSet set;
    set.max_size = max_size;
    for (int k = 2; k <= max_size; ++k) {
        for_each_combination(pool, k, [&](std::vector<std::string> subset) {
            set.items.push_back(Candidate{Pattern{std::move(subset)}, 0.0});
        });
    }
    return set;
}

double observed_prevalence(const CandidateItem& item, const TransactionSet& txs,
                           Measure measure) {
    if (const auto* pattern = std::get_if<Pattern>(&item)) {
        return measure == Measure::expected
                   ? expected_support(*pattern, txs)
                   : static_cast<double>(support(*pattern, txs));
    }
    const auto& rule = std::get<Rule>(item);
    if (measure == Measure::expected) {
        double denom = expected_support(Pattern{rule.antecedent}, txs);
        if (denom == 0.0) return 0.0;
        return expected_support(rule_union(rule), txs) / denom;
    }
    long denom = support(Pattern{rule.antecedent}, txs);
    if (denom == 0) return 0.0;
    return static_cast<double>(support(rule_union(rule), txs)) / static_cast<double>(denom);
}

CandidateSet prune_zero_prevalence(const CandidateSet& cands, const TransactionSet& txs,
                                   Measure measure, double min_prevalence) {
    CandidateSet kept;
    kept.max_size = cands.max_size;
    for (const auto& cand : cands.items) {
        double prevalence = observed_prevalence(cand.item, txs, measure);
        if (prevalence <= min_prevalence) continue;
        kept.items.push_back(Candidate{cand.item, prevalence});
    }
    return kept;
}

}  // namespace coloc

#include "coloc/measures.hpp"

#include <algorithm>

#include "coloc/errors.hpp"

namespace coloc {

std::string to_string(Measure m) {
    return m == Measure::expected ? "expected" : "certain";
}

Measure parse_measure(const std::string& name) {
    if (name == "expected") return Measure::expected;
    if (name == "certain") return Measure::certain;
    throw ValidationError("unknown measure '" + name + "'");
}

Pattern make_pattern(std::vector<std::string> features) {
    std::sort(features.begin(), features.end());
    features.erase(std::unique(features.begin(), features.end()), features.end());
    if (features.empty()) throw ValidationError("pattern: empty feature set");
    return Pattern{std::move(features)};
}

Rule make_rule(std::vector<std::string> antecedent, std::vector<std::string> consequent) {
    Pattern x = make_pattern(std::move(antecedent));
    Pattern y = make_pattern(std::move(consequent));
    for (const auto& f : y.features) {
        if (std::binary_search(x.features.begin(), x.features.end(), f)) {
            throw ValidationError("rule: antecedent and consequent share feature '" + f + "'");
        }
    }
    return Rule{std::move(x.features), std::move(y.features)};
}

Pattern rule_union(const Rule& r) {
    std::vector<std::string> all = r.antecedent;
    all.insert(all.end(), r.consequent.begin(), r.consequent.end());
    std::sort(all.begin(), all.end());
    return Pattern{std::move(all)};
}

double pattern_probability(const Pattern& p, const Transaction& t) {
    // Both feature lists are sorted; walk them together. The product is taken
    // in sorted feature order so every evaluation path multiplies in the same
    // sequence.
    double prob = 1.0;
    auto it = t.entries.begin();
    for (const auto& f : p.features) {
        while (it != t.entries.end() && it->first < f) ++it;
        if (it == t.entries.end() || it->first != f) return 0.0;
        prob *= it->second;
    }
    return prob;
}

double expected_support(const Pattern& p, const TransactionSet& txs) {
    double sum = 0.0;
    for (const auto& t : txs.transactions) sum += pattern_probability(p, t);
    return sum;
}

double expected_confidence(const Rule& r, const TransactionSet& txs) {
    double denom = expected_support(Pattern{r.antecedent}, txs);
    if (denom == 0.0) {
        throw UndefinedConfidenceError("expected confidence of '" +
                                       (r.antecedent.empty() ? "" : r.antecedent.front()) +
                                       "...' rule: antecedent has zero expected support");
    }
    return expected_support(rule_union(r), txs) / denom;
}

namespace {

bool contains_all(const Pattern& p, const Transaction& t) {
    auto it = t.entries.begin();
    for (const auto& f : p.features) {
        while (it != t.entries.end() && it->first < f) ++it;
        if (it == t.entries.end() || it->first != f) return false;
    }
    return true;
}

}  // namespace

long support(const Pattern& p, const TransactionSet& txs) {
    long count = 0;
    for (const auto& t : txs.transactions) {
        if (contains_all(p, t)) ++count;
    }
    return count;
}

double confidence(const Rule& r, const TransactionSet& txs) {
    long denom = support(Pattern{r.antecedent}, txs);
    if (denom == 0) {
        throw UndefinedConfidenceError("confidence: antecedent has zero support");
    }
    return static_cast<double>(support(rule_union(r), txs)) / static_cast<double>(denom);
}

}  // namespace coloc

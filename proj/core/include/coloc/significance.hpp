#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coloc/candidates.hpp"
#include "coloc/nullmodels.hpp"
#include "coloc/transactions.hpp"

namespace coloc {

enum class MiningMode { patterns, rules };

std::string to_string(MiningMode m);
MiningMode parse_mode(const std::string& name);

struct SignificanceConfig {
    int runs = 99;           // R, number of randomized datasets
    double alpha = 0.05;     // significance level
    MiningMode mode = MiningMode::rules;
    Measure measure = Measure::expected;
    std::uint64_t master_seed = 0;
    bool filter2 = true;     // drop candidates whose running p already exceeds alpha
    double min_prevalence = 0.0;  // Filter 1 threshold; negative disables Filter 1
    int max_antecedent = 3;  // d
    std::string consequent;  // rules mode only
    int workers = 1;

    void validate() const;
};

/// Eq-9 style randomization p-value: (count_ge + 1) / (runs + 1). The
/// observed dataset counts in both numerator and denominator.
double p_value(int count_ge, int runs);

struct ReportItem {
    CandidateItem item;
    double expsup = 0.0;      // ExpSup of the pattern (X u Y for rules); Sup under certain
    double prevalence = 0.0;  // ExpConf for rules, ExpSup for patterns
    double p = 1.0;
};

struct RunStat {
    int evaluated = 0;     // candidates alive when the run started
    double wall_ms = 0.0;  // diagnostics only; never part of deterministic artifacts
};

struct MiningReport {
    SignificanceConfig config;
    GridSpec grid;
    std::string model_name;
    std::string null_strategy;
    std::uint64_t fingerprint = 0;
    std::size_t transaction_count = 0;
    std::size_t candidates_enumerated = 0;
    std::size_t candidates_after_filter1 = 0;
    std::vector<ReportItem> items;  // significant candidates, enumeration order
    std::vector<RunStat> run_stats;
    double observed_wall_ms = 0.0;
};

/// Randomization-test engine on an explicit candidate set. Transactionizes
/// the observed dataset, applies Filter 1, then for each run generates a
/// randomized dataset (seed derived from master_seed and the run index),
/// counts prevalence exceedances (non-strict: randomized >= observed), and
/// optionally eliminates candidates early once their running p-value passes
/// alpha. Runs may execute on several workers, but exceedance merging and
/// elimination happen in run-index order, so the report is byte-identical
/// for any worker count.
MiningReport run_significance(const CandidateSet& candidates,
                              std::span<const SpatialObject> dataset,
                              const GridSpec& grid, const TransactionizeOptions& tx_opts,
                              const NullModelSpec& null_spec,
                              const SignificanceConfig& cfg);

/// Full pipeline: enumerate candidates from the dataset's features per the
/// config, then run the significance test.
MiningReport mine_significant(std::span<const SpatialObject> dataset,
                              const GridSpec& grid, const TransactionizeOptions& tx_opts,
                              const NullModelSpec& null_spec,
                              const SignificanceConfig& cfg);

}  // namespace coloc

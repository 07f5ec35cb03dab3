#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coloc/significance.hpp"

namespace coloc {

/// Everything one mining invocation needs; serialized to the run manifest so
/// an identical report can be reproduced later.
struct RunConfig {
    std::string input_path;
    std::string wind_path;  // empty = no wind field
    std::string out_dir = ".";

    double grid_spacing = 1.0;
    std::string model = "curve";
    MiningMode mode = MiningMode::rules;
    Measure measure = Measure::expected;
    std::string consequent;
    int runs = 99;
    double alpha = 0.05;
    int max_antecedent = 3;
    std::uint64_t master_seed = 0;
    double min_prevalence = 0.0;
    bool filter1 = true;
    bool filter2 = true;
    NullStrategy null_strategy = NullStrategy::randomize_both;

    double default_radius = 1.0;  // buffer radius for objects without an amount
    double r_min = 0.1;
    double gamma = 0.3;
    double idw_power = 2.0;
    int workers = 1;  // execution detail; excluded from the manifest

    void validate() const;
};

/// Context assembled from a RunConfig: materialized per-object radii, wind
/// field, uncertainty model, grid, and null-model spec.
struct PipelineInputs {
    std::vector<SpatialObject> dataset;
    TransactionizeOptions tx_opts;
    GridSpec grid;
    NullModelSpec null_spec;
};

PipelineInputs prepare_inputs(const RunConfig& cfg, std::vector<SpatialObject> dataset);

/// In-memory mining pipeline (ingestion excluded).
MiningReport execute_mine(const RunConfig& cfg, std::vector<SpatialObject> dataset);

struct BaselineResult {
    double mean_threshold = 0.0;   // mean prevalence over all candidates
    std::size_t enumerated = 0;
    std::size_t kept = 0;          // candidates at or above the mean
    MiningReport report;
};

/// Prevalence-mean cutoff used by the naive pipeline: keeps candidates whose
/// prevalence is >= the arithmetic mean (ties at the mean retained).
CandidateSet prune_below_mean(const CandidateSet& cands, double* mean_out = nullptr);

/// Naive comparison pipeline: score every candidate, prune below the mean
/// prevalence, then (optionally) run the significance test on the survivors.
BaselineResult execute_baseline(const RunConfig& cfg, std::vector<SpatialObject> dataset,
                                bool apply_significance = true);

/// CLI entry points: ingest, execute, write artifacts under cfg.out_dir
/// (report.json/report.csv/survivors.csv/timings.csv/manifest.json). Return
/// a process exit status.
int run_mine(const RunConfig& cfg);
int run_baseline(const RunConfig& cfg, bool apply_significance);
int run_transactions_dump(const RunConfig& cfg, const std::string& out_path);

void write_manifest(std::ostream& out, const RunConfig& cfg, std::uint64_t fingerprint);
RunConfig load_manifest(const std::string& path);

// Experiment harnesses.

struct DistanceBenchRow {
    double lo = 0.0;
    double hi = 0.0;
    double avg_expsup = 0.0;
};

/// Average ExpSup of the two-feature pattern per distance range, over
/// `datasets_per_range` generated datasets for each of `ranges` equal
/// subdivisions of [0,2).
std::vector<DistanceBenchRow> bench_distance(int ranges, int datasets_per_range,
                                             double grid_spacing, std::uint64_t seed);

struct GranularityBenchRow {
    double spacing = 0.0;
    std::size_t transactions = 0;
    std::size_t rules = 0;
    double wall_ms = 0.0;
};

std::vector<GranularityBenchRow> bench_granularity(const RunConfig& cfg,
                                                   std::span<const SpatialObject> dataset,
                                                   std::span<const double> spacings);

struct RuntimeBenchRow {
    int runs = 0;
    double wall_ms = 0.0;
};

/// Wall time of the full pipeline for each R value; `reps` repetitions, the
/// median is reported.
std::vector<RuntimeBenchRow> bench_runtime(const RunConfig& cfg,
                                           std::span<const SpatialObject> dataset,
                                           std::span<const int> r_values, int reps = 1);

/// Least-squares linear fit; returns the coefficient of determination.
double linear_fit_r2(std::span<const double> x, std::span<const double> y);

}  // namespace coloc

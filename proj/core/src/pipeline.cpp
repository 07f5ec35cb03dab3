#include "coloc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "coloc/dataset_io.hpp"
#include "coloc/errors.hpp"
#include "coloc/report_io.hpp"
#include "coloc/rng.hpp"

namespace coloc {

namespace fs = std::filesystem;

void RunConfig::validate() const {
    if (runs < 1) throw ValidationError("config: R must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("config: alpha must lie in (0,1)");
    if (!(grid_spacing > 0.0)) throw ValidationError("config: grid spacing must be positive");
    if (!(default_radius > 0.0)) throw ValidationError("config: default radius must be positive");
    if (!(r_min > 0.0)) throw ValidationError("config: r_min must be positive");
    if (!(gamma >= 0.0)) throw ValidationError("config: gamma must be nonnegative");
    if (min_prevalence < 0.0) throw ValidationError("config: min prevalence must be >= 0");
    if (mode == MiningMode::rules && consequent.empty()) {
        throw ValidationError("config: rules mode needs --consequent");
    }
    UncertaintyModel::parse(model);
}

namespace {

SignificanceConfig significance_config(const RunConfig& cfg) {
    SignificanceConfig scfg;
    scfg.runs = cfg.runs;
    scfg.alpha = cfg.alpha;
    scfg.mode = cfg.mode;
    scfg.measure = cfg.measure;
    scfg.master_seed = cfg.master_seed;
    scfg.filter2 = cfg.filter2;
    scfg.min_prevalence = cfg.filter1 ? cfg.min_prevalence : -1.0;
    scfg.max_antecedent = cfg.max_antecedent;
    scfg.consequent = cfg.consequent;
    scfg.workers = cfg.workers;
    return scfg;
}

}  // namespace

PipelineInputs prepare_inputs(const RunConfig& cfg, std::vector<SpatialObject> dataset) {
    cfg.validate();

    PipelineInputs inputs;
    inputs.dataset = std::move(dataset);
    // Objects without an amount fall back to the run-wide radius.
    for (auto& obj : inputs.dataset) {
        if (!obj.amount && !obj.fixed_radius) obj.fixed_radius = cfg.default_radius;
    }

    inputs.tx_opts.model = UncertaintyModel::parse(cfg.model);
    inputs.tx_opts.buffer = BufferOptions{cfg.r_min, cfg.gamma};
    if (!cfg.wind_path.empty()) {
        inputs.tx_opts.wind = WindField{wind::read_stations_file(cfg.wind_path), cfg.idw_power};
    }

    const WindField* wind = inputs.tx_opts.wind ? &*inputs.tx_opts.wind : nullptr;
    inputs.grid = grid_covering(inputs.dataset, cfg.grid_spacing, inputs.tx_opts.buffer, wind);

    inputs.null_spec.strategy = cfg.null_strategy;
    if (cfg.mode == MiningMode::rules) inputs.null_spec.case_feature = cfg.consequent;
    return inputs;
}

MiningReport execute_mine(const RunConfig& cfg, std::vector<SpatialObject> dataset) {
    PipelineInputs in = prepare_inputs(cfg, std::move(dataset));
    return mine_significant(in.dataset, in.grid, in.tx_opts, in.null_spec,
                            significance_config(cfg));
}

CandidateSet prune_below_mean(const CandidateSet& cands, double* mean_out) {
    double mean = 0.0;
    if (!cands.items.empty()) {
        double sum = 0.0;
        for (const auto& c : cands.items) sum += c.prevalence;
        mean = sum / static_cast<double>(cands.items.size());
    }
    if (mean_out) *mean_out = mean;

    // Ties at the mean survive; the comparison tolerates the rounding noise
    // of the mean itself.
    double tol = 1e-9 * std::max(1.0, std::abs(mean));
    CandidateSet kept;
    kept.max_size = cands.max_size;
    for (const auto& c : cands.items) {
        if (c.prevalence >= mean - tol) kept.items.push_back(c);
    }
    return kept;
}

BaselineResult execute_baseline(const RunConfig& cfg, std::vector<SpatialObject> dataset,
                                bool apply_significance) {
    PipelineInputs in = prepare_inputs(cfg, std::move(dataset));
    SignificanceConfig scfg = significance_config(cfg);
    scfg.validate();

    std::vector<std::string> features = dataset_features(in.dataset);
    CandidateSet candidates;
    if (cfg.mode == MiningMode::rules) {
        std::vector<std::string> causes;
        for (const auto& f : features) {
            if (f != cfg.consequent) causes.push_back(f);
        }
        candidates = enumerate_rules(causes, cfg.consequent, cfg.max_antecedent);
    } else {
        candidates = enumerate_patterns(features, cfg.max_antecedent);
    }

    TransactionSet observed = get_transactions(in.dataset, in.grid, in.tx_opts);
    for (auto& cand : candidates.items) {
        cand.prevalence = observed_prevalence(cand.item, observed, cfg.measure);
    }

    BaselineResult result;
    result.enumerated = candidates.items.size();
    CandidateSet survivors = prune_below_mean(candidates, &result.mean_threshold);
    result.kept = survivors.items.size();

    if (apply_significance) {
        result.report =
            run_significance(survivors, in.dataset, in.grid, in.tx_opts, in.null_spec, scfg);
    } else {
        result.report.config = scfg;
        result.report.grid = in.grid;
        result.report.model_name = in.tx_opts.model.name();
        result.report.null_strategy = to_string(in.null_spec.strategy);
        result.report.fingerprint = observed.fingerprint;
        result.report.transaction_count = observed.transactions.size();
        result.report.candidates_enumerated = result.enumerated;
        result.report.candidates_after_filter1 = result.kept;
        for (const auto& cand : survivors.items) {
            double expsup = 0.0;
            if (const auto* rule = std::get_if<Rule>(&cand.item)) {
                expsup = cfg.measure == Measure::expected
                             ? expected_support(rule_union(*rule), observed)
                             : static_cast<double>(support(rule_union(*rule), observed));
            } else {
                const auto& p = std::get<Pattern>(cand.item);
                expsup = cfg.measure == Measure::expected
                             ? expected_support(p, observed)
                             : static_cast<double>(support(p, observed));
            }
            result.report.items.push_back(ReportItem{cand.item, expsup, cand.prevalence, 1.0});
        }
    }
    return result;
}

namespace {

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    out << text;
}

template <typename Writer>
void write_with(const fs::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path.string() + "'");
    writer(out);
}

void write_artifacts(const RunConfig& cfg, const MiningReport& report,
                     const std::string& prefix) {
    fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    write_with(dir / (prefix + "report.json"),
               [&](std::ostream& o) { write_report_json(o, report); });
    write_with(dir / (prefix + "report.csv"),
               [&](std::ostream& o) { write_report_csv(o, report); });
    write_with(dir / (prefix + "survivors.csv"),
               [&](std::ostream& o) { write_survivors_csv(o, report); });
    write_with(dir / (prefix + "timings.csv"),
               [&](std::ostream& o) { write_timings_csv(o, report); });
    write_with(dir / (prefix + "manifest.json"),
               [&](std::ostream& o) { write_manifest(o, cfg, report.fingerprint); });
}

}  // namespace

int run_mine(const RunConfig& cfg) {
    std::vector<SpatialObject> dataset = ingest_file(cfg.input_path);
    MiningReport report = execute_mine(cfg, std::move(dataset));
    write_artifacts(cfg, report, "");
    std::cout << "significant: " << report.items.size() << " of "
              << report.candidates_enumerated << " candidates ("
              << report.candidates_after_filter1 << " after filter 1), "
              << report.transaction_count << " transactions\n";
    return 0;
}

int run_baseline(const RunConfig& cfg, bool apply_significance) {
    std::vector<SpatialObject> dataset = ingest_file(cfg.input_path);
    BaselineResult baseline = execute_baseline(cfg, std::move(dataset), apply_significance);
    write_artifacts(cfg, baseline.report, "baseline_");

    nlohmann::json j;
    j["mean_threshold"] = baseline.mean_threshold;
    j["enumerated"] = baseline.enumerated;
    j["kept"] = baseline.kept;
    j["significant"] = baseline.report.items.size();
    write_text_file(fs::path(cfg.out_dir) / "baseline_summary.json", j.dump(2) + "\n");

    std::cout << "baseline: kept " << baseline.kept << " of " << baseline.enumerated
              << " candidates at mean prevalence " << format_double(baseline.mean_threshold)
              << "; significant: " << baseline.report.items.size() << "\n";
    return 0;
}

int run_transactions_dump(const RunConfig& cfg, const std::string& out_path) {
    std::vector<SpatialObject> dataset = ingest_file(cfg.input_path);
    RunConfig dump_cfg = cfg;
    dump_cfg.mode = MiningMode::patterns;  // mining params are irrelevant to a dump
    PipelineInputs in = prepare_inputs(dump_cfg, std::move(dataset));
    TransactionSet txs = get_transactions(in.dataset, in.grid, in.tx_opts);
    write_with(fs::path(out_path), [&](std::ostream& o) { write_transactions_csv(o, txs); });
    std::cout << txs.transactions.size() << " transactions\n";
    return 0;
}

void write_manifest(std::ostream& out, const RunConfig& cfg, std::uint64_t fingerprint) {
    nlohmann::json j;
    j["input"] = cfg.input_path;
    j["wind"] = cfg.wind_path;
    j["out_dir"] = cfg.out_dir;
    j["grid_spacing"] = cfg.grid_spacing;
    j["model"] = cfg.model;
    j["mode"] = to_string(cfg.mode);
    j["measure"] = to_string(cfg.measure);
    j["consequent"] = cfg.consequent;
    j["R"] = cfg.runs;
    j["alpha"] = cfg.alpha;
    j["max_antecedent"] = cfg.max_antecedent;
    j["master_seed"] = cfg.master_seed;
    j["min_prevalence"] = cfg.min_prevalence;
    j["filter1"] = cfg.filter1;
    j["filter2"] = cfg.filter2;
    j["null_strategy"] = to_string(cfg.null_strategy);
    j["default_radius"] = cfg.default_radius;
    j["r_min"] = cfg.r_min;
    j["gamma"] = cfg.gamma;
    j["idw_power"] = cfg.idw_power;
    j["fingerprint"] = fingerprint;
    out << j.dump(2) << '\n';
}

RunConfig load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open manifest '" + path + "'");
    nlohmann::json j = nlohmann::json::parse(in);

    RunConfig cfg;
    cfg.input_path = j.at("input").get<std::string>();
    cfg.wind_path = j.at("wind").get<std::string>();
    cfg.out_dir = j.at("out_dir").get<std::string>();
    cfg.grid_spacing = j.at("grid_spacing").get<double>();
    cfg.model = j.at("model").get<std::string>();
    cfg.mode = parse_mode(j.at("mode").get<std::string>());
    cfg.measure = parse_measure(j.at("measure").get<std::string>());
    cfg.consequent = j.at("consequent").get<std::string>();
    cfg.runs = j.at("R").get<int>();
    cfg.alpha = j.at("alpha").get<double>();
    cfg.max_antecedent = j.at("max_antecedent").get<int>();
    cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    cfg.min_prevalence = j.at("min_prevalence").get<double>();
    cfg.filter1 = j.at("filter1").get<bool>();
    cfg.filter2 = j.at("filter2").get<bool>();
    cfg.null_strategy = parse_null_strategy(j.at("null_strategy").get<std::string>());
    cfg.default_radius = j.at("default_radius").get<double>();
    cfg.r_min = j.at("r_min").get<double>();
    cfg.gamma = j.at("gamma").get<double>();
    cfg.idw_power = j.at("idw_power").get<double>();
    return cfg;
}

std::vector<DistanceBenchRow> bench_distance(int ranges, int datasets_per_range,
                                             double grid_spacing, std::uint64_t seed) {
    if (ranges < 1) throw ValidationError("bench distance: ranges must be >= 1");
    if (datasets_per_range < 1) throw ValidationError("bench distance: datasets must be >= 1");

    TransactionizeOptions tx_opts;  // curve model, default buffers
    Pattern pair = make_pattern({"F1", "F2"});
    std::vector<DistanceBenchRow> rows;
    double width = 2.0 / static_cast<double>(ranges);
    for (int r = 0; r < ranges; ++r) {
        DistanceBenchRow row;
        row.lo = width * static_cast<double>(r);
        row.hi = width * static_cast<double>(r + 1);
        double sum = 0.0;
        for (int d = 0; d < datasets_per_range; ++d) {
            // Dataset seeds are shared across ranges (common random numbers):
            // range averages are then paired comparisons on the same point
            // constellations, isolating the distance effect from placement
            // noise.
            std::uint64_t ds_seed = derive_seed(seed, static_cast<std::uint64_t>(d));
            auto dataset = gen_distance_pair(row.lo, row.hi, ds_seed);
            GridSpec grid = grid_covering(dataset, grid_spacing, tx_opts.buffer, nullptr);
            TransactionSet txs = get_transactions(dataset, grid, tx_opts);
            sum += expected_support(pair, txs);
        }
        row.avg_expsup = sum / static_cast<double>(datasets_per_range);
        rows.push_back(row);
    }
    return rows;
}

std::vector<GranularityBenchRow> bench_granularity(const RunConfig& cfg,
                                                   std::span<const SpatialObject> dataset,
                                                   std::span<const double> spacings) {
    using clock = std::chrono::steady_clock;
    std::vector<GranularityBenchRow> rows;
    for (double spacing : spacings) {
        RunConfig run_cfg = cfg;
        run_cfg.grid_spacing = spacing;
        auto start = clock::now();
        MiningReport report =
            execute_mine(run_cfg, std::vector<SpatialObject>(dataset.begin(), dataset.end()));
        auto wall = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        rows.push_back(GranularityBenchRow{spacing, report.transaction_count,
                                           report.items.size(), wall});
    }
    return rows;
}

std::vector<RuntimeBenchRow> bench_runtime(const RunConfig& cfg,
                                           std::span<const SpatialObject> dataset,
                                           std::span<const int> r_values, int reps) {
    using clock = std::chrono::steady_clock;
    if (reps < 1) reps = 1;
    std::vector<RuntimeBenchRow> rows;
    for (int r : r_values) {
        std::vector<double> samples;
        for (int rep = 0; rep < reps; ++rep) {
            RunConfig run_cfg = cfg;
            run_cfg.runs = r;
            auto start = clock::now();
            execute_mine(run_cfg, std::vector<SpatialObject>(dataset.begin(), dataset.end()));
            samples.push_back(
                std::chrono::duration<double, std::milli>(clock::now() - start).count());
        }
        std::sort(samples.begin(), samples.end());
        rows.push_back(RuntimeBenchRow{r, samples[samples.size() / 2]});
    }
    return rows;
}

double linear_fit_r2(std::span<const double> x, std::span<const double> y) {
    std::size_t n = x.size();
    if (n != y.size() || n < 2) throw ValidationError("fit: need matching series of >= 2 points");
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mean_x;
        double dy = y[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 1.0;
    double slope = sxy / sxx;
    double ss_res = syy - slope * sxy;
    return 1.0 - ss_res / syy;
}

}  // namespace coloc

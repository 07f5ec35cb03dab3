// colocate: grid-transactionization co-location miner.
//
// Subcommands: mine, baseline, synth {assoc|pair}, bench
// {distance|granularity|runtime}, transactions. The COLOCATE_THREADS
// environment variable caps the worker count of any run.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coloc/dataset_io.hpp"
#include "coloc/errors.hpp"
#include "coloc/nullmodels.hpp"
#include "coloc/pipeline.hpp"
#include "coloc/report_io.hpp"

namespace {

using namespace coloc;

int capped_workers(int requested) {
    if (const char* env = std::getenv("COLOCATE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < requested) return cap;
    }
    return requested;
}

struct MineFlags {
    RunConfig cfg;
    std::string mode = "rules";
    std::string measure = "expected";
    std::string null_strategy = "both";
    bool no_filter1 = false;
    bool no_filter2 = false;
    std::string manifest_path;
};

void add_mine_flags(CLI::App* cmd, MineFlags& flags, bool manifest_option) {
    cmd->add_option("--input", flags.cfg.input_path, "Dataset CSV (id,feature,shape_type,coords,amount)");
    cmd->add_option("--wind", flags.cfg.wind_path, "Wind stations CSV (station_id,x,y,speed,direction)");
    cmd->add_option("--grid", flags.cfg.grid_spacing, "Grid point spacing")->check(CLI::PositiveNumber);
    cmd->add_option("--model", flags.cfg.model, "Uncertainty model: curve|linear|categorical|certain");
    cmd->add_option("--mode", flags.mode, "Mining mode: rules|patterns");
    cmd->add_option("--measure", flags.measure, "Prevalence measure: expected|certain");
    cmd->add_option("--consequent", flags.cfg.consequent, "Consequent feature (rules mode)");
    cmd->add_option("--R", flags.cfg.runs, "Number of simulation runs")->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", flags.cfg.alpha, "Significance level");
    cmd->add_option("--max-antecedent", flags.cfg.max_antecedent, "Max antecedent/pattern size d");
    cmd->add_option("--seed", flags.cfg.master_seed, "Master seed");
    cmd->add_option("--min-prevalence", flags.cfg.min_prevalence, "Filter 1 threshold");
    cmd->add_flag("--no-filter1", flags.no_filter1, "Disable zero-prevalence pruning");
    cmd->add_flag("--no-filter2", flags.no_filter2, "Disable mid-simulation elimination");
    cmd->add_option("--null", flags.null_strategy, "Null model: both|sources|cases|random");
    cmd->add_option("--radius", flags.cfg.default_radius, "Buffer radius for objects without an amount");
    cmd->add_option("--rmin", flags.cfg.r_min, "Radius floor for ln(amount) buffers");
    cmd->add_option("--gamma", flags.cfg.gamma, "Wind stretching coefficient");
    cmd->add_option("--idw-power", flags.cfg.idw_power, "Inverse-distance weighting exponent");
    cmd->add_option("--threads", flags.cfg.workers, "Worker threads (capped by COLOCATE_THREADS)");
    cmd->add_option("--out", flags.cfg.out_dir, "Output directory");
    if (manifest_option) {
        cmd->add_option("--from-manifest", flags.manifest_path,
                        "Reproduce a run from a manifest.json (other flags ignored)");
    }
}

RunConfig resolve(MineFlags& flags) {
    if (!flags.manifest_path.empty()) {
        RunConfig cfg = load_manifest(flags.manifest_path);
        cfg.workers = capped_workers(flags.cfg.workers);
        return cfg;
    }
    RunConfig cfg = flags.cfg;
    cfg.mode = parse_mode(flags.mode);
    cfg.measure = parse_measure(flags.measure);
    cfg.null_strategy = parse_null_strategy(flags.null_strategy);
    cfg.filter1 = !flags.no_filter1;
    cfg.filter2 = !flags.no_filter2;
    cfg.workers = capped_workers(cfg.workers);
    if (cfg.input_path.empty()) throw ValidationError("--input is required");
    if (cfg.max_antecedent > 3) {
        std::cerr << "warning: --max-antecedent " << cfg.max_antecedent
                  << ": support collapses quickly for large candidates; "
                     "expect few transactions backing them\n";
    }
    return cfg;
}

void write_csv_or_stdout(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statistically significant co-location pattern/rule mining over "
                 "uncertain spatial data"};
    app.require_subcommand(1);

    MineFlags mine_flags;
    auto* mine = app.add_subcommand("mine", "Run the significance mining pipeline");
    add_mine_flags(mine, mine_flags, true);

    MineFlags baseline_flags;
    bool prevalence_only = false;
    auto* baseline = app.add_subcommand(
        "baseline", "Naive pipeline: mean-confidence cutoff, then the significance test");
    add_mine_flags(baseline, baseline_flags, false);
    baseline->add_flag("--prevalence-only", prevalence_only,
                       "Stop after the mean-prevalence pruning");

    auto* synth = app.add_subcommand("synth", "Generate synthetic benchmark datasets");
    synth->require_subcommand(1);
    std::uint64_t synth_seed = 1;
    std::string synth_out;
    auto* assoc = synth->add_subcommand("assoc", "Association benchmark (C1..C7 vs D)");
    assoc->add_option("--seed", synth_seed, "Generator seed");
    assoc->add_option("--out", synth_out, "Output CSV path")->required();
    double pair_lo = 0.0, pair_hi = 0.2;
    std::uint64_t pair_seed = 1;
    std::string pair_out;
    auto* pair = synth->add_subcommand("pair", "Two-feature distance benchmark");
    pair->add_option("--lo", pair_lo, "Distance range lower bound");
    pair->add_option("--hi", pair_hi, "Distance range upper bound (exclusive)");
    pair->add_option("--seed", pair_seed, "Generator seed");
    pair->add_option("--out", pair_out, "Output CSV path")->required();

    auto* bench = app.add_subcommand("bench", "Experiment harnesses");
    bench->require_subcommand(1);

    int bd_ranges = 10, bd_datasets = 100;
    double bd_grid = 0.25;
    std::uint64_t bd_seed = 1;
    std::string bd_out;
    auto* bench_distance_cmd =
        bench->add_subcommand("distance", "Average ExpSup vs feature distance");
    bench_distance_cmd->add_option("--ranges", bd_ranges, "Number of distance ranges over [0,2)");
    bench_distance_cmd->add_option("--datasets", bd_datasets, "Datasets per range");
    bench_distance_cmd->add_option("--grid", bd_grid, "Grid spacing");
    bench_distance_cmd->add_option("--seed", bd_seed, "Generator seed");
    bench_distance_cmd->add_option("--out", bd_out, "Output CSV path (default stdout)");

    MineFlags bg_flags;
    std::vector<double> bg_grids{2.0, 1.0, 0.5};
    std::string bg_out;
    auto* bench_gran = bench->add_subcommand("granularity", "Transactions/time/rules per spacing");
    add_mine_flags(bench_gran, bg_flags, false);
    bench_gran->add_option("--grids", bg_grids, "Spacings to sweep")->delimiter(',');
    bench_gran->add_option("--bench-out", bg_out, "Output CSV path (default stdout)");

    MineFlags br_flags;
    std::vector<int> br_rs{10, 20, 40, 80};
    int br_reps = 1;
    std::string br_out;
    auto* bench_rt = bench->add_subcommand("runtime", "Wall time vs simulation count R");
    add_mine_flags(bench_rt, br_flags, false);
    bench_rt->add_option("--R-list", br_rs, "R values to sweep")->delimiter(',');
    bench_rt->add_option("--reps", br_reps, "Repetitions per R (median reported)");
    bench_rt->add_option("--bench-out", br_out, "Output CSV path (default stdout)");

    MineFlags tx_flags;
    std::string tx_out;
    auto* transactions = app.add_subcommand("transactions", "Dump the probabilistic transactions");
    add_mine_flags(transactions, tx_flags, false);
    transactions->add_option("--tx-out", tx_out, "Output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (mine->parsed()) {
            return run_mine(resolve(mine_flags));
        }
        if (baseline->parsed()) {
            return run_baseline(resolve(baseline_flags), !prevalence_only);
        }
        if (assoc->parsed()) {
            serialize_file(synth_out, gen_synthetic_assoc(synth_seed));
            std::cout << "wrote " << synth_out << "\n";
            return 0;
        }
        if (pair->parsed()) {
            serialize_file(pair_out, gen_distance_pair(pair_lo, pair_hi, pair_seed));
            std::cout << "wrote " << pair_out << "\n";
            return 0;
        }
        if (bench_distance_cmd->parsed()) {
            auto rows = bench_distance(bd_ranges, bd_datasets, bd_grid, bd_seed);
            std::string csv = "lo,hi,avg_expsup\n";
            for (const auto& row : rows) {
                csv += format_double(row.lo) + "," + format_double(row.hi) + "," +
                       format_double(row.avg_expsup) + "\n";
            }
            write_csv_or_stdout(bd_out, csv);
            return 0;
        }
        if (bench_gran->parsed()) {
            RunConfig cfg = resolve(bg_flags);
            auto dataset = ingest_file(cfg.input_path);
            auto rows = bench_granularity(cfg, dataset, bg_grids);
            std::string csv = "spacing,transactions,rules,wall_ms\n";
            for (const auto& row : rows) {
                csv += format_double(row.spacing) + "," + std::to_string(row.transactions) +
                       "," + std::to_string(row.rules) + "," + format_double(row.wall_ms) + "\n";
            }
            write_csv_or_stdout(bg_out, csv);
            return 0;
        }
        if (bench_rt->parsed()) {
            RunConfig cfg = resolve(br_flags);
            auto dataset = ingest_file(cfg.input_path);
            auto rows = bench_runtime(cfg, dataset, br_rs, br_reps);
            std::vector<double> xs, ys;
            std::string csv = "R,wall_ms\n";
            for (const auto& row : rows) {
                csv += std::to_string(row.runs) + "," + format_double(row.wall_ms) + "\n";
                xs.push_back(row.runs);
                ys.push_back(row.wall_ms);
            }
            write_csv_or_stdout(br_out, csv);
            if (rows.size() >= 2) {
                std::cerr << "linear fit R^2 = " << format_double(linear_fit_r2(xs, ys)) << "\n";
            }
            return 0;
        }
        if (transactions->parsed()) {
            return run_transactions_dump(resolve(tx_flags), tx_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "coloc/significance.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <unordered_map>

#include "coloc/errors.hpp"
#include "coloc/rng.hpp"

namespace coloc {

std::string to_string(MiningMode m) {
    return m == MiningMode::patterns ? "patterns" : "rules";
}

MiningMode parse_mode(const std::string& name) {
    if (name == "patterns") return MiningMode::patterns;
    if (name == "rules") return MiningMode::rules;
    throw ValidationError("unknown mining mode '" + name + "'");
}

void SignificanceConfig::validate() const {
    if (runs < 1) throw ValidationError("config: R must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("config: alpha must lie in (0,1)");
    if (mode == MiningMode::rules) {
        if (max_antecedent < 1) throw ValidationError("config: max antecedent must be >= 1");
        if (consequent.empty()) throw ValidationError("config: rules mode needs a consequent");
    } else if (max_antecedent < 2) {
        throw ValidationError("config: max pattern size must be >= 2");
    }
    if (workers < 1) throw ValidationError("config: workers must be >= 1");
}

double p_value(int count_ge, int runs) {
    return (static_cast<double>(count_ge) + 1.0) / (static_cast<double>(runs) + 1.0);
}

namespace {

constexpr std::uint32_t kUnknownFeature = std::numeric_limits<std::uint32_t>::max();

using IndexedRow = std::vector<std::pair<std::uint32_t, double>>;

/// Transactions with features replaced by their rank in the sorted feature
/// universe. Rank order equals lexicographic order, so merges and products
/// run in exactly the same sequence as the string-based measures.
std::vector<IndexedRow> index_transactions(
    const TransactionSet& txs,
    const std::unordered_map<std::string, std::uint32_t>& ids) {
    std::vector<IndexedRow> rows;
    rows.reserve(txs.transactions.size());
    for (const auto& t : txs.transactions) {
        IndexedRow row;
        row.reserve(t.entries.size());
        for (const auto& [feature, p] : t.entries) {
            auto it = ids.find(feature);
            if (it != ids.end()) row.emplace_back(it->second, p);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double indexed_product(std::span<const std::uint32_t> ids, const IndexedRow& row) {
    double prob = 1.0;
    auto it = row.begin();
    for (std::uint32_t id : ids) {
        while (it != row.end() && it->first < id) ++it;
        if (it == row.end() || it->first != id) return 0.0;
        prob *= it->second;
    }
    return prob;
}

bool indexed_contains(std::span<const std::uint32_t> ids, const IndexedRow& row) {
    auto it = row.begin();
    for (std::uint32_t id : ids) {
        while (it != row.end() && it->first < id) ++it;
        if (it == row.end() || it->first != id) return false;
    }
    return true;
}

double indexed_expsup(std::span<const std::uint32_t> ids,
                      const std::vector<IndexedRow>& rows) {
    double sum = 0.0;
    for (const auto& row : rows) sum += indexed_product(ids, row);
    return sum;
}

double indexed_sup(std::span<const std::uint32_t> ids, const std::vector<IndexedRow>& rows) {
    long count = 0;
    for (const auto& row : rows) {
        if (indexed_contains(ids, row)) ++count;
    }
    return static_cast<double>(count);
}

struct EngineCandidate {
    CandidateItem item;
    std::vector<std::uint32_t> lhs_ids;   // antecedent (rules) or the pattern
    std::vector<std::uint32_t> full_ids;  // X u Y for rules, == lhs_ids for patterns
    bool is_rule = false;
    bool mappable = true;  // false when a feature is absent from the dataset
    double observed = 0.0;
    double observed_expsup = 0.0;
    int count_ge = 0;
    bool alive = true;
};

double support_of(std::span<const std::uint32_t> ids, const std::vector<IndexedRow>& rows,
                  Measure measure) {
    return measure == Measure::expected ? indexed_expsup(ids, rows) : indexed_sup(ids, rows);
}

double prevalence_of(const EngineCandidate& cand, const std::vector<IndexedRow>& rows,
                     Measure measure) {
    if (!cand.mappable) return 0.0;
    if (!cand.is_rule) return support_of(cand.lhs_ids, rows, measure);
    double denom = support_of(cand.lhs_ids, rows, measure);
    if (denom == 0.0) return 0.0;
    return support_of(cand.full_ids, rows, measure) / denom;
}

std::vector<std::uint32_t> map_ids(const std::vector<std::string>& names,
                                   const std::unordered_map<std::string, std::uint32_t>& ids,
                                   bool& mappable) {
    std::vector<std::uint32_t> out;
    out.reserve(names.size());
    for (const auto& name : names) {
        auto it = ids.find(name);
        if (it == ids.end()) {
            mappable = false;
            out.push_back(kUnknownFeature);
        } else {
            out.push_back(it->second);
        }
    }
    return out;
}

struct RunResult {
    std::vector<double> prevalence;  // slot-indexed; valid only for snapshot-alive slots
    double wall_ms = 0.0;
};

}  // namespace

MiningReport run_significance(const CandidateSet& candidates,
                              std::span<const SpatialObject> dataset,
                              const GridSpec& grid, const TransactionizeOptions& tx_opts,
                              const NullModelSpec& null_spec,
                              const SignificanceConfig& cfg) {
    using clock = std::chrono::steady_clock;
    auto ms_between = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    cfg.validate();
    grid.validate();

    MiningReport report;
    report.config = cfg;
    report.grid = grid;
    report.model_name = tx_opts.model.name();
    report.null_strategy = to_string(null_spec.strategy);
    report.candidates_enumerated = candidates.items.size();

    // Pin the study region now so every run randomizes over the same area.
    NullModelSpec resolved = null_spec;
    if (!resolved.study_region && !dataset.empty()) {
        BBox box = shape_bbox(dataset.front().shape);
        for (const auto& obj : dataset) box.include(shape_bbox(obj.shape));
        resolved.study_region = box;
    }

    auto observed_start = clock::now();
    TransactionSet observed = get_transactions(dataset, grid, tx_opts);
    report.fingerprint = observed.fingerprint;
    report.transaction_count = observed.transactions.size();

    std::vector<std::string> features = dataset_features(dataset);
    std::unordered_map<std::string, std::uint32_t> feature_ids;
    feature_ids.reserve(features.size());
    for (std::uint32_t i = 0; i < features.size(); ++i) feature_ids[features[i]] = i;

    std::vector<IndexedRow> observed_rows = index_transactions(observed, feature_ids);

    // Observed prevalence and Filter 1.
    std::vector<EngineCandidate> states;
    states.reserve(candidates.items.size());
    for (const auto& cand : candidates.items) {
        EngineCandidate state;
        state.item = cand.item;
        if (const auto* rule = std::get_if<Rule>(&cand.item)) {
            state.is_rule = true;
            state.lhs_ids = map_ids(rule->antecedent, feature_ids, state.mappable);
            state.full_ids = map_ids(rule_union(*rule).features, feature_ids, state.mappable);
        } else {
            state.lhs_ids =
                map_ids(std::get<Pattern>(cand.item).features, feature_ids, state.mappable);
            state.full_ids = state.lhs_ids;
        }
        state.observed = prevalence_of(state, observed_rows, cfg.measure);
        state.observed_expsup =
            state.mappable ? support_of(state.full_ids, observed_rows, cfg.measure) : 0.0;
        if (state.observed <= cfg.min_prevalence) continue;  // Filter 1
        states.push_back(std::move(state));
    }
    report.candidates_after_filter1 = states.size();
    report.observed_wall_ms = ms_between(observed_start, clock::now());

    const int total_runs = cfg.runs;
    report.run_stats.resize(static_cast<std::size_t>(total_runs));

    auto execute_run = [&](int run_index, const std::vector<char>& snapshot) {
        auto start = clock::now();
        std::uint64_t seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(run_index));
        std::vector<SpatialObject> randomized = generate_null(dataset, resolved, seed);
        TransactionSet txs = get_transactions(randomized, grid, tx_opts);
        std::vector<IndexedRow> rows = index_transactions(txs, feature_ids);

        RunResult res;
        res.prevalence.assign(states.size(), 0.0);
        for (std::size_t s = 0; s < states.size(); ++s) {
            if (snapshot[s]) res.prevalence[s] = prevalence_of(states[s], rows, cfg.measure);
        }
        res.wall_ms = ms_between(start, clock::now());
        return res;
    };

    // Runs execute in blocks of `workers`. Workers score every candidate
    // alive at block start; the merge then applies exceedances and Filter 2
    // kills strictly in run-index order, which reproduces the sequential
    // semantics for any worker count.
    int next_run = 1;
    while (next_run <= total_runs) {
        int block = std::min(cfg.workers, total_runs - next_run + 1);
        std::vector<char> snapshot(states.size());
        for (std::size_t s = 0; s < states.size(); ++s) snapshot[s] = states[s].alive;

        std::vector<std::future<RunResult>> futures;
        futures.reserve(static_cast<std::size_t>(block));
        for (int b = 0; b < block; ++b) {
            int run_index = next_run + b;
            if (block == 1) {
                std::promise<RunResult> ready;
                ready.set_value(execute_run(run_index, snapshot));
                futures.push_back(ready.get_future());
            } else {
                futures.push_back(std::async(std::launch::async, execute_run, run_index,
                                             std::cref(snapshot)));
            }
        }

        for (int b = 0; b < block; ++b) {
            int run_index = next_run + b;
            RunResult res = futures[static_cast<std::size_t>(b)].get();
            auto& stat = report.run_stats[static_cast<std::size_t>(run_index - 1)];
            stat.wall_ms = res.wall_ms;
            stat.evaluated = static_cast<int>(
                std::count_if(states.begin(), states.end(), [](const auto& s) { return s.alive; }));

            for (std::size_t s = 0; s < states.size(); ++s) {
                auto& state = states[s];
                if (!state.alive) continue;
                if (res.prevalence[s] >= state.observed) {  // non-strict tie handling
                    ++state.count_ge;
                    if (cfg.filter2 && p_value(state.count_ge, total_runs) > cfg.alpha) {
                        state.alive = false;  // Filter 2: already past alpha
                    }
                }
            }
        }
        next_run += block;
    }

    for (const auto& state : states) {
        if (!state.alive) continue;
        double p = p_value(state.count_ge, total_runs);
        if (p > cfg.alpha) continue;
        report.items.push_back(ReportItem{state.item, state.observed_expsup, state.observed, p});
    }
    return report;
}

MiningReport mine_significant(std::span<const SpatialObject> dataset,
                              const GridSpec& grid, const TransactionizeOptions& tx_opts,
                              const NullModelSpec& null_spec,
                              const SignificanceConfig& cfg) {
    cfg.validate();
    std::vector<std::string> features = dataset_features(dataset);

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
    return run_significance(candidates, dataset, grid, tx_opts, null_spec, cfg);
}

}  // namespace coloc

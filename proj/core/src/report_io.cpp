#include "coloc/report_io.hpp"

#include <charconv>
#include <ostream>

#include <json.hpp>

namespace coloc {

std::string format_double(double value) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
    std::string s(end - buf == 16 ? "" : std::string(16 - (end - buf), '0'));
    return s + std::string(buf, end);
}

nlohmann::json item_json(const ReportItem& item, MiningMode mode) {
    nlohmann::json j;
    j["label"] = item_label(item.item);
    if (mode == MiningMode::rules) {
        const auto& rule = std::get<Rule>(item.item);
        j["antecedent"] = rule.antecedent;
        j["consequent"] = rule.consequent;
        j["expsup"] = item.expsup;
        j["expconf"] = item.prevalence;
    } else {
        j["pattern"] = std::get<Pattern>(item.item).features;
        j["expsup"] = item.expsup;
    }
    j["p_value"] = item.p;
    return j;
}

}  // namespace

void write_report_json(std::ostream& out, const MiningReport& report) {
    const auto& cfg = report.config;
    nlohmann::json j;
    j["config"] = {
        {"R", cfg.runs},
        {"alpha", cfg.alpha},
        {"mode", to_string(cfg.mode)},
        {"measure", to_string(cfg.measure)},
        {"max_antecedent", cfg.max_antecedent},
        {"consequent", cfg.consequent},
        {"master_seed", cfg.master_seed},
        {"filter2", cfg.filter2},
        {"min_prevalence", cfg.min_prevalence},
        {"model", report.model_name},
        {"null_strategy", report.null_strategy},
    };
    j["grid"] = {
        {"min_x", report.grid.min_x}, {"min_y", report.grid.min_y},
        {"max_x", report.grid.max_x}, {"max_y", report.grid.max_y},
        {"spacing", report.grid.spacing},
    };
    j["fingerprint"] = hex64(report.fingerprint);
    j["transactions"] = report.transaction_count;
    j["candidates"] = {
        {"enumerated", report.candidates_enumerated},
        {"after_filter1", report.candidates_after_filter1},
    };
    j["items"] = nlohmann::json::array();
    for (const auto& item : report.items) {
        j["items"].push_back(item_json(item, cfg.mode));
    }
    j["survivors"] = nlohmann::json::array();
    for (const auto& stat : report.run_stats) j["survivors"].push_back(stat.evaluated);

    out << j.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, const MiningReport& report) {
    bool rules = report.config.mode == MiningMode::rules;
    out << (rules ? "rule,expsup,expconf,p_value\n" : "pattern,expsup,p_value\n");
    for (const auto& item : report.items) {
        out << item_label(item.item) << ',' << format_double(item.expsup) << ',';
        if (rules) out << format_double(item.prevalence) << ',';
        out << format_double(item.p) << '\n';
    }
}

void write_survivors_csv(std::ostream& out, const MiningReport& report) {
    out << "run,survivors\n";
    for (std::size_t i = 0; i < report.run_stats.size(); ++i) {
        out << (i + 1) << ',' << report.run_stats[i].evaluated << '\n';
    }
}

void write_timings_csv(std::ostream& out, const MiningReport& report) {
    out << "run,wall_ms\n";
    out << "0," << format_double(report.observed_wall_ms) << '\n';
    for (std::size_t i = 0; i < report.run_stats.size(); ++i) {
        out << (i + 1) << ',' << format_double(report.run_stats[i].wall_ms) << '\n';
    }
}

}  // namespace coloc

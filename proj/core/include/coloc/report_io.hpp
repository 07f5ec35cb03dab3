#pragma once

#include <iosfwd>
#include <string>

#include "coloc/significance.hpp"

namespace coloc {

/// Shortest round-trip decimal form of a double ("0.06", not "0.059999...").
std::string format_double(double value);

/// Full report as JSON: config echo, fingerprint, counts, significant items,
/// survivor series. Deterministic for a given report; wall-clock timings are
/// deliberately excluded (see write_timings_csv).
void write_report_json(std::ostream& out, const MiningReport& report);

/// `rule,expsup,expconf,p_value` rows (or `pattern,expsup,p_value` in
/// patterns mode), one per significant item.
void write_report_csv(std::ostream& out, const MiningReport& report);

/// `run,survivors`: candidates evaluated in each simulation run.
void write_survivors_csv(std::ostream& out, const MiningReport& report);

/// `run,wall_ms` with run 0 being the observed stage. Not deterministic.
void write_timings_csv(std::ostream& out, const MiningReport& report);

}  // namespace coloc

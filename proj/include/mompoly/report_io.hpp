#ifndef MOMPOLY_REPORT_IO_HPP
#define MOMPOLY_REPORT_IO_HPP

#include "mompoly/confluence.hpp"
#include "mompoly/roots.hpp"

#include <json.hpp>

#include <string>

namespace mompoly {

// 17-significant-digit rendering: round-trips doubles and keeps every
// emitted file byte-deterministic.
std::string format_float(double v);

// CSV with header family,seq_kind,param,n,x,y_generalized,y_classical,abs_diff.
std::string sweep_to_csv(const SweepResult& result);

// {"config": ..., "rows": [{"param", "sup_distance", "points"}...]}
nlohmann::json sweep_to_json(const SweepResult& result, const nlohmann::json& config);

// Self-contained SVG 1.1, 800x500: classical curve in black, one colored
// polyline per parameter, legend keyed by stroke color.
std::string sweep_to_svg(const SweepResult& result);

// {"config": ..., "roots_f": [[re, im]...], "roots_g": ...,
//  "matched_distance", "bound", "gamma"}
nlohmann::json bound_to_json(const BoundReport& report, const nlohmann::json& config);

std::string seq_kind_name(MomentSequence::Kind kind);

} // namespace mompoly

#endif

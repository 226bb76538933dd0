#pragma once

#include <string>

#include "arrangio/analysis.hpp"
#include "arrangio/arrangement.hpp"
#include "arrangio/os_algebra.hpp"
#include "arrangio/slopes.hpp"
#include "arrangio/ss_config.hpp"

namespace arrangio {

// Field designators for CLI flags: "Q", "Fp:<p>", "cyclotomic:<n>".
FieldPtr parse_field_flag(const std::string& flag);  // BadInputFile
std::string field_flag_spec(const Field& f);

// --- exact JSON file formats (elements as strings, never floats) --------
//
// arrangement: { "field": "Q" | {"Fp": p} | {"cyclotomic": n},
//                "lines": [[c0, c1, c2], ...] }
//   rational and residue coefficients are strings; cyclotomic
//   coefficients are arrays of phi(n) rational strings.
// points:      { "points": [["x", "y"], ...] }
// labeling:    { "m": 5, "k": {"1,2": 3, "1,3": 4, ...} }

std::string arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json_text(const std::string& text);

std::string points_to_json(const PointConfig& pc);
PointConfig points_from_json_text(const std::string& text);

std::string ssconfig_to_json(const SSConfig& cfg);
SSConfig ssconfig_from_json_text(const std::string& text);

// Whole-file helpers. Throw BadInputFile on unreadable/unwritable paths.
std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& text);
Arrangement load_arrangement(const std::string& path);
PointConfig load_points(const std::string& path);
SSConfig load_ssconfig(const std::string& path);

// --- report documents ----------------------------------------------------
// Deterministic bytes for fixed input: object keys sorted, every set
// ordered canonically, no timestamps. canonical=false adds a "meta"
// object (command name, input path); canonical mode omits it so reports
// are byte-identical across environments.

struct ReportMeta {
  std::string command;
  std::string input;
  bool canonical = false;
};

std::string stats_report_json(const Arrangement& a, const ReportMeta& meta);
std::string theorem_report_json(const TheoremReport& r,
                                const ReportMeta& meta);
std::string slope_report_json(const SlopeReport& r, const ReportMeta& meta);
std::string nbc_report_json(const OrderedArrangement& oa,
                            const NbcPairSet& full, const NbcPairSet& quad,
                            const ReportMeta& meta);
std::string equiv_report_json(const Equiv2mVerdict& v, const ReportMeta& meta);
std::string validation_report_json(const SSConfig& cfg,
                                   const ValidationReport& r,
                                   const ReportMeta& meta);
std::string search_report_json(const SearchResult& r, const ReportMeta& meta);
// certify-bm / realize: the solver outcome; when claim is non-null the
// rational chain trace is attached (template-over-Q runs).
std::string solve_report_json(const SSConfig& cfg, const SolveResult& r,
                              const ClaimTrace* claim, const ReportMeta& meta);

}  // namespace arrangio

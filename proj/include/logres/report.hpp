/// @file report.hpp
/// @brief Deterministic JSON report assembly and the text renderer.
///
/// Schema (stable key order, no floating point anywhere):
///   schema_version, tool, problem, ring, geometry, q_results, checks,
///   independence (optional), summary, timings (optional)
/// All rational leaves are "p/q" strings (integers as "p"); structural
/// counts (ranks, degrees, exponents, q, k, n) are JSON integers; flags are
/// JSON booleans.  Hilbert series appear as
///   {"numerator": [[exponent, "coeff"], ...] ascending,
///    "denominator_weights": [w1, ...]}
/// and graded Betti tables as sorted arrays of
///   {"homological_degree", "internal_degree", "rank"}.
/// Re-running the same input reproduces the document byte-for-byte
/// (timings excluded via --no-timings).

#pragma once

#include "logres/freeness.hpp"
#include "logres/problem.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace logres {

using ReportJson = nlohmann::ordered_json;

/// One named check outcome for the report's `checks` array.
struct CheckRow {
    std::string name;
    bool pass = false;
    std::string detail;  ///< shown on failure (and in text mode)
};

// ==== LEAF ENCODERS ====

ReportJson series_json(const HilbertSeries& s);
ReportJson betti_rows_json(const BettiTable& t);
ReportJson poly_strings_json(const std::vector<Polynomial>& ps);
ReportJson vec_strings_json(const std::vector<Vec>& vs);

// ==== SECTION ENCODERS ====

/// Geometry echo: ring facts, both ideals' canonical bases, certificates,
/// the graded Betti table and Hilbert series of R/I_X, and the fundamental
/// form (when supplied).
ReportJson geometry_json(const LogGeometry& G, const FundamentalForm* FF);

/// One q_results entry from a finished analysis.
ReportJson q_result_json(const LogGeometry& G, const QAnalysis& A);

/// A q_results entry for an explicitly requested q outside [0, n] or
/// outside every selected check's range.
ReportJson q_out_of_range_json(int q);

/// A q_results entry for a hypothesis refusal at q (verdict "refused").
ReportJson q_refused_json(int q, const std::string& why);

ReportJson independence_json(const IndependenceReport& r);

ReportJson checks_json(const std::vector<CheckRow>& rows);

/// The freeness verdict string: "free" | "not_free".
std::string verdict_string(const FreenessRecord& rec);

// ==== RENDERING ====

/// Serialize with stable formatting (2-space indent, trailing newline).
std::string dump_report(const ReportJson& doc);

/// Human-readable rendering of the same document: geometry summary,
/// per-q verdict table, Betti table of R/I_X by degree rows, check list
/// with PASS/FAIL and failure details.  Purely a view of the JSON.
std::string render_text(const ReportJson& doc);

} // namespace logres

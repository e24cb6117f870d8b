/// @file runner.hpp
/// @brief Command pipelines: analyze (full report) and verify (check gate).
///
/// Exit-code contract (shared with the CLI):
///   0 — everything requested ran and every check passed,
///   1 — input/hypothesis errors (bad file, bad flags, geometry rejected),
///   2 — a check failed or an analysis at some q had to be refused.
/// The run_* functions return 0 or 2 and throw InputError for class 1.

#pragma once

#include "logres/problem.hpp"
#include "logres/report.hpp"

#include <string>
#include <vector>

namespace logres {

/// Command-line adjustments applied on top of the problem file.
struct RunOptions {
    bool have_q_override = false; ///< any --q flag seen
    bool q_override_all = false;  ///< --q all
    std::vector<int> q_override;  ///< explicit --q values
    Int degree_bound = -1;        ///< --degree-bound; < 0 selects the default
    bool timings = true;          ///< false with --no-timings
};

/// A finished pipeline run: the JSON document plus the exit code (0 or 2).
struct RunResult {
    ReportJson doc;
    int exit_code = 0;
};

/// The q values a run will analyze: the explicit request (CLI --q wins over
/// the file's list) sorted and deduplicated, or, for "all", the union of the
/// selected check families' natural ranges (chains: 0..n; freeness, ext,
/// residues: k..n-1; duality: k..n).  Values outside [0, n] are kept — they
/// become "out_of_range" rows, not errors.
std::vector<int> effective_qs(const ProblemFile& pf, const RunOptions& opt,
                              int n, int k);

/// Full analysis: geometry, fundamental form, every requested q, check rows,
/// independence comparison when an alternative complete intersection is
/// present and freeness is among the checks.
RunResult run_analyze(const ProblemData& pd, const RunOptions& opt);

/// Check gate.  level "basic": geometry and fundamental-form certificates
/// plus freeness at the requested q.  level "full": every check family at
/// every valid q (0..n), the approximation property suite (dual pairing,
/// kernel series, depth analysis, restriction, and the two synthetic
/// reference modules), and the independence comparison when available.
RunResult run_verify(const ProblemData& pd, const std::string& level,
                     const RunOptions& opt);

/// Render a verify document as the line-per-check gate text.
std::string render_verify_text(const ReportJson& doc);

} // namespace logres

/// @file problem.hpp
/// @brief Problem-file schema: JSON description of a geometry and the
///        checks to run on it.
///
/// A problem file is a JSON object with exactly these fields:
///   variables:             list of distinct identifier strings
///   weights:               list of positive integers, same length
///   complete_intersection: list of polynomial strings (the regular sequence)
///   space:                 list of polynomial strings (empty = same as the
///                          complete intersection)
///   q:                     list of integers, or the string "all"
///   checks:                subset of {freeness, duality, chains, ext,
///                          residues}
/// plus one optional field:
///   alternative_complete_intersection: list of polynomial strings — when
///   present and freeness is checked, the analysis is repeated inside this
///   second complete intersection and the two runs are compared.
///
/// All polynomials must be quasi-homogeneous for the declared weights;
/// validation errors name the offending polynomial and monomials.

#pragma once

#include "logres/parser.hpp"

#include <string>
#include <vector>

namespace logres {

/// Parsed and validated problem file (text level).
struct ProblemFile {
    std::string origin;  ///< file path or corpus name, for error messages
    std::vector<std::string> variables;
    std::vector<Int> weights;
    std::vector<std::string> complete_intersection;
    std::vector<std::string> space;
    bool q_all = false;
    std::vector<int> q;                ///< used when !q_all
    std::vector<std::string> checks;   ///< normalized canonical order
    std::vector<std::string> alternative_complete_intersection;
};

/// Parse problem-file JSON text.  `origin` names the source in errors.
/// Throws InputError on malformed JSON, missing/unknown/ill-typed fields,
/// or invalid check names.
ProblemFile parse_problem_json(const std::string& text, const std::string& origin);

/// The problem file evaluated over its ring.
struct ProblemData {
    ProblemFile file;
    RingPtr R;
    std::vector<Polynomial> ci;
    std::vector<Polynomial> space;   ///< empty when the file's space list is empty
    std::vector<Polynomial> alt_ci;  ///< empty when the optional field is absent
};

/// Build the ring and parse every polynomial, checking quasi-homogeneity
/// (errors name the polynomial and a pair of monomials with differing
/// weighted degrees).  Throws InputError on any failure.
ProblemData build_problem(const ProblemFile& pf);

/// The canonical check-name order: freeness, duality, chains, ext,
/// residues.
const std::vector<std::string>& check_names();

} // namespace logres

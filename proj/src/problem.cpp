/// @file problem.cpp
/// @brief Problem-file JSON parsing and validation.

#include "logres/problem.hpp"

#include "logres/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace logres {

namespace {

using Json = nlohmann::json;

[[noreturn]] void bad(const std::string& origin, const std::string& msg) {
    throw InputError(origin + ": " + msg);
}

std::vector<std::string> string_list(const Json& j, const std::string& origin,
                                     const std::string& field) {
    if (!j.is_array()) bad(origin, "field '" + field + "' must be a list");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            bad(origin, "field '" + field + "' must contain strings only");
        out.push_back(e.get<std::string>());
    }
    return out;
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

/// Weighted degree of one monomial term.
Int term_degree(const RingContext& R, const std::vector<int32_t>& exp) {
    Int d = 0;
    for (size_t i = 0; i < exp.size(); ++i) d += R.weights[i] * exp[i];
    return d;
}

std::string monomial_text(const RingContext& R, const std::vector<int32_t>& exp) {
    std::string s;
    bool any = false;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (any) s += "*";
        s += R.vars[i];
        if (exp[i] != 1) s += "^" + std::to_string(exp[i]);
        any = true;
    }
    return any ? s : "1";
}

std::vector<Polynomial> parse_poly_list(const std::vector<std::string>& texts,
                                        const RingPtr& R,
                                        const std::string& origin,
                                        const std::string& field) {
    std::vector<Polynomial> out;
    for (const std::string& t : texts) {
        Polynomial p;
        try {
            p = parse_polynomial(t, R);
        } catch (const InputError& e) {
            bad(origin, "in " + field + " polynomial \"" + t + "\": " + e.what());
        }
        if (p.is_zero())
            bad(origin, field + " polynomial \"" + t + "\" is zero");
        // Quasi-homogeneity first, with an explicit witness pair: geometry
        // errors downstream would otherwise surface as confusing
        // certificate failures.
        Int d0 = 0;
        if (!p.is_homogeneous(&d0)) {
            const auto& terms = p.terms();
            Int first = term_degree(*R, terms[0].exp);
            for (const auto& tm : terms) {
                Int d = term_degree(*R, tm.exp);
                if (d != first)
                    bad(origin, field + " polynomial \"" + t +
                                    "\" is not quasi-homogeneous: monomial " +
                                    monomial_text(*R, terms[0].exp) +
                                    " has weighted degree " + std::to_string(first) +
                                    " but " + monomial_text(*R, tm.exp) + " has " +
                                    std::to_string(d));
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {"freeness", "duality", "chains",
                                                   "ext", "residues"};
    return names;
}

ProblemFile parse_problem_json(const std::string& text, const std::string& origin) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(origin, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) bad(origin, "problem file must be a JSON object");

    static const std::set<std::string> required = {
        "variables", "weights", "complete_intersection", "space", "q", "checks"};
    static const std::set<std::string> optional = {
        "alternative_complete_intersection"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            bad(origin, "unknown field '" + key + "'");
    }
    for (const std::string& key : required)
        if (!j.contains(key)) bad(origin, "missing required field '" + key + "'");

    ProblemFile pf;
    pf.origin = origin;
    pf.variables = string_list(j["variables"], origin, "variables");
    if (pf.variables.empty()) bad(origin, "'variables' must be nonempty");
    std::set<std::string> seen;
    for (const std::string& v : pf.variables) {
        if (!valid_identifier(v))
            bad(origin, "variable name '" + v + "' is not a valid identifier");
        if (!seen.insert(v).second)
            bad(origin, "variable name '" + v + "' is repeated");
    }

    if (!j["weights"].is_array() || j["weights"].size() != pf.variables.size())
        bad(origin, "'weights' must be a list of the same length as 'variables'");
    for (const auto& w : j["weights"]) {
        if (!w.is_number_integer() || w.get<long long>() <= 0)
            bad(origin, "'weights' entries must be positive integers");
        pf.weights.push_back(w.get<long long>());
    }

    pf.complete_intersection =
        string_list(j["complete_intersection"], origin, "complete_intersection");
    if (pf.complete_intersection.empty())
        bad(origin, "'complete_intersection' must be nonempty");
    pf.space = string_list(j["space"], origin, "space");

    const Json& q = j["q"];
    if (q.is_string()) {
        if (q.get<std::string>() != "all")
            bad(origin, "'q' must be a list of integers or the string \"all\"");
        pf.q_all = true;
    } else if (q.is_array()) {
        for (const auto& e : q) {
            if (!e.is_number_integer())
                bad(origin, "'q' entries must be integers");
            pf.q.push_back(e.get<int>());
        }
    } else {
        bad(origin, "'q' must be a list of integers or the string \"all\"");
    }

    std::vector<std::string> checks = string_list(j["checks"], origin, "checks");
    for (const std::string& c : checks) {
        if (std::find(check_names().begin(), check_names().end(), c) ==
            check_names().end()) {
            std::ostringstream os;
            os << "unknown check '" << c << "' (valid:";
            for (const auto& n : check_names()) os << " " << n;
            os << ")";
            bad(origin, os.str());
        }
    }
    // Normalize to canonical order, deduplicated.
    for (const std::string& n : check_names())
        if (std::find(checks.begin(), checks.end(), n) != checks.end())
            pf.checks.push_back(n);

    if (j.contains("alternative_complete_intersection"))
        pf.alternative_complete_intersection =
            string_list(j["alternative_complete_intersection"], origin,
                        "alternative_complete_intersection");

    return pf;
}

ProblemData build_problem(const ProblemFile& pf) {
    ProblemData d;
    d.file = pf;
    std::vector<std::string> vars = pf.variables;
    std::vector<Int> weights = pf.weights;
    d.R = RingContext::make(vars, weights);
    d.ci = parse_poly_list(pf.complete_intersection, d.R, pf.origin,
                           "complete_intersection");
    d.space = parse_poly_list(pf.space, d.R, pf.origin, "space");
    d.alt_ci = parse_poly_list(pf.alternative_complete_intersection, d.R,
                               pf.origin, "alternative_complete_intersection");
    return d;
}

} // namespace logres

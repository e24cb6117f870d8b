/// @file runner.cpp
/// @brief The analyze and verify pipelines over a validated problem.

#include "logres/runner.hpp"

#include "logres/freeness.hpp"
#include "logres/version.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace logres {

namespace {

using Clock = std::chrono::steady_clock;

long long micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0)
        .count();
}

bool has_check(const ProblemFile& pf, const std::string& name) {
    return std::find(pf.checks.begin(), pf.checks.end(), name) != pf.checks.end();
}

CheckSelection selection_from(const ProblemFile& pf) {
    CheckSelection s;
    s.freeness = has_check(pf, "freeness");
    s.duality = has_check(pf, "duality");
    s.chains = has_check(pf, "chains");
    s.ext_identity = has_check(pf, "ext");
    s.residues = has_check(pf, "residues");
    return s;
}

std::string qtag(const char* name, int q) {
    return std::string(name) + "[q=" + std::to_string(q) + "]";
}

/// Check rows from one finished per-q analysis (shared by analyze and
/// verify).  Details are filled only on failure.
void collect_q_checks(const QAnalysis& A, std::vector<CheckRow>& rows) {
    const int q = A.q;
    rows.push_back({qtag("endpoint_identities", q),
                    A.log_c.endpoint_ok && A.log_x.endpoint_ok,
                    A.log_c.endpoint_ok && A.log_x.endpoint_ok
                        ? ""
                        : "a known closed generator was missing from the module"});
    rows.push_back({qtag("field_routes_agree", q),
                    A.der_c.routes_agree && A.der_x.routes_agree,
                    A.der_c.routes_agree && A.der_x.routes_agree
                        ? ""
                        : "the defining routes for tangent fields disagree"});
    if (A.have_chains) {
        rows.push_back({qtag("containment_chain", q), A.chain_x_in_c,
                        A.chain_x_in_c ? "" : "relative module not inside the curve module"});
        rows.push_back({qtag("contraction_duality", q), A.sigma_c.ok && A.sigma_x.ok,
                        A.sigma_c.ok && A.sigma_x.ok
                            ? ""
                            : std::string("forms/fields contraction duality failed (curve ") +
                                  (A.sigma_c.ok ? "ok" : "FAIL") + ", relative " +
                                  (A.sigma_x.ok ? "ok" : "FAIL") + ")"});
        rows.push_back({qtag("restriction_colon_law", q), A.colon_law.variant_ic,
                        A.colon_law.variant_ic
                            ? ""
                            : "relative numerator differs from the colon of the curve numerator"});
    }
    if (A.have_regular) {
        bool ok = A.regular.colon_route_equal && A.regular.hom_series_equal;
        rows.push_back({qtag("residual_duality_hilbert", q), ok,
                        ok ? "" : "regular-form routes disagree"});
    }
    if (A.have_jac && A.jac.minors_checked)
        rows.push_back({qtag("jacobian_minors", q), A.jac.minors_match,
                        A.jac.minors_match ? "" : "columns differ from the Jacobian minors"});
    if (A.have_pairing)
        rows.push_back({qtag("residue_pairing", q), A.pairing.ok,
                        A.pairing.ok ? "" : "fields/regular-forms pairing not well defined"});
    if (A.have_freeness)
        rows.push_back({qtag("freeness_routes", q),
                        A.freeness.routes_agree && A.freeness.lower_bound_ok,
                        A.freeness.routes_agree && A.freeness.lower_bound_ok
                            ? ""
                            : "projective-dimension and depth routes disagree"});
    if (A.have_duality)
        rows.push_back({qtag("residual_duality", q), A.duality.ok,
                        A.duality.ok ? "" : "pairing into the dualizing module is not an isomorphism"});
    if (A.have_residue_seq)
        rows.push_back({qtag("residue_sequence", q), A.residue_seq.ok,
                        A.residue_seq.ok ? "" : "residue sequence exactness failed"});
    if (A.have_top_dual) {
        bool ok = A.top_dual.series_equal && A.top_dual.reflexive_matches &&
                  A.top_dual.matches_verdict;
        rows.push_back({qtag("ext_vanishing", q), ok,
                        ok ? "" : "top Ext vanishing does not match the freeness verdict"});
    }
}

/// Approximation property suite on the relative module at q, plus the
/// restriction theorem instance on the curve module (verify --level full).
void collect_suite_checks(const LogGeometry& G, const QAnalysis& A,
                          std::vector<CheckRow>& rows) {
    const int q = A.q;
    const Approximation& Ap = A.log_x.approx;
    KappaCertificate kc = kappa(Ap);
    rows.push_back({qtag("approximation_exactness", q), kc.identityimages && kc.agrees,
                    kc.identityimages && kc.agrees
                        ? ""
                        : "nonzerodivisor splitting identity failed"});
    IDualData D = i_dual(Ap);
    ReflexivityCertificate refl = is_i_reflexive(Ap, D);
    PairingCheck pc = w_to_hom_v_check(Ap, D, refl);
    bool pairing_ok =
        pc.map_defined && pc.well_defined && pc.matches_reflexivity && pc.nu_injective;
    rows.push_back({qtag("dual_pairing", q), pairing_ok,
                    pairing_ok ? "" : "quotient/cokernel duality pairing failed"});
    SeriesCheck sc = dual_kernel_series_check(Ap, D);
    rows.push_back({qtag("dual_kernel_series", q), sc.equal,
                    sc.equal ? "" : "kernel series differs from the twisted Ext series"});
    rows.push_back({qtag("dual_cokernel_ext", q), pc.nu_cokernel_zero == sc.ext_k_zero,
                    pc.nu_cokernel_zero == sc.ext_k_zero
                        ? ""
                        : "cokernel vanishing disagrees with top Ext vanishing"});
    try {
        FreenessAnalysis fa = freeness_analysis(Ap);
        bool ok = fa.biconditional_ok && fa.upper_bound_ok && fa.lower_bound_ok;
        rows.push_back({qtag("depth_analysis", q), ok,
                        ok ? "" : "depth characterization of small projective dimension failed"});
    } catch (const InputError&) {
        // Hypotheses unmet (zero quotient or non-reflexive module): the
        // depth characterization does not apply at this q.
    }
    if (!G.x_equals_c) {
        try {
            RestrictedAnalysis ra = restricted_analysis(A.log_c.approx, G.x_groebner);
            bool ok = ra.restriction_reflexive && ra.fa.biconditional_ok &&
                      ra.fa.upper_bound_ok && ra.fa.lower_bound_ok;
            rows.push_back({qtag("restriction_theorem", q), ok,
                            ok ? "" : "restriction along the subspace ideal broke the analysis"});
        } catch (const InputError&) {
            // Restricted quotient vanished or lost reflexivity hypotheses.
        }
    }
}

/// The two synthetic reference modules over Omega^k: the full module and
/// the ideal times the full module (verify --level full).
void collect_synthetic_checks(const LogGeometry& G, std::vector<CheckRow>& rows) {
    const IContext& ctx = G.ctx;
    FreeModule F = forms_module(G.R, G.k);
    {
        std::vector<Vec> gens;
        for (int i = 0; i < F.rank(); ++i) gens.push_back(Vec::basis(F, i));
        Approximation A = make_approximation(ctx, F, gens);
        KappaCertificate kc = kappa(A);
        IDualData D = i_dual(A);
        ReflexivityCertificate refl = is_i_reflexive(A, D);
        PairingCheck pc = w_to_hom_v_check(A, D, refl);
        SeriesCheck sc = dual_kernel_series_check(A, D);
        FreenessAnalysis fa = freeness_analysis(A);
        bool ok = kc.identityimages && kc.agrees && refl.reflexive && pc.map_defined &&
                  pc.well_defined && pc.matches_reflexivity && sc.equal &&
                  fa.biconditional_ok && fa.upper_bound_ok && fa.lower_bound_ok &&
                  fa.m_inv.pdim == 0;
        rows.push_back({"suite_full_module", ok,
                        ok ? "" : "reference checks on the full module failed"});
    }
    {
        Approximation A =
            make_approximation(ctx, F, ideal_times_free(F, ctx.groebner));
        KappaCertificate kc = kappa(A);
        IDualData D = i_dual(A);
        ReflexivityCertificate refl = is_i_reflexive(A, D);
        PairingCheck pc = w_to_hom_v_check(A, D, refl);
        SeriesCheck sc = dual_kernel_series_check(A, D);
        bool ok = kc.identityimages && kc.agrees && refl.reflexive && pc.map_defined &&
                  pc.well_defined && pc.matches_reflexivity && sc.equal;
        rows.push_back({"suite_ideal_module", ok,
                        ok ? "" : "reference checks on ideal times the full module failed"});
    }
}

ReportJson tool_json() {
    ReportJson t;
    t["name"] = kToolName;
    t["version"] = kToolVersion;
    return t;
}

ReportJson ring_json(const ProblemData& pd) {
    ReportJson r;
    ReportJson vars = ReportJson::array();
    for (const auto& v : pd.file.variables) vars.push_back(v);
    ReportJson wts = ReportJson::array();
    for (Int w : pd.file.weights) wts.push_back(w);
    r["variables"] = vars;
    r["weights"] = wts;
    return r;
}

ReportJson problem_echo(const ProblemData& pd, const RunOptions& opt,
                        const std::vector<int>& qs, Int bound) {
    const ProblemFile& pf = pd.file;
    ReportJson p;
    p["origin"] = pf.origin;
    ReportJson vars = ReportJson::array();
    for (const auto& v : pf.variables) vars.push_back(v);
    p["variables"] = vars;
    ReportJson wts = ReportJson::array();
    for (Int w : pf.weights) wts.push_back(w);
    p["weights"] = wts;
    ReportJson ci = ReportJson::array();
    for (const auto& s : pf.complete_intersection) ci.push_back(s);
    p["complete_intersection"] = ci;
    ReportJson sp = ReportJson::array();
    for (const auto& s : pf.space) sp.push_back(s);
    p["space"] = sp;
    bool all = opt.have_q_override ? opt.q_override_all : pf.q_all;
    if (all) {
        p["q_requested"] = "all";
    } else {
        ReportJson qr = ReportJson::array();
        for (int q : opt.have_q_override ? opt.q_override : pf.q) qr.push_back(q);
        p["q_requested"] = qr;
    }
    ReportJson qe = ReportJson::array();
    for (int q : qs) qe.push_back(q);
    p["q_effective"] = qe;
    ReportJson ch = ReportJson::array();
    for (const auto& c : pf.checks) ch.push_back(c);
    p["checks"] = ch;
    if (!pf.alternative_complete_intersection.empty()) {
        ReportJson alt = ReportJson::array();
        for (const auto& s : pf.alternative_complete_intersection) alt.push_back(s);
        p["alternative_complete_intersection"] = alt;
    }
    p["degree_bound"] = bound;
    return p;
}

ReportJson summary_json(const ReportJson& q_results,
                        const std::vector<CheckRow>& rows) {
    int passed = 0, failed = 0;
    for (const auto& row : rows) (row.pass ? passed : failed)++;
    ReportJson verdicts = ReportJson::array();
    for (const auto& qr : q_results) {
        if (!qr.contains("freeness")) continue;
        ReportJson v;
        v["q"] = qr["q"];
        v["verdict"] = qr["freeness"];
        verdicts.push_back(v);
    }
    ReportJson s;
    s["verdicts"] = verdicts;
    s["checks_passed"] = passed;
    s["checks_failed"] = failed;
    s["ok"] = (failed == 0);
    return s;
}

int count_failed(const std::vector<CheckRow>& rows) {
    int failed = 0;
    for (const auto& row : rows)
        if (!row.pass) ++failed;
    return failed;
}

} // namespace

std::vector<int> effective_qs(const ProblemFile& pf, const RunOptions& opt, int n,
                              int k) {
    bool all = opt.have_q_override ? opt.q_override_all : pf.q_all;
    std::set<int> qs;
    if (all) {
        auto add_range = [&qs](int lo, int hi) {
            for (int q = lo; q <= hi; ++q) qs.insert(q);
        };
        if (has_check(pf, "chains")) add_range(0, n);
        if (has_check(pf, "freeness") || has_check(pf, "ext") ||
            has_check(pf, "residues"))
            add_range(k, n - 1);
        if (has_check(pf, "duality")) add_range(k, n);
    } else {
        const std::vector<int>& expl = opt.have_q_override ? opt.q_override : pf.q;
        qs.insert(expl.begin(), expl.end());
    }
    return std::vector<int>(qs.begin(), qs.end());
}

RunResult run_analyze(const ProblemData& pd, const RunOptions& opt) {
    const auto t_start = Clock::now();
    ReportJson timings;

    auto t0 = Clock::now();
    LogGeometry G = make_geometry(pd.R, pd.ci, pd.space);
    timings["geometry_us"] = micros_since(t0);

    t0 = Clock::now();
    Int bound = opt.degree_bound >= 0 ? opt.degree_bound : default_degree_bound(G);
    FundamentalForm FF = fundamental_form(G, bound);
    timings["fundamental_form_us"] = micros_since(t0);

    CheckSelection sel = selection_from(pd.file);
    std::vector<int> qs = effective_qs(pd.file, opt, G.n, G.k);

    std::vector<CheckRow> rows;
    rows.push_back({"geometry_certificates", true, ""});
    rows.push_back({"fundamental_form_certificate",
                    FF.multiplication_ok && FF.wedge_ok, ""});

    ReportJson q_results = ReportJson::array();
    std::map<int, QAnalysis> analyses;
    bool any_refused = false;

    t0 = Clock::now();
    for (int q : qs) {
        if (q < 0 || q > G.n) {
            q_results.push_back(q_out_of_range_json(q));
            continue;
        }
        try {
            QAnalysis A = analyze_q(G, FF, q, sel, bound);
            collect_q_checks(A, rows);
            q_results.push_back(q_result_json(G, A));
            analyses.emplace(q, std::move(A));
        } catch (const CheckError& e) {
            q_results.push_back(q_refused_json(q, e.what()));
            rows.push_back({qtag("analysis_completed", q), false, e.what()});
            any_refused = true;
        } catch (const InputError& e) {
            // Per-q resource refusals (e.g. denominator search bound hit)
            // spoil only this q, not the whole report.
            q_results.push_back(q_refused_json(q, e.what()));
            rows.push_back({qtag("analysis_completed", q), false, e.what()});
            any_refused = true;
        }
    }
    timings["analysis_us"] = micros_since(t0);

    ReportJson independence = ReportJson::array();
    if (!pd.alt_ci.empty() && sel.freeness) {
        t0 = Clock::now();
        LogGeometry G2 = make_geometry(pd.R, pd.alt_ci, pd.space);
        Int bound2 =
            opt.degree_bound >= 0 ? opt.degree_bound : default_degree_bound(G2);
        FundamentalForm FF2 = fundamental_form(G2, bound2);
        for (const auto& [q, A1] : analyses) {
            if (!A1.have_freeness) continue;
            try {
                QAnalysis A2 = analyze_q(G2, FF2, q, sel, bound2);
                IndependenceReport rep = compare_geometries(G, A1, G2, A2);
                ReportJson row;
                row["q"] = q;
                ReportJson body = independence_json(rep);
                for (const auto& item : body.items()) row[item.key()] = item.value();
                independence.push_back(row);
                rows.push_back({qtag("independence_fields", q), rep.der_equal,
                                rep.der_equal ? "" : "tangent fields differ"});
                rows.push_back({qtag("independence_kernel", q), rep.kernel_equal,
                                rep.kernel_equal ? "" : "contraction kernels differ"});
                rows.push_back({qtag("independence_verdict", q), rep.verdict_equal,
                                rep.verdict_equal ? "" : "freeness verdicts differ"});
            } catch (const CheckError& e) {
                rows.push_back({qtag("independence_completed", q), false, e.what()});
                any_refused = true;
            }
        }
        timings["independence_us"] = micros_since(t0);
    }

    ReportJson doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = tool_json();
    doc["problem"] = problem_echo(pd, opt, qs, bound);
    doc["ring"] = ring_json(pd);
    doc["geometry"] = geometry_json(G, &FF);
    doc["q_results"] = q_results;
    doc["checks"] = checks_json(rows);
    if (!independence.empty()) doc["independence"] = independence;
    doc["summary"] = summary_json(q_results, rows);
    if (opt.timings) {
        timings["total_us"] = micros_since(t_start);
        doc["timings"] = timings;
    }

    RunResult rr;
    rr.doc = std::move(doc);
    rr.exit_code = (count_failed(rows) > 0 || any_refused) ? 2 : 0;
    return rr;
}

RunResult run_verify(const ProblemData& pd, const std::string& level,
                     const RunOptions& opt) {
    require_input(level == "basic" || level == "full",
                  "verify level must be \"basic\" or \"full\", got \"" + level + "\"");
    const auto t_start = Clock::now();

    LogGeometry G = make_geometry(pd.R, pd.ci, pd.space);
    Int bound = opt.degree_bound >= 0 ? opt.degree_bound : default_degree_bound(G);
    FundamentalForm FF = fundamental_form(G, bound);

    std::vector<CheckRow> rows;
    rows.push_back({"geometry_certificates", true, ""});
    rows.push_back({"fundamental_form_certificate",
                    FF.multiplication_ok && FF.wedge_ok, ""});
    bool any_refused = false;

    std::vector<int> qs;
    CheckSelection sel;
    if (level == "basic") {
        sel.freeness = true;
        sel.duality = false;
        sel.chains = false;
        sel.ext_identity = false;
        sel.residues = false;
        bool all = opt.have_q_override ? opt.q_override_all : pd.file.q_all;
        if (all) {
            for (int q = G.k; q < G.n; ++q) qs.push_back(q);
        } else {
            std::set<int> s;
            const std::vector<int>& expl =
                opt.have_q_override ? opt.q_override : pd.file.q;
            s.insert(expl.begin(), expl.end());
            qs.assign(s.begin(), s.end());
        }
    } else {
        // full: every family at every valid q
        for (int q = 0; q <= G.n; ++q) qs.push_back(q);
    }

    std::map<int, QAnalysis> analyses;
    for (int q : qs) {
        if (q < 0 || q > G.n) continue;
        try {
            QAnalysis A = analyze_q(G, FF, q, sel, bound);
            collect_q_checks(A, rows);
            if (level == "full") collect_suite_checks(G, A, rows);
            analyses.emplace(q, std::move(A));
        } catch (const CheckError& e) {
            rows.push_back({qtag("analysis_completed", q), false, e.what()});
            any_refused = true;
        } catch (const InputError& e) {
            rows.push_back({qtag("analysis_completed", q), false, e.what()});
            any_refused = true;
        }
    }

    if (level == "full") {
        collect_synthetic_checks(G, rows);
        if (!pd.alt_ci.empty()) {
            LogGeometry G2 = make_geometry(pd.R, pd.alt_ci, pd.space);
            Int bound2 =
                opt.degree_bound >= 0 ? opt.degree_bound : default_degree_bound(G2);
            FundamentalForm FF2 = fundamental_form(G2, bound2);
            for (const auto& [q, A1] : analyses) {
                if (!A1.have_freeness) continue;
                try {
                    QAnalysis A2 = analyze_q(G2, FF2, q, sel, bound2);
                    IndependenceReport rep = compare_geometries(G, A1, G2, A2);
                    bool ok = rep.der_equal && rep.kernel_equal && rep.verdict_equal;
                    rows.push_back({qtag("independence", q), ok,
                                    ok ? "" : "the two ambient presentations disagree"});
                } catch (const CheckError& e) {
                    rows.push_back({qtag("independence_completed", q), false, e.what()});
                    any_refused = true;
                }
            }
        }
    }

    std::vector<int> q_echo;
    for (int q : qs)
        if (q >= 0 && q <= G.n) q_echo.push_back(q);

    ReportJson doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = tool_json();
    doc["problem"] = problem_echo(pd, opt, q_echo, bound);
    doc["level"] = level;
    doc["checks"] = checks_json(rows);
    doc["summary"] = summary_json(ReportJson::array(), rows);
    if (opt.timings) {
        ReportJson timings;
        timings["total_us"] = micros_since(t_start);
        doc["timings"] = timings;
    }

    RunResult rr;
    rr.doc = std::move(doc);
    rr.exit_code = (count_failed(rows) > 0 || any_refused) ? 2 : 0;
    return rr;
}

std::string render_verify_text(const ReportJson& doc) {
    std::ostringstream os;
    os << doc["tool"]["name"].get<std::string>() << " verify --level "
       << doc["level"].get<std::string>() << " — "
       << doc["problem"]["origin"].get<std::string>() << "\n";
    for (const auto& row : doc["checks"]) {
        bool pass = row["status"].get<std::string>() == "pass";
        os << (pass ? "PASS" : "FAIL") << "  " << row["name"].get<std::string>();
        if (!pass && row.contains("detail"))
            os << " — " << row["detail"].get<std::string>();
        os << "\n";
    }
    const ReportJson& s = doc["summary"];
    os << "verify: " << s["checks_passed"].get<int>() << " passed, "
       << s["checks_failed"].get<int>() << " failed\n";
    return os.str();
}

} // namespace logres

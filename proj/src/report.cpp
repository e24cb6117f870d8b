/// @file report.cpp
/// @brief JSON section encoders and the plain-text renderer.

#include "logres/report.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

// ==== LEAF ENCODERS ====

ReportJson series_json(const HilbertSeries& s) {
    ReportJson num = ReportJson::array();
    for (const auto& [e, c] : s.numerator.coeff)
        num.push_back(ReportJson::array({e, c.get_str()}));
    ReportJson den = ReportJson::array();
    for (Int w : s.weights) den.push_back(w);
    ReportJson out;
    out["numerator"] = num;
    out["denominator_weights"] = den;
    return out;
}

ReportJson betti_rows_json(const BettiTable& t) {
    ReportJson rows = ReportJson::array();
    for (const auto& [key, rank] : t) {
        ReportJson row;
        row["homological_degree"] = key.first;
        row["internal_degree"] = key.second;
        row["rank"] = rank;
        rows.push_back(row);
    }
    return rows;
}

ReportJson poly_strings_json(const std::vector<Polynomial>& ps) {
    ReportJson out = ReportJson::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

ReportJson vec_strings_json(const std::vector<Vec>& vs) {
    ReportJson out = ReportJson::array();
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

// ==== SECTION ENCODERS ====

namespace {

ReportJson fundamental_form_json(const FundamentalForm& FF) {
    ReportJson out;
    out["alpha"] = FF.alpha.to_string();
    out["a"] = FF.a.to_string();
    out["b"] = FF.b.to_string();
    out["f"] = FF.f.to_string();
    Int fdeg = 0;
    FF.f.is_homogeneous(&fdeg);
    out["f_degree"] = fdeg;
    out["saturation_exponent"] = FF.sat_exponent;
    out["fast_path"] = FF.fast_path;
    out["multiplication_ok"] = FF.multiplication_ok;
    out["wedge_ok"] = FF.wedge_ok;
    return out;
}

ReportJson log_module_json(const LogFormModule& L) {
    ReportJson out;
    out["rank"] = L.F.rank();
    out["pole_twist"] = L.pole_twist;
    out["generator_count"] = static_cast<int>(L.numerator.size());
    out["numerator_generators"] = vec_strings_json(L.numerator);
    out["class_hilbert"] = series_json(hilbert_series(L.approx.W.pm));
    out["endpoint_applicable"] = L.endpoint_applicable;
    out["endpoint_ok"] = L.endpoint_ok;
    return out;
}

ReportJson fields_module_json(const MultiFieldModule& D) {
    ReportJson out;
    out["rank"] = D.T.rank();
    out["vacuous"] = D.vacuous;
    out["routes_agree"] = D.routes_agree;
    out["generator_count"] = static_cast<int>(D.gens.size());
    out["generators"] = vec_strings_json(D.gens);
    return out;
}

ReportJson sigma_json(const SigmaDualCheck& s) {
    ReportJson out;
    out["forms_to_fields"] = s.forms_to_fields;
    out["fields_to_forms"] = s.fields_to_forms;
    out["ok"] = s.ok;
    return out;
}

} // namespace

ReportJson geometry_json(const LogGeometry& G, const FundamentalForm* FF) {
    ReportJson out;
    out["n"] = G.n;
    out["k"] = G.k;
    out["complete_intersection"] = poly_strings_json(G.h);
    out["ci_groebner"] = poly_strings_json(G.ctx.groebner);
    out["space_generators"] = poly_strings_json(G.x_gens);
    out["space_groebner"] = poly_strings_json(G.x_groebner);
    out["x_equals_c"] = G.x_equals_c;
    out["dh"] = G.dh.to_string();
    out["jacobian_minor_count"] = static_cast<int>(G.jac_minors.size());
    out["singular_locus_height"] = G.singular_height;
    out["singular_locus_empty"] = (G.singular_height > G.n);
    out["omega_shift"] = G.ctx.omega_shift;
    out["socle_twist"] = G.ctx.socle_twist;
    out["total_ci_degree"] = G.deg_h_total;
    out["dimension"] = G.dim_cx;
    out["x_pdim"] = G.x_pdim;
    ReportJson tot = ReportJson::array();
    for (int b : G.x_betti) tot.push_back(b);
    out["x_betti_total"] = tot;
    PresentedModule RX = PresentedModule::cyclic(G.R, G.x_groebner, 0);
    out["x_betti"] = betti_rows_json(betti_table(minimal_resolution(RX)));
    out["x_hilbert"] = series_json(hilbert_series(RX));
    out["x_reduced_asserted"] = G.x_reduced_asserted;
    if (FF != nullptr) out["fundamental_form"] = fundamental_form_json(*FF);
    return out;
}

std::string verdict_string(const FreenessRecord& rec) {
    return rec.free_verdict ? "free" : "not_free";
}

ReportJson q_result_json(const LogGeometry& G, const QAnalysis& A) {
    (void)G;
    ReportJson out;
    out["q"] = A.q;
    out["log_module"] = log_module_json(A.log_x);
    out["log_module_curve"] = log_module_json(A.log_c);
    out["fields_module"] = fields_module_json(A.der_x);
    out["fields_module_curve"] = fields_module_json(A.der_c);
    if (A.have_chains) {
        ReportJson ch;
        ch["relative_in_curve"] = A.chain_x_in_c;
        ch["contraction_duality_curve"] = sigma_json(A.sigma_c);
        ch["contraction_duality_relative"] = sigma_json(A.sigma_x);
        ReportJson law;
        law["variant_ic"] = A.colon_law.variant_ic;
        law["variant_ix"] = A.colon_law.variant_ix;
        ch["restriction_colon_law"] = law;
        out["chains"] = ch;
    }
    if (A.have_regular) {
        ReportJson rf;
        rf["p"] = A.regular.p;
        rf["generator_count"] = static_cast<int>(A.regular.gen_forms.size());
        rf["generators"] = vec_strings_json(A.regular.gen_forms);
        rf["class_hilbert"] = series_json(hilbert_series(A.regular.em.pm));
        rf["colon_route_equal"] = A.regular.colon_route_equal;
        rf["hom_series_equal"] = A.regular.hom_series_equal;
        out["regular_forms"] = rf;
    }
    if (A.have_jac) {
        ReportJson jm;
        jm["generator_count"] = static_cast<int>(A.jac.gen_index.size());
        std::vector<Vec> cols;
        for (int idx : A.jac.gen_index) cols.push_back(A.jac.columns[idx]);
        jm["generators"] = vec_strings_json(cols);
        jm["kernel_generator_count"] = static_cast<int>(A.jac.kernel_num.size());
        jm["mod_x_injective"] = A.jac.mod_x_injective;
        jm["minors_checked"] = A.jac.minors_checked;
        jm["minors_match"] = A.jac.minors_match;
        out["jacobian_module"] = jm;
    }
    if (A.have_pairing) {
        ReportJson pr;
        pr["values_in_colon"] = A.pairing.values_in_colon;
        pr["kernel_kills"] = A.pairing.kernel_kills;
        pr["ok"] = A.pairing.ok;
        out["pairing"] = pr;
    }
    if (A.have_freeness) {
        out["pdim"] = A.freeness.pdim;
        out["freeness"] = verdict_string(A.freeness);
        out["routes_agree"] = A.freeness.routes_agree;
        ReportJson ji;
        ji["pdim"] = A.freeness.jac_inv.pdim;
        ji["depth"] = A.freeness.jac_inv.depth;
        ji["dim"] = A.freeness.jac_inv.dim;
        ji["mcm"] = A.freeness.jac_mcm;
        out["jacobian_invariants"] = ji;
    } else if (!A.verdict_range) {
        out["freeness"] = "out_of_range";
    }
    if (A.have_duality) {
        ReportJson dc;
        dc["colon_generators"] = poly_strings_json(A.duality.colon_gens);
        dc["forward_defined"] = A.duality.forward_defined;
        dc["forward_iso"] = A.duality.forward_iso;
        dc["reverse_attempted"] = A.duality.reverse_attempted;
        dc["reverse_defined"] = A.duality.reverse_defined;
        dc["reverse_iso"] = A.duality.reverse_iso;
        dc["ok"] = A.duality.ok;
        out["duality_certificate"] = dc;
    }
    if (A.have_residue_seq) {
        ReportJson rs;
        rs["numerators_match"] = A.residue_seq.numerators_match;
        rs["all_lifts_found"] = A.residue_seq.all_lifts_found;
        rs["symbols_match_classes"] = A.residue_seq.symbols_match_classes;
        rs["kernel_ok"] = A.residue_seq.kernel_ok;
        ReportJson syms = ReportJson::array();
        for (const auto& rr : A.residue_seq.generator_residues) {
            ReportJson sym;
            sym["numerator"] = rr.symbol.numerator.to_string();
            sym["denominator"] = rr.symbol.den.to_string();
            sym["power"] = rr.power;
            syms.push_back(sym);
        }
        rs["generator_symbols"] = syms;
        rs["ok"] = A.residue_seq.ok;
        out["residues"] = rs;
    }
    if (A.have_top_dual) {
        ReportJson ev;
        ev["series_equal"] = A.top_dual.series_equal;
        ev["ext_top_zero"] = A.top_dual.ext_top_zero;
        ev["reflexive"] = A.top_dual.reflexive;
        ev["reflexive_matches"] = A.top_dual.reflexive_matches;
        ev["matches_verdict"] = A.top_dual.matches_verdict;
        out["ext_vanishing"] = ev;
    }
    return out;
}

ReportJson q_out_of_range_json(int q) {
    ReportJson out;
    out["q"] = q;
    out["freeness"] = "out_of_range";
    return out;
}

ReportJson q_refused_json(int q, const std::string& why) {
    ReportJson out;
    out["q"] = q;
    out["freeness"] = "refused";
    out["reason"] = why;
    return out;
}

ReportJson independence_json(const IndependenceReport& r) {
    ReportJson out;
    out["fields_equal"] = r.der_equal;
    out["kernel_equal"] = r.kernel_equal;
    out["verdict_equal"] = r.verdict_equal;
    out["image_equal"] = r.image_equal;
    out["agree"] = r.der_equal && r.kernel_equal && r.verdict_equal;
    return out;
}

ReportJson checks_json(const std::vector<CheckRow>& rows) {
    ReportJson out = ReportJson::array();
    for (const auto& row : rows) {
        ReportJson r;
        r["name"] = row.name;
        r["status"] = row.pass ? "pass" : "fail";
        if (!row.detail.empty()) r["detail"] = row.detail;
        out.push_back(r);
    }
    return out;
}

// ==== RENDERING ====

std::string dump_report(const ReportJson& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string join_strings(const ReportJson& arr, const char* sep) {
    std::string out;
    for (const auto& item : arr) {
        if (!out.empty()) out += sep;
        out += item.get<std::string>();
    }
    return out;
}

std::string series_text(const ReportJson& s) {
    // Render {"numerator": [[e, "c"], ...], "denominator_weights": [...]}
    // as "c*t^e + ... over (1-t^w1)...".
    std::string num;
    for (const auto& term : s["numerator"]) {
        long long e = term[0].get<long long>();
        std::string c = term[1].get<std::string>();
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (num.empty())
            num += neg ? "-" : "";
        else
            num += neg ? " - " : " + ";
        if (e == 0)
            num += mag;
        else {
            if (mag != "1") num += mag + "*";
            num += "t";
            if (e != 1) num += "^" + std::to_string(e);
        }
    }
    if (num.empty()) num = "0";
    std::string den;
    for (const auto& w : s["denominator_weights"])
        den += "(1-t^" + std::to_string(w.get<long long>()) + ")";
    if (den.empty()) den = "1";
    return "(" + num + ") / " + den;
}

void render_geometry(std::ostringstream& os, const ReportJson& doc) {
    const ReportJson& ring = doc["ring"];
    const ReportJson& g = doc["geometry"];
    os << "ring: Q[" << join_strings(ring["variables"], ", ") << "], weights (";
    {
        bool first = true;
        for (const auto& w : ring["weights"]) {
            if (!first) os << ", ";
            os << w.get<long long>();
            first = false;
        }
    }
    os << ")\n";
    os << "geometry: n = " << g["n"].get<int>() << ", k = " << g["k"].get<int>()
       << ", dim = " << g["dimension"].get<int>()
       << ", X = C: " << (g["x_equals_c"].get<bool>() ? "yes" : "no") << "\n";
    os << "  complete intersection: " << join_strings(g["complete_intersection"], ", ")
       << "\n";
    os << "  subspace ideal (canonical): " << join_strings(g["space_groebner"], ", ")
       << "\n";
    os << "  singular locus of the curve: ";
    if (g["singular_locus_empty"].get<bool>())
        os << "empty\n";
    else
        os << "height " << g["singular_locus_height"].get<int>() << "\n";
    os << "  pdim R/I_X = " << g["x_pdim"].get<int>() << ", Hilbert series "
       << series_text(g["x_hilbert"]) << "\n";
    if (g.contains("fundamental_form")) {
        const ReportJson& ff = g["fundamental_form"];
        os << "  fundamental form: alpha = " << ff["alpha"].get<std::string>()
           << ", f = " << ff["f"].get<std::string>();
        if (ff["fast_path"].get<bool>()) os << " (fast path)";
        os << "\n";
    }
    os << "\nR/I_X graded Betti numbers (homological degree: internal degree x rank):\n";
    std::map<int, std::vector<std::pair<long long, int>>> by_h;
    for (const auto& row : g["x_betti"])
        by_h[row["homological_degree"].get<int>()].push_back(
            {row["internal_degree"].get<long long>(), row["rank"].get<int>()});
    for (const auto& [h, cells] : by_h) {
        os << "  " << h << ":";
        for (const auto& [d, r] : cells) os << "  " << d << " x " << r;
        os << "\n";
    }
}

void render_q_table(std::ostringstream& os, const ReportJson& doc) {
    if (!doc.contains("q_results") || doc["q_results"].empty()) return;
    os << "\nper-degree results:\n";
    os << "  q   verdict       pdim  routes  duality  residues  forms/fields gens\n";
    for (const auto& row : doc["q_results"]) {
        std::ostringstream line;
        line << "  " << row["q"].get<int>();
        std::string verdict = row.contains("freeness")
                                  ? row["freeness"].get<std::string>()
                                  : std::string("-");
        line << std::string(line.str().size() < 6 ? 6 - line.str().size() : 1, ' ')
             << verdict;
        while (line.str().size() < 20) line << ' ';
        if (row.contains("pdim"))
            line << row["pdim"].get<int>();
        else
            line << "-";
        while (line.str().size() < 26) line << ' ';
        if (row.contains("routes_agree"))
            line << (row["routes_agree"].get<bool>() ? "yes" : "NO");
        else
            line << "-";
        while (line.str().size() < 34) line << ' ';
        if (row.contains("duality_certificate"))
            line << (row["duality_certificate"]["ok"].get<bool>() ? "ok" : "FAIL");
        else
            line << "-";
        while (line.str().size() < 43) line << ' ';
        if (row.contains("residues"))
            line << (row["residues"]["ok"].get<bool>() ? "ok" : "FAIL");
        else
            line << "-";
        while (line.str().size() < 53) line << ' ';
        if (row.contains("log_module"))
            line << row["log_module"]["generator_count"].get<int>() << "/"
                 << row["fields_module"]["generator_count"].get<int>();
        else
            line << "-";
        os << line.str() << "\n";
    }
}

void render_checks(std::ostringstream& os, const ReportJson& doc) {
    if (!doc.contains("checks")) return;
    os << "\nchecks:\n";
    for (const auto& row : doc["checks"]) {
        bool pass = row["status"].get<std::string>() == "pass";
        os << "  " << (pass ? "PASS" : "FAIL") << "  "
           << row["name"].get<std::string>();
        if (!pass && row.contains("detail"))
            os << " — " << row["detail"].get<std::string>();
        os << "\n";
    }
    if (doc.contains("independence")) {
        const ReportJson& ind = doc["independence"];
        os << "\nindependence of the ambient complete intersection: "
           << (ind["agree"].get<bool>() ? "agree" : "DISAGREE")
           << " (fields " << (ind["fields_equal"].get<bool>() ? "equal" : "differ")
           << ", kernel " << (ind["kernel_equal"].get<bool>() ? "equal" : "differ")
           << ", verdict " << (ind["verdict_equal"].get<bool>() ? "equal" : "differ")
           << ", image " << (ind["image_equal"].get<bool>() ? "equal" : "differ")
           << ")\n";
    }
    if (doc.contains("summary")) {
        const ReportJson& s = doc["summary"];
        os << "\nsummary: " << s["checks_passed"].get<int>() << " checks passed, "
           << s["checks_failed"].get<int>() << " failed";
        if (s.contains("verdicts")) {
            for (const auto& v : s["verdicts"])
                os << "; q=" << v["q"].get<int>() << " "
                   << v["verdict"].get<std::string>();
        }
        os << "\n";
    }
}

} // namespace

std::string render_text(const ReportJson& doc) {
    std::ostringstream os;
    os << doc["tool"]["name"].get<std::string>() << " "
       << doc["tool"]["version"].get<std::string>() << " — "
       << doc["problem"]["origin"].get<std::string>() << "\n\n";
    render_geometry(os, doc);
    render_q_table(os, doc);
    render_checks(os, doc);
    return os.str();
}

} // namespace logres

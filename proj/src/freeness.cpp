/// @file freeness.cpp
/// @brief Freeness verdicts, the duality certificate, the top-Ext series
///        identity, and the per-degree pipeline.

#include "logres/freeness.hpp"

#include "logres/exterior.hpp"
#include "logres/hom.hpp"
#include "logres/invariants.hpp"
#include "logres/module_ops.hpp"
#include "logres/resolution.hpp"

#include <sstream>
#include <string>
#include <utility>

namespace logres {

namespace {

Vec scalar_vec(const RingPtr& R, const Polynomial& p) {
    Vec v(FreeModule::trivial(R, 1));
    if (!p.is_zero()) v.set(0, p);
    return v;
}

std::string poly_list(const std::vector<Polynomial>& ps) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << ps[i].to_string() << "\"";
    }
    os << "]";
    return os.str();
}

} // namespace

// ==== FREENESS ====

FreenessRecord freeness_verdict(const LogGeometry& G, const LogFormModule& relative,
                                const JacobianModule& J) {
    require_input(relative.relative,
                  "freeness verdicts apply to the relative logarithmic module");
    require_input(G.k <= relative.q && relative.q < G.n,
                  "freeness verdicts are defined for k <= q < n");
    require_input(J.q == relative.q, "Jacobian module degree mismatch");

    FreenessRecord rec;
    rec.q = relative.q;
    Resolution res = minimal_resolution(relative.approx.M.pm);
    rec.numerator_betti = total_betti(res);
    Invariants minv = module_invariants(relative.approx.M.pm);
    rec.pdim = minv.pdim;
    rec.lower_bound_ok = (rec.pdim >= G.k - 1);
    require_check(rec.lower_bound_ok,
                  "projective dimension lower bound violated: pdim = " +
                      std::to_string(rec.pdim) + " < k - 1 = " +
                      std::to_string(G.k - 1));

    rec.jac_inv = module_invariants(J.em.pm);
    rec.jac_mcm = is_mcm_over(J.em.pm, G.R, G.x_groebner);

    bool route_a = (rec.pdim == G.k - 1);
    rec.routes_agree = (route_a == rec.jac_mcm);
    if (!rec.routes_agree) {
        std::ostringstream os;
        os << "freeness routes disagree: {\"q\": " << rec.q
           << ", \"k\": " << G.k << ", \"pdim\": " << rec.pdim
           << ", \"jac_mcm\": " << (rec.jac_mcm ? "true" : "false")
           << ", \"jac_depth\": " << rec.jac_inv.depth
           << ", \"jac_dim\": " << rec.jac_inv.dim
           << ", \"h\": " << poly_list(G.h)
           << ", \"x\": " << poly_list(G.x_groebner) << "}";
        throw CheckError(os.str());
    }
    rec.free_verdict = route_a;
    return rec;
}

// ==== DUALITY CERTIFICATE ====

DualityCertificate duality_certificate(const LogGeometry& G, const JacobianModule& J,
                                       const RegularForms& W, bool attempt_reverse) {
    require_input(J.q == W.p + G.k, "duality degrees disagree: q != p + k");
    const RingPtr& R = G.R;
    DualityCertificate C;
    C.colon_gens = colon_ideal(R, G.ctx.groebner, G.x_groebner);
    C.omega_ring = present_subquotient(FreeModule::trivial(R, 1),
                                       ideal_as_vecs(R, C.colon_gens),
                                       ideal_as_vecs(R, G.ctx.groebner));

    // Forward: each regular generator xi gives the hom (column of d_j) |->
    // class of <d_j, xi> in (I_C : I_X)/I_C.
    HomModule H = hom_module(J.em.pm, C.omega_ring.pm);
    C.forward_defined = true;
    std::vector<Vec> phi_coords;
    for (const Vec& xi : W.gen_forms) {
        std::vector<Vec> images;
        bool ok = true;
        for (int s : J.gen_index) {
            Vec delta = Vec::basis(J.source, s);
            auto c = C.omega_ring.coords_of(scalar_vec(R, contract(delta, xi)));
            if (!c) {
                ok = false;
                break;
            }
            images.push_back(std::move(*c));
        }
        std::optional<Vec> hc;
        if (ok) hc = hom_coords(H, images);
        if (!hc) {
            C.forward_defined = false;
            break;
        }
        phi_coords.push_back(std::move(*hc));
    }
    if (C.forward_defined) {
        ModuleMap Phi{W.em.pm, H.pm, phi_coords, 0};
        std::string why;
        C.forward_defined = map_well_defined(Phi, &why);
        if (C.forward_defined) C.forward_iso = is_isomorphism(Phi);
    }

    C.reverse_attempted = attempt_reverse;
    if (attempt_reverse) {
        HomModule H2 = hom_module(W.em.pm, C.omega_ring.pm);
        C.reverse_defined = true;
        std::vector<Vec> psi_coords;
        for (int s : J.gen_index) {
            Vec delta = Vec::basis(J.source, s);
            std::vector<Vec> images;
            bool ok = true;
            for (const Vec& xi : W.gen_forms) {
                auto c = C.omega_ring.coords_of(scalar_vec(R, contract(delta, xi)));
                if (!c) {
                    ok = false;
                    break;
                }
                images.push_back(std::move(*c));
            }
            std::optional<Vec> hc;
            if (ok) hc = hom_coords(H2, images);
            if (!hc) {
                C.reverse_defined = false;
                break;
            }
            psi_coords.push_back(std::move(*hc));
        }
        if (C.reverse_defined) {
            ModuleMap Psi{J.em.pm, H2.pm, psi_coords, 0};
            std::string why;
            C.reverse_defined = map_well_defined(Psi, &why);
            if (C.reverse_defined) C.reverse_iso = is_isomorphism(Psi);
        }
    }

    C.ok = C.forward_defined && C.forward_iso &&
           (!C.reverse_attempted || (C.reverse_defined && C.reverse_iso));
    return C;
}

// ==== TOP EXT / SERIES IDENTITY ====

TopDualStatus top_dual_status(const LogFormModule& relative, bool free_verdict) {
    TopDualStatus t;
    IDualData D = i_dual(relative.approx);
    t.series = dual_kernel_series_check(relative.approx, D);
    t.series_equal = t.series.equal;
    t.ext_top_zero = t.series.ext_k_zero;
    t.reflexive = is_i_reflexive(relative.approx, D).reflexive;
    t.reflexive_matches = (t.reflexive == t.ext_top_zero);
    t.matches_verdict = (t.ext_top_zero == free_verdict);
    return t;
}

// ==== PER-DEGREE PIPELINE ====

QAnalysis analyze_q(const LogGeometry& G, const FundamentalForm& FF, int q,
                    const CheckSelection& sel, Int degree_bound) {
    require_input(0 <= q && q <= G.n, "q must satisfy 0 <= q <= n");
    QAnalysis A;
    A.q = q;
    A.verdict_range = (G.k <= q && q < G.n);
    A.log_c = omega_log(G, q, /*relative=*/false);
    A.log_x = omega_log(G, q, /*relative=*/true);
    A.der_c = der_log(G, q, /*along_x=*/false);
    A.der_x = der_log(G, q, /*along_x=*/true, &FF);

    if (sel.chains) {
        A.have_chains = true;
        A.chain_x_in_c =
            submodule_contains(A.log_c.F, A.log_c.numerator, A.log_x.numerator);
        A.sigma_c = sigma_dual_check(G, A.log_c, A.der_c);
        A.sigma_x = sigma_dual_check(G, A.log_x, A.der_x);
        A.colon_law = colon_law_check(G, A.log_c, A.log_x);
    }

    if (q >= G.k) {
        A.have_regular = true;
        A.regular = regular_forms(G, q - G.k);
        A.have_jac = true;
        A.jac = jacobian_module(G, FF, q);
        if (sel.residues) {
            A.have_residue_seq = true;
            A.residue_seq =
                check_residue_sequence(G, FF, A.log_x, A.regular, degree_bound);
        }
        if (sel.duality) {
            A.have_pairing = true;
            A.pairing = pairing_status(G, A.jac, A.regular);
        }
        if (A.verdict_range && (sel.freeness || sel.ext_identity)) {
            A.have_freeness = true;
            A.freeness = freeness_verdict(G, A.log_x, A.jac);
            if (sel.ext_identity) {
                A.have_top_dual = true;
                A.top_dual = top_dual_status(A.log_x, A.freeness.free_verdict);
            }
        }
        if (sel.duality) {
            A.have_duality = true;
            bool attempt_reverse = A.have_freeness && A.freeness.free_verdict;
            A.duality = duality_certificate(G, A.jac, A.regular, attempt_reverse);
        }
    }
    return A;
}

// ==== PRESENTATION INDEPENDENCE ====

IndependenceReport compare_geometries(const LogGeometry& G1, const QAnalysis& A1,
                                      const LogGeometry& G2, const QAnalysis& A2) {
    require_input(G1.R == G2.R, "geometries must live in the same ring");
    require_input(A1.q == A2.q, "analyses compare at the same q");
    require_input(submodule_equal(FreeModule::trivial(G1.R, 1),
                                  ideal_as_vecs(G1.R, G1.x_groebner),
                                  ideal_as_vecs(G2.R, G2.x_groebner)),
                  "the two geometries present different subspaces");

    IndependenceReport r;
    r.der_equal = submodule_equal(A1.der_x.T, A1.der_x.gens, A2.der_x.gens);
    if (A1.have_jac && A2.have_jac) {
        r.kernel_equal = submodule_equal(A1.jac.source, A1.jac.kernel_num,
                                         A2.jac.kernel_num);

        std::vector<Int> tw;
        for (const auto& t : A1.jac.target_tuples)
            tw.push_back(-tuple_weight(*G1.R, t));
        FreeModule plain(G1.R, tw);
        auto rewrap = [&plain](const std::vector<Vec>& cols) {
            std::vector<Vec> out;
            for (const Vec& c : cols) {
                if (c.is_zero()) continue;
                Vec v(plain);
                for (int j = 0; j < plain.rank(); ++j)
                    if (!c[j].is_zero()) v.set(j, c[j]);
                out.push_back(std::move(v));
            }
            return out;
        };
        std::vector<Vec> s1 = rewrap(A1.jac.columns);
        std::vector<Vec> s2 = rewrap(A2.jac.columns);
        for (const Vec& v : ideal_times_free(plain, G1.x_groebner)) {
            s1.push_back(v);
            s2.push_back(v);
        }
        r.image_equal = submodule_equal(plain, s1, s2);
    }
    if (A1.have_freeness && A2.have_freeness)
        r.verdict_equal =
            (A1.freeness.free_verdict == A2.freeness.free_verdict);
    return r;
}

} // namespace logres

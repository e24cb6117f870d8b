/// @file log_modules.cpp
/// @brief Logarithmic form/field modules, contraction duality, colon law.

#include "logres/logforms.hpp"

#include "logres/constraints.hpp"
#include "logres/module_ops.hpp"

#include <string>
#include <utility>

namespace logres {

// ==== CONSTRAINED SUBMODULES ====

std::vector<Vec> constrained_submodule(const FreeModule& source,
                                       const std::vector<ConditionBlock>& blocks) {
    std::vector<Int> twists;
    for (const auto& b : blocks)
        for (Int tw : b.target.twists) twists.push_back(tw - b.map_degree);
    FreeModule U(source.ring, twists);

    std::vector<Vec> full;
    if (U.rank() == 0) { // no conditions: the whole source module
        for (int l = 0; l < source.rank(); ++l)
            full.push_back(Vec::basis(source, l));
        return reduced_gens(source, full);
    }

    std::vector<Vec> cols;
    for (int l = 0; l < source.rank(); ++l) {
        Vec col(U);
        int off = 0;
        for (const auto& b : blocks) {
            const Vec& im = b.images[l];
            for (int j = 0; j < b.target.rank(); ++j)
                if (!im[j].is_zero()) col.set(off + j, im[j]);
            off += b.target.rank();
        }
        cols.push_back(std::move(col));
    }

    std::vector<Vec> target_gens;
    {
        int off = 0;
        for (const auto& b : blocks) {
            for (const Vec& a : b.allowed) {
                Vec t(U);
                for (int j = 0; j < b.target.rank(); ++j)
                    if (!a[j].is_zero()) t.set(off + j, a[j]);
                target_gens.push_back(std::move(t));
            }
            off += b.target.rank();
        }
    }
    return preimage(source, cols, target_gens);
}

namespace {

/// Degree of a homogeneous polynomial (zero rejected).
Int homdeg(const Polynomial& p, const char* what) {
    Int d = 0;
    require_internal(!p.is_zero() && p.is_homogeneous(&d), std::string(what) +
                         ": expected a nonzero homogeneous polynomial");
    return d;
}

/// Blocks expressing < variable, duals[s] > in ideal for every s, where the
/// pairing against a fixed dual element is the componentwise coefficient
/// sum (dual bases pair to 1).
std::vector<Vec> contraction_colon(const FreeModule& source,
                                   const std::vector<Vec>& duals,
                                   const std::vector<Polynomial>& ideal) {
    const RingPtr& R = source.ring;
    FreeModule R1 = FreeModule::trivial(R, 1);
    std::vector<Vec> idvecs = ideal_as_vecs(R, ideal);
    std::vector<ConditionBlock> blocks;
    for (const Vec& w : duals) {
        if (w.is_zero()) continue;
        Int d = 0;
        require_internal(w.is_homogeneous(&d), "contraction datum not homogeneous");
        ConditionBlock b;
        b.target = R1;
        b.map_degree = d;
        for (int l = 0; l < source.rank(); ++l) {
            Vec im(R1);
            if (!w[l].is_zero()) im.set(0, w[l]);
            b.images.push_back(std::move(im));
        }
        b.allowed = idvecs;
        blocks.push_back(std::move(b));
    }
    return constrained_submodule(source, blocks);
}

/// All basis elements of F, canonically reduced.
std::vector<Vec> full_module(const FreeModule& F) {
    std::vector<Vec> out;
    for (int l = 0; l < F.rank(); ++l) out.push_back(Vec::basis(F, l));
    return reduced_gens(F, out);
}

} // namespace

// ==== LOGARITHMIC FORM MODULES ====

LogFormModule omega_log(const LogGeometry& G, int q, bool relative) {
    require_input(0 <= q && q <= G.n,
                  "form degree q = " + std::to_string(q) + " outside 0.." +
                      std::to_string(G.n));
    const RingPtr& R = G.R;
    LogFormModule L;
    L.q = q;
    L.relative = relative;
    L.F = forms_module(R, q);
    L.pole_twist = G.deg_h_total;

    FreeModule F1 = forms_module(R, q + 1); // rank 0 when q = n
    std::vector<Vec> ic_q = ideal_times_forms(R, q, G.ctx.groebner);
    std::vector<Vec> ic_q1 = ideal_times_forms(R, q + 1, G.ctx.groebner);

    std::vector<ConditionBlock> blocks;
    for (const Polynomial& hi : G.h) {
        ConditionBlock b;
        b.target = F1;
        b.map_degree = homdeg(hi, "complete intersection equation");
        Vec dhi = d_form(hi);
        for (int l = 0; l < L.F.rank(); ++l)
            b.images.push_back(wedge(dhi, 1, Vec::basis(L.F, l), q));
        b.allowed = ic_q1;
        blocks.push_back(std::move(b));
    }
    if (relative) {
        for (const Polynomial& g : G.x_groebner) {
            Int d = homdeg(g, "subspace generator");
            ConditionBlock mult;
            mult.target = L.F;
            mult.map_degree = d;
            for (int l = 0; l < L.F.rank(); ++l)
                mult.images.push_back(Vec::basis(L.F, l).scaled(g));
            mult.allowed = ic_q;
            blocks.push_back(std::move(mult));

            ConditionBlock wdg;
            wdg.target = F1;
            wdg.map_degree = d;
            Vec dg = d_form(g);
            for (int l = 0; l < L.F.rank(); ++l)
                wdg.images.push_back(wedge(dg, 1, Vec::basis(L.F, l), q));
            wdg.allowed = ic_q1;
            blocks.push_back(std::move(wdg));
        }
    }
    L.numerator = constrained_submodule(L.F, blocks);
    require_internal(submodule_contains(L.F, L.numerator, ic_q),
                     "logarithmic numerator does not contain I_C * Omega^q");

    // Closed-form endpoints: below the height the conditions force the
    // trivial lower bound; at the top the wedge conditions are vacuous.
    if (q < G.k) {
        L.endpoint_applicable = true;
        L.endpoint_ok = submodule_equal(L.F, L.numerator, ic_q);
    } else if (q == G.n) {
        L.endpoint_applicable = true;
        std::vector<Vec> expected;
        if (relative) {
            std::vector<Polynomial> colon =
                colon_ideal(R, G.ctx.groebner, G.x_groebner);
            expected = reduced_gens(L.F, ideal_times_forms(R, q, colon));
        } else {
            expected = full_module(L.F);
        }
        L.endpoint_ok = submodule_equal(L.F, L.numerator, expected);
    }

    L.approx = make_approximation(G.ctx, L.F, L.numerator);
    return L;
}

// ==== MULTI-VECTOR FIELD MODULES ====

MultiFieldModule der_log(const LogGeometry& G, int q, bool along_x,
                         const FundamentalForm* alpha) {
    require_input(0 <= q && q <= G.n,
                  "field degree q = " + std::to_string(q) + " outside 0.." +
                      std::to_string(G.n));
    MultiFieldModule M;
    M.q = q;
    M.along_x = along_x;
    M.T = fields_module(G.R, q);

    if (q < G.k) {
        // The defining contraction runs over (q-k)-tuples, of which there
        // are none: the condition is vacuous and the module is everything.
        M.vacuous = true;
        M.gens = full_module(M.T);
        return M;
    }

    FreeModule Fqk = forms_module(G.R, q - G.k);
    auto wedge_family = [&](const Vec& kform) {
        std::vector<Vec> out;
        for (int t = 0; t < Fqk.rank(); ++t)
            out.push_back(wedge(kform, G.k, Vec::basis(Fqk, t), q - G.k));
        return out;
    };

    if (!along_x) {
        M.gens = contraction_colon(M.T, wedge_family(G.dh), G.ctx.groebner);
        return M;
    }

    FundamentalForm local;
    if (alpha == nullptr) {
        local = fundamental_form(G);
        alpha = &local;
    }

    // Route 1 (definition): contractions against k-fold wedges of the
    // differentials of the subspace generators land in I_X.
    std::vector<Vec> wedge_forms;
    {
        int r = (int)G.x_groebner.size();
        FreeModule F1 = forms_module(G.R, 1);
        std::vector<Vec> dgs;
        for (const Polynomial& g : G.x_groebner) dgs.push_back(d_form(g));
        for (const auto& S : index_tuples(r, G.k)) {
            Vec acc = dgs[S[0]];
            int p = 1;
            for (size_t i = 1; i < S.size(); ++i, ++p)
                acc = wedge(acc, p, dgs[S[i]], 1);
            if (acc.is_zero()) continue;
            for (Vec& w : wedge_family(acc))
                wedge_forms.push_back(std::move(w));
        }
    }
    std::vector<Vec> route_def = contraction_colon(M.T, wedge_forms, G.x_groebner);

    // Routes 2 and 3: contractions against the fundamental form wedged with
    // basis forms land in I_X, respectively in I_C.
    std::vector<Vec> alpha_family = wedge_family(alpha->alpha);
    std::vector<Vec> route_ax = contraction_colon(M.T, alpha_family, G.x_groebner);
    std::vector<Vec> route_ac = contraction_colon(M.T, alpha_family, G.ctx.groebner);

    M.routes_agree = submodule_equal(M.T, route_def, route_ax) &&
                     submodule_equal(M.T, route_def, route_ac);
    require_check(M.routes_agree,
                  "tangent multi-field routes disagree along the subspace at q = " +
                      std::to_string(q));
    M.gens = route_def;
    return M;
}

std::vector<Vec> cofactor_fields(const RingPtr& R, const Polynomial& f, int q) {
    int n = R->nvars();
    FreeModule T = fields_module(R, q);
    std::vector<Vec> out;
    for (const auto& j : index_tuples(n, q + 1)) {
        Vec v(T);
        for (size_t i = 0; i < j.size(); ++i) {
            Polynomial df = f.derivative(j[i]);
            if (df.is_zero()) continue;
            std::vector<int> rest;
            for (size_t l = 0; l < j.size(); ++l)
                if (l != i) rest.push_back(j[l]);
            int r = tuple_rank(n, rest);
            if (i % 2 == 1) df = df.scaled(Rat(-1));
            v.set(r, v[r] + df);
        }
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return out;
}

// ==== CONTRACTION DUALITY ====

std::vector<Vec> hom_dual_fields(const RingPtr& R, int q, const std::vector<Vec>& form_gens,
                                 const std::vector<Polynomial>& ideal) {
    return contraction_colon(fields_module(R, q), form_gens, ideal);
}

std::vector<Vec> hom_dual_forms(const RingPtr& R, int q, const std::vector<Vec>& field_gens,
                                const std::vector<Polynomial>& ideal) {
    return contraction_colon(forms_module(R, q), field_gens, ideal);
}

SigmaDualCheck sigma_dual_check(const LogGeometry& G, const LogFormModule& forms,
                                const MultiFieldModule& fields) {
    require_input(forms.q == fields.q, "duality check needs matching q");
    SigmaDualCheck S;
    S.dual_of_forms = hom_dual_fields(G.R, forms.q, forms.numerator, G.ctx.groebner);
    S.dual_of_fields = hom_dual_forms(G.R, forms.q, fields.gens, G.ctx.groebner);
    S.forms_to_fields = submodule_equal(fields.T, S.dual_of_forms, fields.gens);
    S.fields_to_forms = submodule_equal(forms.F, S.dual_of_fields, forms.numerator);
    S.ok = S.forms_to_fields && S.fields_to_forms;
    return S;
}

ColonLawCheck colon_law_check(const LogGeometry& G, const LogFormModule& along_c,
                              const LogFormModule& relative) {
    require_input(along_c.q == relative.q && !along_c.relative && relative.relative,
                  "colon law compares the along-C module with the relative module "
                  "at the same q");
    const FreeModule& F = along_c.F;
    std::vector<Vec> ic_q = ideal_times_forms(G.R, along_c.q, G.ctx.groebner);
    std::vector<Vec> ix_q = ideal_times_forms(G.R, along_c.q, G.x_groebner);
    std::vector<Vec> v1 =
        colon_submodule_within(F, ic_q, G.x_groebner, along_c.numerator);
    std::vector<Vec> v2 =
        colon_submodule_within(F, ix_q, G.x_groebner, along_c.numerator);
    ColonLawCheck C;
    C.variant_ic = submodule_equal(F, relative.numerator, v1);
    C.variant_ix = submodule_equal(F, relative.numerator, v2);
    return C;
}

} // namespace logres

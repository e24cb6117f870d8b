/// @file residues.cpp
/// @brief Residue symbols, residue lifts, and regular form modules.

#include "logres/residues.hpp"

#include "logres/constraints.hpp"
#include "logres/exterior.hpp"
#include "logres/module_ops.hpp"
#include "logres/presented.hpp"

#include <string>
#include <utility>

namespace logres {

namespace {

/// Membership basis for I_C * Omega^(p+k).
GroebnerBasis pole_basis(const LogGeometry& G, int degree) {
    FreeModule F = forms_module(G.R, degree);
    return GroebnerBasis(F, ideal_times_forms(G.R, degree, G.ctx.groebner));
}

} // namespace

// ==== RESIDUE SYMBOLS ====

bool symbol_is_zero(const LogGeometry& G, const ResidueSymbol& s) {
    return pole_basis(G, s.p + G.k).contains(s.numerator);
}

bool symbols_equal(const LogGeometry& G, const ResidueSymbol& s1,
                   const ResidueSymbol& s2) {
    require_input(s1.p == s2.p, "residue symbols live in different form degrees");
    Vec diff = s1.numerator.scaled(s2.den) - s2.numerator.scaled(s1.den);
    return pole_basis(G, s1.p + G.k).contains(diff);
}

std::vector<Vec> alpha_wedge_basis(const LogGeometry& G, const Vec& alpha, int q) {
    require_input(G.k <= q && q <= G.n, "wedge family needs k <= q <= n");
    FreeModule low = forms_module(G.R, q - G.k);
    std::vector<Vec> out;
    for (int t = 0; t < low.rank(); ++t)
        out.push_back(wedge(alpha, G.k, Vec::basis(low, t), q - G.k));
    return out;
}

// ==== RESIDUE LIFTS ====

ResidueResult residue(const LogGeometry& G, const FundamentalForm& FF, int q,
                      const Vec& form, Int degree_bound,
                      const std::vector<Vec>* numerator) {
    require_input(G.k <= q && q <= G.n, "residues need k <= q <= n");
    if (degree_bound < 0) degree_bound = default_degree_bound(G);
    const RingPtr& R = G.R;
    FreeModule Fq = forms_module(R, q);
    FreeModule low = forms_module(R, q - G.k);

    if (numerator) {
        GroebnerBasis nb(Fq, *numerator);
        require_input(nb.contains(form),
                      "form is not in the logarithmic numerator at q = " +
                          std::to_string(q));
    }

    // Lift columns: the nonzero alpha ^ dx_i first, then I_C * Omega^q.
    std::vector<Vec> wedges = alpha_wedge_basis(G, FF.alpha, q);
    std::vector<Vec> cols;
    std::vector<int> col_rank; // low-basis rank of each kept column
    for (int t = 0; t < static_cast<int>(wedges.size()); ++t) {
        if (wedges[t].is_zero()) continue;
        cols.push_back(wedges[t]);
        col_rank.push_back(t);
    }
    int nwedge = static_cast<int>(cols.size());
    std::vector<Vec> icq = ideal_times_forms(R, q, G.ctx.groebner);
    for (const Vec& v : icq) cols.push_back(v);
    GroebnerBasis lifter(Fq, cols);
    GroebnerBasis icq_basis(Fq, icq);

    Int fdeg = 0;
    bool fconst = FF.f.is_constant();
    if (!fconst) {
        bool homog = FF.f.is_homogeneous(&fdeg);
        require_internal(homog && fdeg > 0, "certificate f is not homogeneous");
    }
    int max_power = fconst ? 0 : static_cast<int>(degree_bound / fdeg);

    auto assemble = [&](const Polynomial& den, int power,
                        const std::vector<Polynomial>& lift) {
        Vec xi(low);
        for (int j = 0; j < nwedge; ++j)
            if (!lift[j].is_zero()) xi.set(col_rank[j], lift[j]);
        Vec num = wedge(FF.alpha, G.k, xi, q - G.k);
        require_internal(icq_basis.contains(form.scaled(den) - num),
                         "residue lift identity failed");
        ResidueResult out;
        out.g = den;
        out.power = power;
        out.xi = std::move(xi);
        out.symbol = ResidueSymbol{std::move(num), out.g, q - G.k};
        return out;
    };

    // Primary strategy: powers of the certificate denominator f.
    Polynomial g(R, Rat(1));
    for (int e = 0; e <= max_power; ++e) {
        if (e > 0) g = g * FF.f;
        auto lift = lifter.lift(form.scaled(g));
        if (lift) return assemble(g, e, *lift);
    }

    // Fallback: any homogeneous nonzerodivisor denominator is admissible,
    // and the set of all admissible g is exactly the transporter ideal
    // (span(cols) : form) = Ann((R*form + span(cols)) / span(cols)).
    // Search its canonical generators, then two-term combinations of equal
    // degree (graded prime avoidance rarely needs more over the rationals).
    std::vector<Polynomial> trans =
        annihilator(present_subquotient(Fq, {form}, cols).pm);
    std::vector<Polynomial> cands;
    std::vector<Int> tdeg(trans.size(), 0);
    for (size_t i = 0; i < trans.size(); ++i) {
        require_internal(trans[i].is_homogeneous(&tdeg[i]),
                         "transporter generator not homogeneous");
        cands.push_back(trans[i]);
    }
    for (size_t i = 0; i < trans.size(); ++i)
        for (size_t j = i + 1; j < trans.size(); ++j)
            if (tdeg[i] == tdeg[j]) cands.push_back(trans[i] + trans[j]);
    for (size_t i = 0; i < trans.size(); ++i)
        for (size_t j = 0; j < trans.size(); ++j)
            if (i != j && tdeg[i] == tdeg[j])
                cands.push_back(trans[i] + trans[j].scaled(Rat(2)));

    FreeModule R1 = FreeModule::trivial(R, 1);
    std::vector<Vec> ic1 = ideal_as_vecs(R, G.ctx.groebner);
    for (const Polynomial& cand : cands) {
        Int cd = 0;
        cand.is_homogeneous(&cd);
        if (cd > degree_bound) continue;
        if (!is_nzd_on_quotient(R1, ic1, cand)) continue;
        auto lift = lifter.lift(form.scaled(cand));
        require_internal(lift.has_value(),
                         "transporter denominator failed to lift");
        return assemble(cand, -1, *lift);
    }
    throw InputError("residue denominator search failed: powers of the "
                     "certificate up to degree bound " +
                     std::to_string(degree_bound) +
                     " and transporter nonzerodivisor candidates exhausted; "
                     "raise --degree-bound");
}

// ==== REGULAR FORM MODULES ====

RegularForms regular_forms(const LogGeometry& G, int p) {
    require_input(0 <= p && p + G.k <= G.n,
                  "regular p-forms need 0 <= p <= n - k");
    const RingPtr& R = G.R;
    const int d = p + G.k;
    RegularForms W;
    W.p = p;
    W.F = forms_module(R, d);

    std::vector<Vec> ic = ideal_times_forms(R, d, G.ctx.groebner);
    std::vector<Vec> ic1 = ideal_times_forms(R, d + 1, G.ctx.groebner);
    FreeModule Fup = forms_module(R, d + 1);

    std::vector<ConditionBlock> blocks;
    for (const Polynomial& g : G.x_groebner) {
        Int gd = 0;
        require_internal(g.is_homogeneous(&gd), "ideal generator not homogeneous");
        ConditionBlock mult;
        mult.target = W.F;
        mult.map_degree = gd;
        for (int l = 0; l < W.F.rank(); ++l)
            mult.images.push_back(Vec::basis(W.F, l).scaled(g));
        mult.allowed = ic;
        blocks.push_back(std::move(mult));

        if (Fup.rank() > 0) {
            ConditionBlock wdg;
            wdg.target = Fup;
            wdg.map_degree = gd;
            Vec dg = d_form(g);
            for (int l = 0; l < W.F.rank(); ++l)
                wdg.images.push_back(wedge(dg, 1, Vec::basis(W.F, l), d));
            wdg.allowed = ic1;
            blocks.push_back(std::move(wdg));
        }
    }
    W.numerator = constrained_submodule(W.F, blocks);
    require_internal(submodule_contains(W.F, W.numerator, ic),
                     "regular-form numerator does not contain I_C times forms");

    W.gen_forms = prune_generators(W.F, W.numerator, ic);
    W.em = present_subquotient_on(W.F, W.gen_forms, ic);

    // Cross-check 1: the colon of I_C * Omega inside the along-C module.
    LogFormModule along_c = omega_log(G, d, /*relative=*/false);
    std::vector<Vec> via_colon =
        colon_submodule_within(W.F, ic, G.x_groebner, along_c.numerator);
    W.colon_route_equal = submodule_equal(W.F, W.numerator, via_colon);

    // Cross-check 2: Hilbert series of Hom(R/I_X, along-C classes).
    HomModule H = hom_module(PresentedModule::cyclic(R, G.x_groebner, 0),
                             along_c.approx.W.pm);
    W.hom_series_equal = (hilbert_series(H.pm) == hilbert_series(W.em.pm));
    return W;
}

// ==== RESIDUE SEQUENCE ====

ResidueSequenceCheck check_residue_sequence(const LogGeometry& G,
                                            const FundamentalForm& FF,
                                            const LogFormModule& relative,
                                            const RegularForms& W,
                                            Int degree_bound) {
    require_input(relative.relative, "residue sequence starts from the relative module");
    require_input(relative.q == W.p + G.k,
                  "residue sequence degrees disagree: q != p + k");
    const int q = relative.q;
    ResidueSequenceCheck out;

    out.numerators_match =
        submodule_equal(relative.F, relative.numerator, W.numerator);

    GroebnerBasis icq(relative.F,
                      ideal_times_forms(G.R, q, G.ctx.groebner));
    std::vector<Vec> class_gens =
        prune_generators(relative.F, relative.numerator,
                         ideal_times_forms(G.R, q, G.ctx.groebner));

    out.all_lifts_found = true;
    out.symbols_match_classes = true;
    out.kernel_ok = true;
    Polynomial one(G.R, Rat(1));
    try {
        for (const Vec& a : class_gens) {
            ResidueResult r = residue(G, FF, q, a, degree_bound, &relative.numerator);
            ResidueSymbol cls{a, one, q - G.k};
            if (!symbols_equal(G, r.symbol, cls)) out.symbols_match_classes = false;
            // a has a nonzero class, so its residue symbol must be nonzero.
            if (symbol_is_zero(G, r.symbol)) out.kernel_ok = false;
            out.generator_residues.push_back(std::move(r));
        }
        for (const Vec& eta : ideal_times_forms(G.R, q, G.ctx.groebner)) {
            ResidueResult r = residue(G, FF, q, eta, degree_bound, &relative.numerator);
            if (!symbol_is_zero(G, r.symbol)) out.kernel_ok = false;
        }
    } catch (const InputError&) {
        out.all_lifts_found = false;
    }
    out.ok = out.numerators_match && out.all_lifts_found &&
             out.symbols_match_classes && out.kernel_ok;
    return out;
}

} // namespace logres

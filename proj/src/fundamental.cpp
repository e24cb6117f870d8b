/// @file fundamental.cpp
/// @brief Degree-bounded search for a certified fundamental form.
///
/// The search enumerates candidate pairs (a, b) with b a monomial multiple
/// of a canonical generator of (I_C : I_X) and a either zero or a monomial
/// multiple of a subspace generator of the same degree, in (degree,
/// generator position, descending-lex monomial) order.  For the first
/// candidates with f = a + b a nonzerodivisor on R/I_C, the linear system
///   f * alpha = b * dh + (element of the f-saturation of I_C*Omega^k)
/// is solved by a Groebner lift; a solution that passes the multiplication
/// and wedge conditions is returned with its full certificate.

#include "logres/logforms.hpp"

#include "logres/module_ops.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace logres {

namespace {

// ==== MONOMIAL ENUMERATION ====

void monomials_rec(const RingContext& R, int var, Int remaining, Exponent& cur,
                   std::vector<Exponent>& out) {
    int n = R.nvars();
    if (var == n - 1) {
        Int w = R.weights[var];
        if (remaining % w == 0) {
            cur[var] = static_cast<int32_t>(remaining / w);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    Int w = R.weights[var];
    for (Int e = remaining / w; e >= 0; --e) {
        cur[var] = static_cast<int32_t>(e);
        monomials_rec(R, var + 1, remaining - e * w, cur, out);
    }
    cur[var] = 0;
}

/// All monomial exponents of weighted degree d, descending-lex order.
std::vector<Exponent> monomials_of_degree(const RingPtr& R, Int d) {
    std::vector<Exponent> out;
    if (d < 0) return out;
    if (R->nvars() == 0) return out;
    Exponent cur(R->nvars(), 0);
    monomials_rec(*R, 0, d, cur, out);
    return out;
}

// ==== CERTIFICATE CONDITIONS ====

struct ConditionStatus {
    bool multiplication_ok = true;
    bool wedge_ok = true;
};

/// The two membership conditions a regular k-form representative must
/// satisfy: multiplication by I_X stays in I_C*Omega^k, and wedging with
/// the differential of any I_X generator lands in I_C*Omega^(k+1).
ConditionStatus regularity_conditions(const LogGeometry& G, const Vec& alpha) {
    const RingPtr& R = G.R;
    ConditionStatus st;
    GroebnerBasis gk(forms_module(R, G.k), ideal_times_forms(R, G.k, G.ctx.groebner));
    GroebnerBasis gk1(forms_module(R, G.k + 1),
                      ideal_times_forms(R, G.k + 1, G.ctx.groebner));
    for (const Polynomial& g : G.x_groebner) {
        if (!gk.contains(alpha.scaled(g))) st.multiplication_ok = false;
        if (!gk1.contains(wedge(d_form(g), 1, alpha, G.k))) st.wedge_ok = false;
    }
    return st;
}

} // namespace

// ==== FUNDAMENTAL FORM ====

Int default_degree_bound(const LogGeometry& G) {
    Int m = 0;
    for (const Polynomial& p : G.h) m = std::max(m, p.degree());
    for (const Polynomial& p : G.x_gens) m = std::max(m, p.degree());
    return 2 * m;
}

FundamentalForm fundamental_form(const LogGeometry& G, Int degree_bound) {
    if (degree_bound < 0) degree_bound = default_degree_bound(G);
    const RingPtr& R = G.R;
    FreeModule Fk = forms_module(R, G.k);
    std::vector<Vec> ick = ideal_times_forms(R, G.k, G.ctx.groebner);

    if (G.x_equals_c) {
        // X = C: the form is dh itself with trivial certificate.
        FundamentalForm FF;
        FF.fast_path = true;
        FF.alpha = G.dh;
        FF.a = Polynomial(R);
        FF.b = Polynomial(R, Rat(1));
        FF.f = Polynomial(R, Rat(1));
        FF.torsion_part = Vec(Fk);
        FF.sat_exponent = 0;
        ConditionStatus st = regularity_conditions(G, FF.alpha);
        FF.multiplication_ok = st.multiplication_ok;
        FF.wedge_ok = st.wedge_ok;
        require_check(st.multiplication_ok && st.wedge_ok,
                      "top wedge of the defining equations fails the regular-form "
                      "membership conditions");
        return FF;
    }

    std::vector<Polynomial> colon = colon_ideal(R, G.ctx.groebner, G.x_groebner);
    require_internal(!colon.empty(), "colon ideal of a proper containment is nonzero");
    std::vector<Vec> icvecs = ideal_as_vecs(R, G.ctx.groebner);
    FreeModule R1 = FreeModule::trivial(R, 1);
    GroebnerBasis ick_basis(Fk, ick);

    // Attempt one certified candidate; nullopt when the lift does not exist
    // or the solution fails the membership conditions.
    auto attempt = [&](const Polynomial& a, const Polynomial& b,
                       const Polynomial& f) -> std::optional<FundamentalForm> {
        auto [satgens, expo] = saturate_by_element(Fk, ick, f);
        std::vector<Vec> cols;
        for (int t = 0; t < Fk.rank(); ++t)
            cols.push_back(Vec::basis(Fk, t).scaled(f));
        for (const Vec& s : satgens) cols.push_back(s);
        GroebnerBasis lifter(Fk, cols);
        Vec target = G.dh.scaled(b);
        auto lift = lifter.lift(target);
        if (!lift) return std::nullopt;

        Vec alpha(Fk);
        for (int t = 0; t < Fk.rank(); ++t)
            if (!(*lift)[t].is_zero()) alpha.set(t, (*lift)[t]);
        // Canonical small representative: the membership conditions are
        // invariant modulo I_C*Omega^k, and so is the torsion identity.
        alpha = ick_basis.normal_form(alpha);
        if (alpha.is_zero()) return std::nullopt;
        require_internal(alpha.is_homogeneous(), "fundamental form lift lost grading");

        Vec s = alpha.scaled(f) - target;
        require_internal(GroebnerBasis(Fk, satgens).contains(s),
                         "torsion residual escaped the saturation");
        Polynomial fe(R, Rat(1));
        for (int i = 0; i < expo; ++i) fe *= f;
        require_internal(ick_basis.contains(s.scaled(fe)),
                         "saturation exponent fails to clear the torsion residual");

        ConditionStatus st = regularity_conditions(G, alpha);
        if (!st.multiplication_ok || !st.wedge_ok) return std::nullopt;

        FundamentalForm FF;
        FF.alpha = std::move(alpha);
        FF.a = a;
        FF.b = b;
        FF.f = f;
        FF.torsion_part = std::move(s);
        FF.sat_exponent = expo;
        FF.multiplication_ok = st.multiplication_ok;
        FF.wedge_ok = st.wedge_ok;
        FF.fast_path = false;
        return FF;
    };

    Int dmin = colon[0].degree();
    for (const Polynomial& c : colon) dmin = std::min(dmin, c.degree());

    for (Int d = dmin; d <= degree_bound; ++d) {
        for (const Polynomial& cgen : colon) {
            if (cgen.degree() > d) continue;
            for (const Exponent& m : monomials_of_degree(R, d - cgen.degree())) {
                Polynomial b = cgen.term_scaled(m, Rat(1));
                // a = 0 first, then monomial multiples of the subspace
                // generators in input order.
                std::vector<Polynomial> a_cands{Polynomial(R)};
                for (const Polynomial& xg : G.x_gens) {
                    if (xg.degree() > d) continue;
                    for (const Exponent& ma : monomials_of_degree(R, d - xg.degree()))
                        a_cands.push_back(xg.term_scaled(ma, Rat(1)));
                }
                for (const Polynomial& a : a_cands) {
                    Polynomial f = a + b;
                    if (f.is_zero()) continue;
                    if (!is_nzd_on_quotient(R1, icvecs, f)) continue;
                    auto hit = attempt(a, b, f);
                    if (hit) return *hit;
                }
            }
        }
    }
    throw InputError(
        "fundamental form search exhausted all candidates up to degree " +
        std::to_string(degree_bound) + "; raise --degree-bound");
}

} // namespace logres

/// @file logforms.hpp
/// @brief Logarithmic differential forms and multi-vector fields along a
///        validated geometry, their duality under contraction, and the
///        fundamental form.
///
/// All fractional modules are stored in cleared-denominator form: the module
/// of logarithmic q-forms with simple poles is represented by its numerator,
/// a submodule N with I_C*Omega^q <= N <= Omega^q; the pole bookkeeping is a
/// degree twist recorded separately and never affects module identities.
///
/// The central duality: contraction <.,.> : Theta^q x Omega^q -> R pairs the
/// numerator modules with the multi-vector-field modules; hom_dual_fields /
/// hom_dual_forms realize Hom(-, I_C) inside the dual free module (any
/// homomorphism from a full-rank submodule containing I_C times the free
/// module into I_C extends integrally to the whole free module because
/// Hom(I_C, I_C) = R when height(I_C) >= 2, so the colon realization is the
/// whole Hom).

#pragma once

#include "logres/geometry.hpp"

#include <vector>

namespace logres {

// ==== LOGARITHMIC FORM MODULES ====

/// Numerator presentation of the module of logarithmic q-forms, either
/// along C alone or along X relative to C, plus the induced approximation
/// data (F = Omega^q, I = I_C, M = numerator, W = numerator/I_C*Omega^q).
struct LogFormModule {
    int q = 0;
    bool relative = false;       ///< conditions along X relative to C included
    FreeModule F;                ///< Omega^q
    std::vector<Vec> numerator;  ///< canonical generators, I_C*Omega^q <= N <= Omega^q
    Approximation approx;        ///< the induced approximation of N in Omega^q
    Int pole_twist = 0;          ///< deg(h_1...h_k): metadata for the cleared pole
    bool endpoint_applicable = false; ///< q < k or q = n: a closed form is known
    bool endpoint_ok = true;     ///< the closed form matched (true when not applicable)
};

/// Compute the logarithmic q-form numerator: the set of a in Omega^q with
/// dh_i ^ a in I_C*Omega^(q+1) for every i, intersected (when `relative`)
/// with { a : I_X*a <= I_C*Omega^q and dg ^ a in I_C*Omega^(q+1) for the
/// canonical generators g of I_X }.  Requires 0 <= q <= n.
LogFormModule omega_log(const LogGeometry& G, int q, bool relative);

// ==== MULTI-VECTOR FIELD MODULES ====

/// Multi-vector fields tangent to the geometry: submodule of Theta^q.
struct MultiFieldModule {
    int q = 0;
    bool along_x = false;
    FreeModule T;                ///< Theta^q
    std::vector<Vec> gens;       ///< canonical generators
    bool vacuous = false;        ///< q < k: the defining condition is empty
    bool routes_agree = true;    ///< along X: all defining routes coincide
};

/// The fundamental k-form of X in Y and its certificate: f*alpha agrees with
/// b*dh up to the f-torsion of Omega^k/I_C*Omega^k, where b in (I_C : I_X),
/// a in I_X, f = a + b is a nonzerodivisor on R/I_C.
struct FundamentalForm {
    Vec alpha;                   ///< in forms_module(R, k)
    Polynomial a, b, f;          ///< f = a + b; b in (I_C : I_X); a in I_X or zero
    Vec torsion_part;            ///< s = f*alpha - b*dh, inside the saturation
    int sat_exponent = 0;        ///< least e with f^e * (saturation) <= I_C*Omega^k
    bool multiplication_ok = false; ///< I_X * alpha <= I_C*Omega^k
    bool wedge_ok = false;       ///< dg ^ alpha <= I_C*Omega^(k+1) for I_X generators
    bool fast_path = false;      ///< X = C: alpha = dh, f = b = 1 exactly
};

/// Default search bound for fundamental-form/residue denominators:
/// twice the largest generator degree among h and the subspace generators.
Int default_degree_bound(const LogGeometry& G);

/// Search for a certified fundamental form in degree-ascending order.
/// `degree_bound` < 0 selects default_degree_bound(G).  Throws InputError
/// with the bound in the message when the search space is exhausted.
FundamentalForm fundamental_form(const LogGeometry& G, Int degree_bound = -1);

/// Multi-vector fields tangent to C (q >= k: contraction against dh ^ dx_i
/// lands in I_C for every (q-k)-tuple i; q < k: vacuously all of Theta^q),
/// or tangent to X (contraction against every wedge of k differentials of
/// canonical I_X generators times dx_i lands in I_X).  For along_x the three
/// defining routes (k-fold differential wedges into I_X; alpha ^ dx_i into
/// I_X; alpha ^ dx_i into I_C) are all computed and must agree; `alpha`
/// must then be a certified fundamental form.  Requires 0 <= q <= n.
MultiFieldModule der_log(const LogGeometry& G, int q, bool along_x,
                         const FundamentalForm* alpha = nullptr);

/// The signed-cofactor fields of a single equation: for every strictly
/// increasing (q+1)-tuple j, the q-field
///   sum_i (-1)^(i+1) (df/dx_{j_i}) * basis field on j minus j_i.
/// Each lies in der_log(G, q, along C) when f is one of the h's.
std::vector<Vec> cofactor_fields(const RingPtr& R, const Polynomial& f, int q);

// ==== CONTRACTION DUALITY ====

/// Hom(span(gens), I) realized inside Theta^q via contraction:
/// { delta in Theta^q : <delta, g> in I for every generator g }.
std::vector<Vec> hom_dual_fields(const RingPtr& R, int q, const std::vector<Vec>& form_gens,
                                 const std::vector<Polynomial>& ideal);

/// Hom(span(gens), I) realized inside Omega^q via contraction:
/// { a in Omega^q : <d, a> in I for every generator d }.
std::vector<Vec> hom_dual_forms(const RingPtr& R, int q, const std::vector<Vec>& field_gens,
                                const std::vector<Polynomial>& ideal);

/// Both directions of the contraction duality between the logarithmic-form
/// numerator and the tangent multi-vector fields:
///   Hom(numerator, I_C) = fields and Hom(fields, I_C) = numerator,
/// as literal canonical-generator equalities.
struct SigmaDualCheck {
    std::vector<Vec> dual_of_forms;  ///< Hom(numerator, I_C) inside Theta^q
    std::vector<Vec> dual_of_fields; ///< Hom(fields, I_C) inside Omega^q
    bool forms_to_fields = false;    ///< dual_of_forms == fields
    bool fields_to_forms = false;    ///< dual_of_fields == numerator
    bool ok = false;                 ///< both
};
SigmaDualCheck sigma_dual_check(const LogGeometry& G, const LogFormModule& forms,
                                const MultiFieldModule& fields);

/// The restriction colon law relating the relative numerator to the
/// along-C numerator.  Two textual variants of the law exist; both are
/// computed and reported verbatim.  The asserted law is variant 1.
struct ColonLawCheck {
    bool variant_ic = false;  ///< numerator(X) == (I_C*Omega^q :_{numerator(C)} I_X)
    bool variant_ix = false;  ///< numerator(X) == (I_X*Omega^q :_{numerator(C)} I_X)
};
ColonLawCheck colon_law_check(const LogGeometry& G, const LogFormModule& along_c,
                              const LogFormModule& relative);

} // namespace logres

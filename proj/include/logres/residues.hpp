/// @file residues.hpp
/// @brief Residues of logarithmic forms and the regular (meromorphic)
///        form modules they land in.
///
/// A residue symbol is a fraction: a numerator form in Omega^(p+k) over a
/// denominator that is a nonzerodivisor on R/I_C (times the implicit
/// product h_1...h_k carried by every symbol).  Symbols compare by
/// cross-multiplication modulo I_C*Omega^(p+k); a symbol is zero exactly
/// when its numerator lies in I_C*Omega^(p+k).
///
/// The regular p-form module is computed directly from the membership
/// conditions (multiplication by I_X and wedge against dI_X both land in
/// I_C times forms) and cross-checked against two other routes: the colon
/// inside the along-C module, and the Hilbert series of Hom(R/I_X, -) on
/// the along-C module.

#pragma once

#include "logres/hilbert.hpp"
#include "logres/hom.hpp"
#include "logres/logforms.hpp"

#include <vector>

namespace logres {

// ==== RESIDUE SYMBOLS ====

/// Class of (numerator / den) as a regular p-form on the subspace.
struct ResidueSymbol {
    Vec numerator;   ///< in forms_module(R, p + k)
    Polynomial den;  ///< homogeneous nonzerodivisor on R/I_C
    int p = 0;
};

/// numerator in I_C*Omega^(p+k)?
bool symbol_is_zero(const LogGeometry& G, const ResidueSymbol& s);

/// Cross-multiplied equality: s1.den2*num1 - den1*num2 in I_C*Omega^(p+k).
bool symbols_equal(const LogGeometry& G, const ResidueSymbol& s1,
                   const ResidueSymbol& s2);

/// alpha ^ dx_i for every strictly increasing (q-k)-tuple i, inside
/// Omega^q: the column family shared by residue lifts and the Jacobian
/// contraction matrix.
std::vector<Vec> alpha_wedge_basis(const LogGeometry& G, const Vec& alpha, int q);

/// A computed residue: g * form = alpha ^ xi modulo I_C*Omega^q, plus the
/// resulting symbol [alpha ^ xi / g].  `power` is e when g = f^e came from
/// the certificate-power search, and -1 when g was found in the
/// transporter ideal instead.
struct ResidueResult {
    Polynomial g;
    int power = 0;
    Vec xi;               ///< in forms_module(R, q - k)
    ResidueSymbol symbol; ///< p = q - k
};

/// Compute the residue of `form` (which must lie in the relative
/// logarithmic numerator at q; membership is verified when `numerator` is
/// supplied).  Any homogeneous nonzerodivisor g on R/I_C with
/// g * form = alpha ^ xi (mod I_C*Omega^q) is an admissible denominator.
/// Search order: g in { 1, f, f^2, ... } with deg(g) <= degree_bound
/// (default default_degree_bound(G)); then nonzerodivisors inside the
/// full transporter ideal of `form` (canonical generators, then two-term
/// combinations of equal degree).  Throws InputError naming the bound
/// when no admissible denominator is found.
ResidueResult residue(const LogGeometry& G, const FundamentalForm& FF, int q,
                      const Vec& form, Int degree_bound = -1,
                      const std::vector<Vec>* numerator = nullptr);

// ==== REGULAR FORM MODULES ====

/// The module of regular p-forms on the subspace, as a subquotient of
/// Omega^(p+k): numerator = { xi : I_X*xi <= I_C*Omega^(p+k) and
/// dg ^ xi in I_C*Omega^(p+k+1) for canonical I_X generators g },
/// modulo I_C*Omega^(p+k).
struct RegularForms {
    int p = 0;
    FreeModule F;               ///< Omega^(p+k)
    std::vector<Vec> numerator; ///< canonical generators of the numerator
    std::vector<Vec> gen_forms; ///< pruned class representatives (the symbols)
    EmbeddedModule em;          ///< subquotient on gen_forms over I_C*Omega^(p+k)
    bool colon_route_equal = false;  ///< equals the colon inside the along-C module
    bool hom_series_equal = false;   ///< Hilbert series matches Hom(R/I_X, along-C)
};
RegularForms regular_forms(const LogGeometry& G, int p);

// ==== RESIDUE SEQUENCE ====

/// Exactness data for the residue map on the relative logarithmic module at
/// q: its numerator coincides with the regular-form numerator at p = q - k
/// (two independently computed condition sets), residues of the generators
/// exist and agree with their own classes as symbols, generators inside
/// I_C*Omega^q have zero symbols, and generators outside have nonzero
/// symbols.
struct ResidueSequenceCheck {
    bool numerators_match = false;
    bool all_lifts_found = false;
    bool symbols_match_classes = false;
    bool kernel_ok = false;
    std::vector<ResidueResult> generator_residues; ///< one per pruned class generator
    bool ok = false;
};
ResidueSequenceCheck check_residue_sequence(const LogGeometry& G,
                                            const FundamentalForm& FF,
                                            const LogFormModule& relative,
                                            const RegularForms& W,
                                            Int degree_bound = -1);

} // namespace logres

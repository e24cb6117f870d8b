/// @file jacobian.hpp
/// @brief The Jacobian module of the subspace: the image of multi-vector
///        fields under contraction against the fundamental form, taken
///        modulo I_X, together with its kernel and the duality pairing
///        against regular forms.

#pragma once

#include "logres/residues.hpp"

#include <vector>

namespace logres {

/// The contraction map Theta^q -> (free module over (q-k)-tuples),
/// delta |-> ( <delta, alpha ^ dx_i> )_i, reduced modulo I_X.
///
/// The target twist on slot i is -w(i) - deg(alpha), which makes every
/// column homogeneous of the degree of its source basis field; the
/// recorded module is the subquotient (span(columns) + I_X*target)/
/// (I_X*target), an R/I_X-module.
struct JacobianModule {
    int q = 0;
    Int alpha_degree = 0;
    FreeModule source;  ///< Theta^q
    FreeModule target;
    std::vector<std::vector<int>> source_tuples; ///< column labels (basis fields)
    std::vector<std::vector<int>> target_tuples; ///< slot labels (dx wedges)
    std::vector<Vec> columns;     ///< one per source tuple (zeros kept)
    std::vector<int> gen_index;   ///< indices of the nonzero columns
    EmbeddedModule em;            ///< module on the nonzero columns mod I_X*target
    std::vector<Vec> kernel_num;  ///< { delta : image in I_X*target }, canonical
    bool mod_x_injective = false; ///< kernel_num == I_X * Theta^q
    bool minors_checked = false;  ///< X = C and q = k: compared against minors
    bool minors_match = true;     ///< columns + I_X == Jacobian minors + I_X
};

/// Build the Jacobian module at q (k <= q <= n) from a certified
/// fundamental form.
JacobianModule jacobian_module(const LogGeometry& G, const FundamentalForm& FF,
                               int q);

/// Well-definedness of the duality pairing <delta, xi> between fields and
/// regular-form numerators at matching q = p + k.
struct PairingStatus {
    bool values_in_colon = false; ///< <basis fields, regular gens> all in (I_C : I_X)
    bool kernel_kills = false;    ///< <kernel gens, regular gens> all in I_C
    bool ok = false;
};
PairingStatus pairing_status(const LogGeometry& G, const JacobianModule& J,
                             const RegularForms& W);

} // namespace logres

/// @file geometry.hpp
/// @brief Validated geometric setup: a reduced complete intersection curve
///        inside affine space together with a Cohen-Macaulay subspace.
///
/// A LogGeometry bundles a complete intersection ideal I_C = (h_1,...,h_k)
/// and a (possibly equal) larger ideal I_X with I_C contained in I_X, both
/// homogeneous for the ring's weights.  Construction validates every
/// hypothesis the downstream computations rely on and records the evidence:
///   - h_1,...,h_k is a regular sequence (k >= 2),
///   - I_C is contained in I_X, with a named witness on failure,
///   - R/I_X is Cohen-Macaulay with pdim = k,
///   - dim R/I_X = dim R/I_C = n - k,
///   - C is reduced, certified by the height of the ideal of k x k Jacobian
///     minors of h together with I_C exceeding k (the generic-smoothness
///     criterion; a complete intersection has no embedded components, so
///     this suffices),
///   - reducedness of the subspace cut out by I_X is an input assertion and
///     is recorded as such, never computed.
///
/// The top wedge dh_1 ^ ... ^ dh_k is precomputed; its coefficients are the
/// signed maximal minors of the Jacobian matrix of h and are cross-checked
/// against an independent cofactor-expansion determinant.

#pragma once

#include "logres/approximation.hpp"
#include "logres/exterior.hpp"

#include <vector>

namespace logres {

// ==== GEOMETRY ====

/// A validated pair (C, X): C a reduced complete intersection of height k,
/// X a Cohen-Macaulay subspace of the same dimension with I_C <= I_X.
struct LogGeometry {
    RingPtr R;
    int n = 0;                          ///< number of variables
    int k = 0;                          ///< height of I_C = length of h
    std::vector<Polynomial> h;          ///< the regular sequence, as given
    IContext ctx;                       ///< validated context for I_C
    std::vector<Polynomial> x_gens;     ///< I_X generators, as given
    std::vector<Polynomial> x_groebner; ///< canonical reduced basis of I_X
    bool x_equals_c = false;            ///< I_X == I_C as ideals

    Vec dh;                             ///< dh_1 ^ ... ^ dh_k in forms_module(R, k)
    std::vector<Polynomial> jac_minors; ///< nonzero k x k Jacobian minors of h
    int singular_height = 0;            ///< height of I_C + (minors); n+1 if unit

    std::vector<int> x_betti;           ///< total Betti numbers of R/I_X
    int x_pdim = 0;                     ///< pdim of R/I_X (== k when valid)
    int dim_cx = 0;                     ///< common dimension n - k
    Int deg_h_total = 0;                ///< sum of the degrees of the h_i
    bool x_reduced_asserted = true;     ///< recorded user assertion, not checked
};

/// Validate and assemble a LogGeometry.  `x_gens` empty means X = C.
/// Throws InputError naming the first failing certificate, in the order:
/// regular sequence, height restriction (k >= 2), containment I_C <= I_X,
/// R/I_X Cohen-Macaulay, dimension agreement, reducedness of C.
LogGeometry make_geometry(const RingPtr& R, const std::vector<Polynomial>& h,
                          const std::vector<Polynomial>& x_gens = {});

} // namespace logres

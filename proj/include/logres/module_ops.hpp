/// @file module_ops.hpp
/// @brief Submodule arithmetic: membership, preimages, intersections,
///        colons, saturation.
///
/// All functions work on explicit generator lists inside a common ambient
/// free module and return canonical generator lists (the reduced Groebner
/// basis of the result), so results of equal submodules compare equal as
/// plain vectors.

#pragma once

#include "logres/groebner.hpp"

#include <utility>
#include <vector>

namespace logres {

/// Canonical generating list: the reduced Groebner basis of span(gens).
std::vector<Vec> reduced_gens(const FreeModule& F, const std::vector<Vec>& gens);

/// span(sub) included in span(super)?
bool submodule_contains(const FreeModule& F, const std::vector<Vec>& super,
                        const std::vector<Vec>& sub);

bool submodule_equal(const FreeModule& F, const std::vector<Vec>& a,
                     const std::vector<Vec>& b);

/// sum coords_l * cols[l]; coords has one entry per column.
Vec combine(const std::vector<Vec>& cols, const std::vector<Polynomial>& coords);

/// Preimage of span(target) under the map sending the l-th basis element of
/// `source` to cols[l]: returns canonical generators of
///   { u in source : sum u_l cols[l] in span(target) }.
/// cols[l] must be homogeneous of degree source.twists[l] (zero allowed).
std::vector<Vec> preimage(const FreeModule& source, const std::vector<Vec>& cols,
                          const std::vector<Vec>& target);

/// Kernel of the map: preimage of the zero submodule.
std::vector<Vec> kernel_of_map(const FreeModule& source, const std::vector<Vec>& cols);

/// Intersection of two submodules of F.
std::vector<Vec> intersect_submodules(const FreeModule& F, const std::vector<Vec>& a,
                                      const std::vector<Vec>& b);

/// (span(N) : f) inside F = { v in F : f*v in span(N) }.
std::vector<Vec> colon_by_element(const FreeModule& F, const std::vector<Vec>& N,
                                  const Polynomial& f);

/// (span(N) :_F J) = { v in F : J v contained in span(N) } for an ideal J.
std::vector<Vec> colon_submodule(const FreeModule& F, const std::vector<Vec>& N,
                                 const std::vector<Polynomial>& J);

/// (span(N) :_M J) = { v in span(M) : J v contained in span(N) }.
std::vector<Vec> colon_submodule_within(const FreeModule& F, const std::vector<Vec>& N,
                                        const std::vector<Polynomial>& J,
                                        const std::vector<Vec>& M);

/// Ideal colon (I : J) in R.
std::vector<Polynomial> colon_ideal(const RingPtr& R, const std::vector<Polynomial>& I,
                                    const std::vector<Polynomial>& J);

/// Ideal intersection.
std::vector<Polynomial> intersect_ideals(const RingPtr& R, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b);

/// Saturation (span(N) : f^infinity) and the least exponent m with
/// (N : f^m) = (N : f^(m+1)); f^m then multiplies the saturation into N.
std::pair<std::vector<Vec>, int> saturate_by_element(const FreeModule& F,
                                                     const std::vector<Vec>& N,
                                                     const Polynomial& f);

/// Is f a nonzerodivisor on F/span(N)?  Equivalent to (N : f) = N.
bool is_nzd_on_quotient(const FreeModule& F, const std::vector<Vec>& N,
                        const Polynomial& f);

/// Generators f_i * e_j of the submodule I*F.
std::vector<Vec> ideal_times_free(const FreeModule& F, const std::vector<Polynomial>& I);

/// Generators f * g for f over I, g over gens (the submodule I*span(gens)).
std::vector<Vec> ideal_times_span(const std::vector<Polynomial>& I,
                                  const std::vector<Vec>& gens);

} // namespace logres

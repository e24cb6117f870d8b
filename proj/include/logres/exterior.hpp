/// @file exterior.hpp
/// @brief Exterior powers over the graded polynomial ring: differential
///        q-forms, q-vector fields, wedge products, contraction, and
///        Jacobian data for tuples of polynomials.
///
/// Basis convention: both the q-form module and the q-vector-field module
/// are free on the strictly increasing index tuples of length q, listed in
/// lexicographic order ((0,1) < (0,2) < (1,2) for n = 3, q = 2).  The
/// basis q-form dx_T carries generator degree +w(T) (the sum of the
/// weights in T); the basis q-vector-field carries -w(T).  q = 0 has the
/// single empty tuple with degree 0.  Contraction at equal degree pairs
/// dual bases to +1 (component-wise multiply-and-sum).

#pragma once

#include "logres/free_module.hpp"
#include "logres/ring.hpp"

#include <vector>

namespace logres {

/// Strictly increasing q-tuples from {0, ..., n-1} in lexicographic order.
/// q = 0 gives {{}}; q > n or q < 0 gives {}.
std::vector<std::vector<int>> index_tuples(int n, int q);

/// Position of `t` in index_tuples(n, t.size()).
int tuple_rank(int n, const std::vector<int>& t);

/// Sum of the variable weights over the tuple.
Int tuple_weight(const RingContext& R, const std::vector<int>& t);

/// The free module of differential q-forms (twists +w(T)).
FreeModule forms_module(const RingPtr& R, int q);

/// The free module of q-vector fields (twists -w(T)).
FreeModule fields_module(const RingPtr& R, int q);

/// Wedge product of a p-form and a q-form into a (p+q)-form; the zero
/// vector of the target when p + q exceeds the variable count.
Vec wedge(const Vec& a, int p, const Vec& b, int q);

/// Equal-degree contraction <delta, omega> of a q-vector field against a
/// q-form: sum over tuples of the coefficient products (dual bases pair
/// to +1).
Polynomial contract(const Vec& delta, const Vec& omega);

/// Exterior derivative of a polynomial: sum_i (df/dx_i) dx_i in the
/// 1-form module.
Vec d_form(const Polynomial& f);

/// dh_1 ^ ... ^ dh_k as a k-form.  The coefficient on dx_T is the
/// k x k Jacobian minor with columns T.
Vec dh_wedge(const RingPtr& R, const std::vector<Polynomial>& hs);

/// Independent k x k Jacobian minor det(dh_l/dx_{t_i}) by cofactor
/// expansion (cross-check for dh_wedge components).
Polynomial jacobian_minor(const RingPtr& R, const std::vector<Polynomial>& hs,
                          const std::vector<int>& t);

/// All generators f * dx_T of I * Omega^q for f running over `ideal`.
std::vector<Vec> ideal_times_forms(const RingPtr& R, int q,
                                   const std::vector<Polynomial>& ideal);

} // namespace logres

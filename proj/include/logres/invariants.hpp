/// @file invariants.hpp
/// @brief Homological invariants: depth, dimension, Cohen-Macaulayness.
///
/// depth is computed by the Auslander-Buchsbaum identity
/// depth = nvars - pdim and, when cross-checks are on, re-derived as
/// nvars - max{ i : Ext^i(M, R) != 0 }; the two must agree.

#pragma once

#include "logres/hilbert.hpp"
#include "logres/presented.hpp"
#include "logres/resolution.hpp"

#include <vector>

namespace logres {

struct Invariants {
    int pdim = 0;
    int depth = 0;
    int dim = 0;     ///< Krull dimension (-1 for the zero module)
    bool nonzero = true;
};

/// pdim/depth/dim of a presented module.  cross_check re-derives depth from
/// the vanishing pattern of Ext^*(M, R).
Invariants module_invariants(const PresentedModule& M, bool cross_check = true);

/// Height of a proper ideal: nvars - dim(R/I).  The unit ideal is rejected.
int ideal_height(const RingPtr& R, const std::vector<Polynomial>& I);

/// Is R/I Cohen-Macaulay?  (dim == depth as an R-module.)
bool quotient_is_cm(const RingPtr& R, const std::vector<Polynomial>& I);

/// Is M maximal Cohen-Macaulay over R/I?  Requires Ann(M) to contain I
/// (checked); the test is depth_R(M) == dim(R/I), with the zero module
/// counted as MCM by convention.
bool is_mcm_over(const PresentedModule& M, const RingPtr& R,
                 const std::vector<Polynomial>& I);

/// Do the given homogeneous elements form a regular sequence?  For
/// quasi-homogeneous elements in the irrelevant maximal ideal this is
/// equivalent to height(ideal) == length, which is what is tested.
/// Zero or unit entries make the answer false.
bool is_regular_sequence(const RingPtr& R, const std::vector<Polynomial>& seq);

} // namespace logres

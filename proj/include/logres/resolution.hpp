/// @file resolution.hpp
/// @brief Minimal graded free resolutions and Betti tables.
///
/// The resolution is built by iterated syzygy computation.  At every level
/// the generating set is first thinned to a minimal one (degree-ascending
/// greedy sweep; sound by graded Nakayama over positive weights), which
/// forces all differential entries into the irrelevant maximal ideal —
/// minimality by construction, asserted rather than assumed.  Positive
/// grading also guarantees termination at the projective dimension.

#pragma once

#include "logres/presented.hpp"

#include <map>
#include <vector>

namespace logres {

struct Resolution {
    /// The resolved module (minimized presentation of the input).
    PresentedModule M;
    /// frees[0], frees[1], ..., frees[p]: the free modules of the complex.
    std::vector<FreeModule> frees;
    /// maps[i] (i >= 1): columns of the differential frees[i] -> frees[i-1];
    /// maps[0] is unused and left empty.
    std::vector<std::vector<Vec>> maps;

    int length() const { return (int)frees.size() - 1; } ///< projective dimension
};

/// Minimal free resolution of M.
Resolution minimal_resolution(const PresentedModule& M);

/// Betti numbers: (homological index i, internal degree d) -> rank.
using BettiTable = std::map<std::pair<int, Int>, int>;
BettiTable betti_table(const Resolution& res);

/// Total Betti numbers b_0..b_p.
std::vector<int> total_betti(const Resolution& res);

int projective_dimension(const PresentedModule& M);

} // namespace logres

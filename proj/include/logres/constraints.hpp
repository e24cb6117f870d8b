/// @file constraints.hpp
/// @brief Solver for membership-constrained submodules of a graded free
///        module: elements whose images under finitely many graded maps
///        land in prescribed submodules.

#pragma once

#include "logres/free_module.hpp"

#include <vector>

namespace logres {

/// One linear condition: the image of the variable element under a graded
/// map into `target` must lie in span(allowed).
struct ConditionBlock {
    FreeModule target;
    Int map_degree = 0;
    std::vector<Vec> images;  ///< image of each source basis element
    std::vector<Vec> allowed; ///< submodule of target
};

/// { a in source : every block maps a into its allowed span }, canonical
/// generators.  Computed as one preimage over the direct sum of the blocks;
/// the twist of a block's slot is shifted by the block's map degree so the
/// stacked map has degree zero.
std::vector<Vec> constrained_submodule(const FreeModule& source,
                                       const std::vector<ConditionBlock>& blocks);

} // namespace logres

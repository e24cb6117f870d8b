/// @file hom.hpp
/// @brief Hom modules with evaluation data, Ext via free resolutions,
///        and canonical (bi)duality maps.
///
/// Hom(A, B) for presented A, B is computed as a subquotient of the free
/// module of generator-assignment matrices: a candidate sends each
/// A-generator to an element of B's generator coordinates subject to
/// A's relations landing in B's relations; assignments that factor through
/// B's relations are the trivial ones and get quotiented away.  Every Hom
/// generator keeps its evaluation matrix, so composite canonical maps
/// (evaluation into a module of homomorphisms, biduality) are computable.

#pragma once

#include "logres/presented.hpp"
#include "logres/resolution.hpp"

#include <vector>

namespace logres {

/// Hom(A, B) with evaluation data.
struct HomModule {
    PresentedModule pm;    ///< abstract presentation of Hom(A, B)
    PresentedModule A, B;  ///< the arguments as given
    /// eval[g][j] in B.gens-coordinates: value of Hom-generator g on
    /// A-generator j.  deg eval[g][j] = pm gen degree g + A gen degree j.
    std::vector<std::vector<Vec>> eval;

    /// The homomorphism represented by coordinates `c` over pm's
    /// generators, as an explicit ModuleMap A -> B of degree deg(c).
    ModuleMap as_map(const Vec& coords) const;
};

HomModule hom_module(const PresentedModule& A, const PresentedModule& B);

/// Express an explicit homomorphism (one image per A-generator, uniform
/// degree shift) in the coordinates of hom_module(A, B); nullopt when the
/// candidate is not a homomorphism A -> B at all.
std::optional<Vec> hom_coords(const HomModule& H, const std::vector<Vec>& images);

/// Hom(M, I) for an ideal I of R, with values realized as honest ring
/// elements: the result is the submodule
///   { (a_1..a_t) : a_t in I(shift), relations of M annihilate a }
/// of R^t.  `shift` twists the target: I viewed inside R(-shift).  Used
/// for duals into twisted ideals where downstream code divides values by
/// ring elements.
struct HomIntoIdeal {
    FreeModule ambient;       ///< R^t with twists shift - (gen degree)
    std::vector<Vec> gens;    ///< canonical generators; component t = value on M-gen t
    PresentedModule pm;       ///< abstract presentation of the Hom module
};
HomIntoIdeal hom_into_ideal(const PresentedModule& M, const std::vector<Polynomial>& I,
                            Int shift);

/// Ext^i(A, B) computed from a minimal free resolution of A.
PresentedModule ext_module(int i, const PresentedModule& A, const PresentedModule& B);

/// All Ext^i(A, B) for 0 <= i <= pdim(A) in one sweep (index i of the
/// result; trailing entries are genuinely zero modules, not truncated).
std::vector<PresentedModule> ext_modules(const PresentedModule& A,
                                         const PresentedModule& B);

/// The canonical evaluation map A -> Hom(Hom(A, N), N).  Returns the map
/// together with the Hom-of-Hom module it lands in.
struct BidualityData {
    HomModule inner;  ///< Hom(A, N)
    HomModule outer;  ///< Hom(Hom(A, N), N)
    ModuleMap eval;   ///< A -> outer.pm
};
BidualityData biduality_map(const PresentedModule& A, const PresentedModule& N);

} // namespace logres

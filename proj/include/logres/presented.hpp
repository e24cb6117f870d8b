/// @file presented.hpp
/// @brief Finitely presented graded modules and their morphisms.
///
/// A PresentedModule is coker( relations : F1 -> F0 ): the module generated
/// by the basis of F0 subject to the listed relations.  F0's twists are the
/// generator degrees.  Submodules and subquotients of free modules are
/// turned into this shape via syzygy computations, after which kernels,
/// images, cokernels and homology of morphisms are all preimage problems.

#pragma once

#include "logres/module_ops.hpp"

#include <vector>

namespace logres {

// ======================= PRESENTED MODULES =======================

struct PresentedModule {
    FreeModule gens;           ///< F0; twists are the generator degrees
    std::vector<Vec> relations; ///< elements of `gens` presenting the module

    int ngens() const { return gens.rank(); }

    /// The free module R(-d1)+...+R(-dr) itself (no relations).
    static PresentedModule free_module(FreeModule F) { return {std::move(F), {}}; }

    /// Cyclic module R/I with generator in degree `shift` (i.e. (R/I)(-shift)).
    static PresentedModule cyclic(const RingPtr& R, const std::vector<Polynomial>& I,
                                  Int shift = 0);
};

/// A module given as span(gens) (or (span(gens)+span(den))/span(den)) inside
/// an ambient free module, together with its abstract presentation.  Keeps
/// the concrete realization so elements can be moved between the two views.
struct EmbeddedModule {
    FreeModule ambient;
    std::vector<Vec> gens;      ///< representatives inside `ambient`
    std::vector<Vec> den;       ///< denominator submodule (empty for plain submodules)
    PresentedModule pm;         ///< abstract presentation on `gens`

    /// Express v (an element of ambient lying in span(gens)+span(den)) in
    /// the presentation's generator coordinates; nullopt if not a member.
    std::optional<Vec> coords_of(const Vec& v) const;
};

/// Present span(gens) inside F by its syzygies.
EmbeddedModule present_submodule(const FreeModule& F, const std::vector<Vec>& gens);

/// Present (span(gens) + span(den)) / span(den).
EmbeddedModule present_subquotient(const FreeModule& F, const std::vector<Vec>& gens,
                                   const std::vector<Vec>& den);

/// Present (span(gens) + span(den)) / span(den) on exactly the given
/// generators, in the given order (no canonicalisation).  Use when
/// generator j of the presentation must stay identified with gens[j] —
/// e.g. to prescribe a homomorphism by one image per listed generator.
/// Generators must be nonzero and homogeneous.
EmbeddedModule present_subquotient_on(const FreeModule& F, const std::vector<Vec>& gens,
                                      const std::vector<Vec>& den);

/// Zero module test: every generator lies in the relation span.
bool is_zero_module(const PresentedModule& M);

/// Canonical normal-form data for membership mod relations.
GroebnerBasis relation_basis(const PresentedModule& M);

/// Minimal generating set of span(gens) modulo span(extra): degree-ascending
/// greedy sweep keeping an element iff it is not generated by those already
/// kept (graded Nakayama makes this a minimal generating set).
std::vector<Vec> prune_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                  const std::vector<Vec>& extra = {});

/// Cancel unit entries of the relation matrix and drop redundant relations
/// until the presentation is minimal (all entries in the irrelevant maximal
/// ideal, relations a minimal generating set of the relation module).
/// Only the isomorphism class survives; callers needing the original
/// generator identities must keep the unminimized presentation.
PresentedModule minimize_presentation(const PresentedModule& M);

// ======================= MORPHISMS =======================

/// Graded morphism src -> dst of uniform degree `degree`: generator j of
/// src maps to images[j] (coordinates over dst's generators), with
/// deg(images[j]) = src generator degree + degree.
struct ModuleMap {
    PresentedModule src;
    PresentedModule dst;
    std::vector<Vec> images; ///< one element of dst.gens per src generator
    Int degree = 0;

    /// The zero map.
    static ModuleMap zero(PresentedModule s, PresentedModule d, Int degree = 0);
};

/// Verify the images are homogeneous of uniform shift `degree` and that
/// every relation of src maps into the relation span of dst.
bool map_well_defined(const ModuleMap& f, std::string* why = nullptr);

ModuleMap compose(const ModuleMap& g, const ModuleMap& f); // g after f

/// Apply f to an element given in src generator coordinates.
Vec map_apply(const ModuleMap& f, const Vec& coords);

/// ker f as a module: gens embedded in src.gens, presented abstractly.
EmbeddedModule map_kernel(const ModuleMap& f);

/// im f as a subquotient of dst.
EmbeddedModule map_image(const ModuleMap& f);

PresentedModule map_cokernel(const ModuleMap& f);

/// ker(g)/im(f) for a composable pair with g o f = 0 (checked).
EmbeddedModule map_homology(const ModuleMap& f, const ModuleMap& g);

/// Both kernel and cokernel vanish.
bool is_isomorphism(const ModuleMap& f);

/// M/(J*M) — extend the relation list by J times each generator.
PresentedModule quotient_by_ideal(const PresentedModule& M,
                                  const std::vector<Polynomial>& J);

/// Annihilator ideal of a presented module (canonical generators).
std::vector<Polynomial> annihilator(const PresentedModule& M);

/// { v in M : J v = 0 } as a submodule of M: generators in M's coordinates
/// plus an abstract presentation.
EmbeddedModule kill_by_ideal(const PresentedModule& M, const std::vector<Polynomial>& J);

} // namespace logres

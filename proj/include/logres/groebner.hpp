/// @file groebner.hpp
/// @brief Groebner bases of submodules, division with quotients, syzygies.
///
/// The engine is a tracked Buchberger loop: every working element remembers
/// its expression in the input generators.  That single bookkeeping device
/// yields, besides the basis itself,
///   * lifts: write any member as a combination of the input generators,
///   * syzygies: S-pairs that reduce to zero record relations among the
///     inputs, and together with the rows of (Id - S*T) -- where T expresses
///     the basis in the generators and S the generators in the basis -- they
///     generate the full syzygy module (Schreyer's construction composed
///     with the change of generators).
///
/// No pair-skipping criteria are used: at the problem sizes this library
/// targets, processing every same-component pair is cheap and keeps the
/// syzygy completeness argument entirely elementary.
///
/// The returned basis is fully reduced (unit leading coefficients, no term
/// of any element divisible by another's leading term) and canonically
/// sorted, so equal submodules always produce byte-identical bases.

#pragma once

#include "logres/free_module.hpp"

#include <optional>
#include <vector>

namespace logres {

/// Result of dividing v by a list of elements: v = sum q_i d_i + rem,
/// no term of rem divisible by any leading term of the divisors.
struct Division {
    Vec rem;
    std::vector<Polynomial> quot;
};

/// Multivariate division with full tail reduction.  Divisors are tried in
/// list order, which makes the outcome deterministic; against a Groebner
/// basis the remainder is the canonical normal form.
Division divide(const Vec& v, const std::vector<Vec>& divisors);

/// Groebner basis of the submodule generated by `gens` inside F,
/// with transition data and (optionally) syzygies.
class GroebnerBasis {
public:
    /// Compute.  with_syzygies additionally assembles generators of
    /// Syz(gens) = { (a_1..a_s) : sum a_i gens_i = 0 }.
    ///
    /// gen_degrees, when given, fixes the twists of the syzygy ambient (one
    /// per generator).  This matters when a generator is zero: its degree
    /// cannot be read off the element, yet downstream twist bookkeeping
    /// needs it.  Nonzero generators must match the stated degree.
    GroebnerBasis(FreeModule F, std::vector<Vec> gens, bool with_syzygies = false,
                  std::optional<std::vector<Int>> gen_degrees = std::nullopt);

    const FreeModule& ambient() const { return F_; }
    const std::vector<Vec>& generators() const { return gens_; }

    /// The reduced Groebner basis, canonically sorted.
    const std::vector<Vec>& basis() const { return basis_; }

    /// basis()[j] = sum_i in_gens()[j][i] * generators()[i].
    const std::vector<std::vector<Polynomial>>& in_gens() const { return in_gens_; }

    /// Canonical normal form of v modulo the submodule.
    Vec normal_form(const Vec& v) const;

    bool contains(const Vec& v) const { return normal_form(v).is_zero(); }

    /// Write v as a combination of the *input generators*; nullopt when v
    /// is not in the submodule.
    std::optional<std::vector<Polynomial>> lift(const Vec& v) const;

    /// Ambient of the syzygy module: free module with one basis element per
    /// input generator, twisted by that generator's degree.
    const FreeModule& syzygy_ambient() const;

    /// Generators of Syz(gens); only available when requested at build time.
    const std::vector<Vec>& syzygies() const;

    bool is_zero_module() const { return basis_.empty(); }

private:
    FreeModule F_;
    std::vector<Vec> gens_;
    std::vector<Vec> basis_;
    std::vector<std::vector<Polynomial>> in_gens_;
    bool has_syz_ = false;
    FreeModule syz_ambient_;
    std::vector<Vec> syzygies_;
};

/// Reduced Groebner basis of a list of ideal generators (rank-1 shortcut).
/// Returns the basis as polynomials.
std::vector<Polynomial> ideal_groebner(const RingPtr& R,
                                       const std::vector<Polynomial>& gens);

/// Wrap ideal generators as elements of R^1 (twist 0).
std::vector<Vec> ideal_as_vecs(const RingPtr& R, const std::vector<Polynomial>& gens);

} // namespace logres

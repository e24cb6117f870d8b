/// @file approximation.hpp
/// @brief Modules squeezed between I*F and F: duals against twisted ideals,
///        the associated quotient complex, reflexivity, restriction, and the
///        depth-based freeness analysis.
///
/// Throughout, R is the graded polynomial ring, I a Gorenstein ideal of
/// height k >= 2 with R/I Cohen-Macaulay, F a graded free module, and M a
/// submodule with I*F <= M <= F.  The central objects are
///   W = M/(I*F)                 (a module over R/I),
///   M^I = Hom(M, I(-s))         (s = sum of the variable weights),
///   lambda : M^I -> F^dual      (extension of a dual along a nonzerodivisor),
///   V = coker(lambda),
///   alpha_bar : F^dual/(I*F^dual) -> V.
/// The exactness of 0 <- V <- F^dual <- M^I <- 0, the reflexivity of M, and
/// the depth behaviour of V and W tie the projective dimension of M to
/// maximal Cohen-Macaulayness; the functions here compute all of it with
/// explicit certificates.

#pragma once

#include "logres/hilbert.hpp"
#include "logres/hom.hpp"
#include "logres/invariants.hpp"
#include "logres/presented.hpp"

#include <string>
#include <vector>

namespace logres {

// ======================= CONTEXT =======================

/// A validated Gorenstein ideal of height >= 2 with CM quotient.
struct IContext {
    RingPtr R;
    std::vector<Polynomial> gens;     ///< generators as given
    std::vector<Polynomial> groebner; ///< canonical reduced basis
    int k = 0;                        ///< height = projective dimension of R/I
    Int omega_shift = 0;              ///< sum of weights: omega_R = R(-omega_shift)
    /// Twist of the last module in the minimal resolution of R/I (rank one
    /// by the Gorenstein check); omega_{R/I} = (R/I)(socle_twist - omega_shift).
    Int socle_twist = 0;
    std::vector<int> betti;           ///< total Betti numbers of R/I
    /// Homogeneous nonzerodivisors from I, ascending degree: the generators
    /// and their coefficient-one same-degree pairwise sums, each certified
    /// by a (0 : f) = 0 colon computation.  At least two are required.
    std::vector<Polynomial> nzd_choices;
};

/// Validate and package an ideal for approximation work.  Rejects k < 2
/// (classical territory), non-CM quotients, and non-Gorenstein ideals
/// (last Betti number != 1).
IContext make_context(const RingPtr& R, const std::vector<Polynomial>& gens);

// ======================= APPROXIMATIONS =======================

/// A module M with I*F <= M <= F, plus the derived quotient W = M/IF.
struct Approximation {
    IContext ctx;
    FreeModule F;
    std::vector<Vec> IF_gens;  ///< canonical generators of I*F
    EmbeddedModule M;          ///< span of the given generators inside F
    EmbeddedModule W;          ///< M/(I*F)
};

/// Validate I*F <= span(gens) and package.  Failure carries an explicit
/// witness element in the message.
Approximation make_approximation(const IContext& ctx, const FreeModule& F,
                                 const std::vector<Vec>& gens);

/// The canonical splitting identity: for a nonzerodivisor x in I, the map
/// m -> (x*m as an element of I*F, divided back by x) is the identity
/// embedding M -> F.  Verified for the two smallest nonzerodivisor choices.
struct KappaCertificate {
    Polynomial x1, x2;   ///< the two nonzerodivisors used
    bool identityimages; ///< every generator returned unchanged
    bool agrees;         ///< both choices produced the same images
};
KappaCertificate kappa(const Approximation& A);

// ======================= THE I-DUAL COMPLEX =======================

struct IDualData {
    HomIntoIdeal MI;                ///< Hom(M, I(-s)); values over M's generators
    FreeModule F_dual;              ///< twists s - F.tw[j]
    std::vector<Vec> lambda_images; ///< lambda of each MI generator, in F_dual
    ModuleMap lambda;               ///< MI.pm -> free(F_dual)
    PresentedModule V;              ///< coker(lambda): F_dual gens, lambda relations
    ModuleMap alpha_bar;            ///< F_dual/(I F_dual) -> V
    EmbeddedModule ker_alpha_bar;   ///< kernel of alpha_bar
    bool lambda_injective = false;
};

/// Build M^I, lambda, V and alpha_bar; the extension along both
/// nonzerodivisor choices must agree and the resulting sequence
/// 0 <- V <- F^dual <- M^I <- 0 must be exact (internal hard errors
/// otherwise -- these identities certify the kernel, not the input).
IDualData i_dual(const Approximation& A);

/// The canonical biduality map M -> (M^I)^I with its kernel/cokernel
/// verdicts.
struct ReflexivityCertificate {
    bool kernel_zero = false;
    bool cokernel_zero = false;
    bool reflexive = false;
};
ReflexivityCertificate is_i_reflexive(const Approximation& A, const IDualData& D);

/// The canonical pairing checks between W and V (duality against
/// omega_bar = (R/I)(-s)).  The forward map W -> Hom(V, omega_bar) is built
/// from coordinate evaluation; its isomorphism status must match
/// reflexivity of M.  The reverse inclusion nu: V -> Hom(W, omega_bar) is
/// always injective, and its cokernel vanishes exactly when Ext^k(M, R)
/// does (checked against SeriesCheck by callers).
struct PairingCheck {
    bool map_defined = false;   ///< every evaluation was a genuine hom
    bool well_defined = false;  ///< relations respected
    bool isomorphism = false;
    bool matches_reflexivity = false;
    bool nu_injective = false;      ///< V -> Hom(W, omega_bar) has zero kernel
    bool nu_cokernel_zero = false;  ///< ... and zero cokernel
};
PairingCheck w_to_hom_v_check(const Approximation& A, const IDualData& D,
                              const ReflexivityCertificate& refl);

/// Hilbert-series consistency of ker(alpha_bar) against Ext^{k-1}(M, R)
/// twisted by t^(omega_shift + socle_twist) — the graded form of the
/// identification through omega_{R/I} — plus the vanishing of Ext^k(M, R).
struct SeriesCheck {
    HilbertSeries ker_series;
    HilbertSeries ext_series_shifted;
    Int twist = 0;         ///< the shift applied to the Ext series
    bool equal = false;
    bool ext_k_zero = false;
};
SeriesCheck dual_kernel_series_check(const Approximation& A, const IDualData& D);

// ======================= RESTRICTION =======================

/// Restrict the approximation along a larger ideal J >= I with R/J
/// Cohen-Macaulay of the same dimension: M_J = (I*F :_M J).  The result is
/// again a valid approximation, and its quotient W_J is the J-torsion of W.
Approximation j_restrict(const Approximation& A, const std::vector<Polynomial>& J);

// ======================= FREENESS ANALYSIS =======================

struct FreenessAnalysis {
    int k = 0;
    Invariants m_inv;                ///< of the submodule M
    Invariants v_inv;                ///< of V
    bool v_mcm = false;              ///< V maximal Cohen-Macaulay over R/I (zero counts)
    bool w_mcm = false;              ///< W maximal Cohen-Macaulay over R/I
    bool alpha_bar_injective = false;
    bool reflexive = false;
    bool pdim_at_most_km1 = false;   ///< pdim(M) <= k-1
    bool biconditional_ok = false;   ///< (pdim <= k-1) == v_mcm
    bool upper_bound_ok = false;     ///< W MCM implies pdim(M) <= k
    bool lower_bound_ok = false;     ///< alpha_bar not injective implies pdim >= k-1
    bool free_verdict = false;       ///< pdim(M) == k-1 with all checks consistent
};

/// Run the depth analysis.  Preconditions (hypothesis errors otherwise):
/// W != 0 and M reflexive.
FreenessAnalysis freeness_analysis(const Approximation& A);

struct RestrictedAnalysis {
    Approximation restricted;
    FreenessAnalysis fa;
    bool restriction_reflexive = false; ///< reflexivity survives restriction
    PresentedModule omega_T;            ///< (I : J)/I, the dualizing module of R/J
};

/// j_restrict + freeness_analysis + the restricted dualizing module.
RestrictedAnalysis restricted_analysis(const Approximation& A,
                                       const std::vector<Polynomial>& J);

} // namespace logres

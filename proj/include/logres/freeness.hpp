/// @file freeness.hpp
/// @brief Freeness verdicts through two independent routes, the duality
///        certificate between regular forms and the Jacobian module, the
///        top-Ext series identity, and the per-degree analysis pipeline.

#pragma once

#include "logres/jacobian.hpp"

#include <vector>

namespace logres {

// ==== FREENESS ====

/// Verdict for the relative logarithmic module at q (k <= q < n).
/// Route A: pdim of the numerator equals k-1 (it is always >= k-1).
/// Route B: the Jacobian module is maximal Cohen-Macaulay over R/I_X.
/// The routes must agree; disagreement raises CheckError with a
/// machine-readable bundle.
struct FreenessRecord {
    int q = 0;
    int pdim = -1;                   ///< of the relative numerator
    std::vector<int> numerator_betti;
    bool lower_bound_ok = false;     ///< pdim >= k - 1
    Invariants jac_inv;              ///< of the Jacobian module
    bool jac_mcm = false;            ///< route B
    bool routes_agree = false;
    bool free_verdict = false;       ///< pdim == k - 1
};
FreenessRecord freeness_verdict(const LogGeometry& G, const LogFormModule& relative,
                                const JacobianModule& J);

// ==== DUALITY CERTIFICATE ====

/// The pairing-induced map from regular (q-k)-forms to
/// Hom(Jacobian module, (I_C : I_X)/I_C), checked to be a degree-zero
/// isomorphism; in the free case the reverse map (Jacobian into the dual of
/// the regular forms) is built and checked as well.
struct DualityCertificate {
    std::vector<Polynomial> colon_gens; ///< canonical generators of (I_C : I_X)
    EmbeddedModule omega_ring;          ///< (I_C : I_X)/I_C on those generators
    bool forward_defined = false;       ///< all pairing values gave genuine homs
    bool forward_iso = false;
    bool reverse_attempted = false;
    bool reverse_defined = false;
    bool reverse_iso = false;
    bool ok = false; ///< forward passes; reverse too when attempted
};
DualityCertificate duality_certificate(const LogGeometry& G, const JacobianModule& J,
                                       const RegularForms& W, bool attempt_reverse);

// ==== TOP EXT / SERIES IDENTITY ====

/// The graded dual-kernel series identity for the relative numerator
/// (Hilbert series of Ext^(k-1)(M, R), twisted, equals that of the kernel
/// of the reduced dual map), plus the top Ext vanishing and its predicted
/// equivalences: Ext^k(M, R) = 0 exactly in the free case, and exactly when
/// M is reflexive for its approximation.
struct TopDualStatus {
    SeriesCheck series;
    bool series_equal = false;
    bool ext_top_zero = false;
    bool reflexive = false;
    bool reflexive_matches = false; ///< reflexive == ext_top_zero
    bool matches_verdict = false;   ///< ext_top_zero == free verdict
};
TopDualStatus top_dual_status(const LogFormModule& relative, bool free_verdict);

// ==== PER-DEGREE PIPELINE ====

/// Which optional check families to run.
struct CheckSelection {
    bool freeness = true;
    bool duality = true;
    bool chains = true;   ///< containment chain, contraction duality, colon law
    bool ext_identity = true; ///< the top-Ext series identity
    bool residues = true; ///< residue sequence exactness
};

/// Everything computed for one form degree q.
struct QAnalysis {
    int q = 0;
    bool verdict_range = false; ///< k <= q < n
    LogFormModule log_c;        ///< along C
    LogFormModule log_x;        ///< along X relative to C
    MultiFieldModule der_c;
    MultiFieldModule der_x;
    bool chain_x_in_c = false;  ///< numerator(X) <= numerator(C)
    bool have_chains = false;
    SigmaDualCheck sigma_c;     ///< along-C forms vs along-C fields
    SigmaDualCheck sigma_x;     ///< relative forms vs along-X fields
    ColonLawCheck colon_law;
    bool have_regular = false;
    RegularForms regular;       ///< p = q - k
    bool have_jac = false;
    JacobianModule jac;
    bool have_residue_seq = false;
    ResidueSequenceCheck residue_seq;
    bool have_pairing = false;
    PairingStatus pairing;
    bool have_freeness = false;
    FreenessRecord freeness;
    bool have_duality = false;
    DualityCertificate duality;
    bool have_top_dual = false;
    TopDualStatus top_dual;
};

/// Run the full pipeline at one q (0 <= q <= n): log modules and field
/// modules always; regular forms, Jacobian, residues, pairing for q >= k;
/// freeness, duality, top-Ext for k <= q < n (duality also at q = n).
QAnalysis analyze_q(const LogGeometry& G, const FundamentalForm& FF, int q,
                    const CheckSelection& sel = {}, Int degree_bound = -1);

// ==== PRESENTATION INDEPENDENCE ====

/// Compare the analyses of the same subspace inside two different complete
/// intersections (same ring): tangent fields, Jacobian kernels, and the
/// freeness verdicts must agree; the Jacobian column spans (compared in a
/// twist-normalized common ambient) are reported informationally.
struct IndependenceReport {
    bool der_equal = false;
    bool kernel_equal = false;
    bool verdict_equal = false;
    bool image_equal = false; ///< informational
};
IndependenceReport compare_geometries(const LogGeometry& G1, const QAnalysis& A1,
                                      const LogGeometry& G2, const QAnalysis& A2);

} // namespace logres

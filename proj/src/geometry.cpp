/// @file geometry.cpp
/// @brief Validation pipeline for LogGeometry (see geometry.hpp).

#include "logres/geometry.hpp"

#include "logres/invariants.hpp"
#include "logres/module_ops.hpp"

#include <string>

namespace logres {

// ==== HELPERS ====

namespace {

/// Reduced-basis equality of two ideals given their canonical bases.
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] - b[i]).is_zero()) return false;
    return true;
}

} // namespace

// ==== MAKE_GEOMETRY ====

LogGeometry make_geometry(const RingPtr& R, const std::vector<Polynomial>& h,
                          const std::vector<Polynomial>& x_gens) {
    LogGeometry G;
    G.R = R;
    G.n = R->nvars();
    G.h = h;

    require_input(!h.empty(), "geometry requires at least one defining equation");
    for (size_t i = 0; i < h.size(); ++i) {
        require_input(!h[i].is_zero(),
                      "defining equation " + std::to_string(i + 1) + " is zero");
        require_input(h[i].is_homogeneous(),
                      "defining equation " + std::to_string(i + 1) +
                          " is not homogeneous for the given weights: " + h[i].to_string());
    }

    // Certificate 1: regular sequence.
    require_input(is_regular_sequence(R, h),
                  "not a regular sequence: the given equations cut out height < " +
                      std::to_string(h.size()));

    // Certificate 2: height restriction and Cohen-Macaulay data for I_C.
    // make_context enforces k >= 2 (height-one divisors are classical and out
    // of scope) and computes the duality bookkeeping for I_C.
    G.ctx = make_context(R, h);
    G.k = G.ctx.k;
    require_internal(G.k == (int)h.size(),
                     "regular sequence of length " + std::to_string(h.size()) +
                         " has height " + std::to_string(G.k));
    G.dim_cx = G.n - G.k;
    for (const Polynomial& hi : h) {
        Int d = 0;
        require_internal(hi.is_homogeneous(&d), "validated equation lost homogeneity");
        G.deg_h_total += d;
    }

    // Certificate 3: containment I_C <= I_X (empty x_gens means X = C).
    G.x_gens = x_gens.empty() ? h : x_gens;
    for (size_t i = 0; i < G.x_gens.size(); ++i) {
        require_input(!G.x_gens[i].is_zero(),
                      "subspace generator " + std::to_string(i + 1) + " is zero");
        require_input(G.x_gens[i].is_homogeneous(),
                      "subspace generator " + std::to_string(i + 1) +
                          " is not homogeneous for the given weights: " +
                          G.x_gens[i].to_string());
    }
    G.x_groebner = ideal_groebner(R, G.x_gens);
    require_input(!(G.x_groebner.size() == 1 && G.x_groebner[0].is_constant()),
                  "subspace ideal is the unit ideal");
    {
        GroebnerBasis xgb(FreeModule::trivial(R, 1), ideal_as_vecs(R, G.x_groebner));
        for (size_t i = 0; i < h.size(); ++i) {
            Vec v(FreeModule::trivial(R, 1));
            v.set(0, h[i]);
            require_input(xgb.contains(v),
                          "complete intersection is not contained in the subspace ideal; "
                          "witness: " + h[i].to_string());
        }
    }
    G.x_equals_c = same_ideal(G.x_groebner, G.ctx.groebner);

    // Certificate 4: R/I_X Cohen-Macaulay with the right projective dimension.
    {
        PresentedModule RX = PresentedModule::cyclic(R, G.x_groebner);
        Invariants inv = module_invariants(RX);
        G.x_pdim = inv.pdim;
        require_input(quotient_is_cm(R, G.x_groebner) && inv.pdim == G.k,
                      "subspace quotient is not Cohen-Macaulay of codimension " +
                          std::to_string(G.k) + ": pdim = " + std::to_string(inv.pdim) +
                          ", depth = " + std::to_string(inv.depth) +
                          ", dim = " + std::to_string(inv.dim));

        // Certificate 5: equal dimensions.
        require_input(inv.dim == G.dim_cx,
                      "dimension mismatch: subspace has dimension " +
                          std::to_string(inv.dim) + " but the complete intersection has " +
                          std::to_string(G.dim_cx));

        Resolution res = minimal_resolution(RX);
        G.x_betti = total_betti(res);
    }

    // Certificate 6: C reduced, via the generic-smoothness criterion.
    // The coefficients of dh_1 ^ ... ^ dh_k on the basis k-forms are exactly
    // the k x k minors of the Jacobian matrix of h; each is cross-checked
    // against an independent cofactor-expansion determinant.
    G.dh = dh_wedge(R, h);
    {
        const FreeModule& Fk = G.dh.ambient();
        auto tuples = index_tuples(G.n, G.k);
        require_internal((int)tuples.size() == Fk.rank(), "basis enumeration mismatch");
        for (size_t t = 0; t < tuples.size(); ++t) {
            Polynomial direct = jacobian_minor(R, h, tuples[t]);
            require_internal((G.dh[(int)t] - direct).is_zero(),
                             "wedge coefficient disagrees with the cofactor determinant");
            if (!direct.is_zero()) G.jac_minors.push_back(direct);
        }
    }
    {
        std::vector<Polynomial> sing = h;
        sing.insert(sing.end(), G.jac_minors.begin(), G.jac_minors.end());
        std::vector<Polynomial> sgb = ideal_groebner(R, sing);
        if (sgb.size() == 1 && sgb[0].is_constant())
            G.singular_height = G.n + 1; // empty singular locus
        else
            G.singular_height = ideal_height(R, sgb);
        require_input(G.singular_height > G.k,
                      "complete intersection is not reduced: the Jacobian minors "
                      "together with the equations have height " +
                          std::to_string(G.singular_height) + " <= " + std::to_string(G.k));
    }

    G.x_reduced_asserted = true;
    return G;
}

} // namespace logres

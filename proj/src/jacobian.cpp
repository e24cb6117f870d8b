/// @file jacobian.cpp
/// @brief Jacobian module construction and the duality pairing checks.

#include "logres/jacobian.hpp"

#include "logres/exterior.hpp"
#include "logres/module_ops.hpp"
#include "logres/presented.hpp"

#include <string>
#include <utility>

namespace logres {

JacobianModule jacobian_module(const LogGeometry& G, const FundamentalForm& FF,
                               int q) {
    require_input(G.k <= q && q <= G.n, "Jacobian module needs k <= q <= n");
    const RingPtr& R = G.R;
    JacobianModule J;
    J.q = q;
    {
        Int ad = 0;
        require_internal(FF.alpha.is_homogeneous(&ad), "fundamental form not homogeneous");
        J.alpha_degree = ad;
    }
    J.source = fields_module(R, q);
    J.source_tuples = index_tuples(G.n, q);
    J.target_tuples = index_tuples(G.n, q - G.k);

    std::vector<Int> twists;
    for (const auto& t : J.target_tuples)
        twists.push_back(-tuple_weight(*R, t) - J.alpha_degree);
    J.target = FreeModule(R, twists);

    // Column for the basis field on j: slot i carries the dx_j-coefficient
    // of alpha ^ dx_i.
    std::vector<Vec> wedges = alpha_wedge_basis(G, FF.alpha, q);
    for (const auto& jt : J.source_tuples) {
        int jr = tuple_rank(G.n, jt);
        Vec col(J.target);
        for (int i = 0; i < J.target.rank(); ++i)
            if (!wedges[i][jr].is_zero()) col.set(i, wedges[i][jr]);
        J.columns.push_back(std::move(col));
    }

    std::vector<Vec> ixt = ideal_times_free(J.target, G.x_groebner);
    std::vector<Vec> gens;
    for (int s = 0; s < static_cast<int>(J.columns.size()); ++s) {
        if (J.columns[s].is_zero()) continue;
        J.gen_index.push_back(s);
        gens.push_back(J.columns[s]);
    }
    J.em = present_subquotient_on(J.target, gens, ixt);

    J.kernel_num = preimage(J.source, J.columns, ixt);
    J.mod_x_injective = submodule_equal(
        J.source, J.kernel_num, ideal_times_free(J.source, G.x_groebner));

    if (G.x_equals_c && q == G.k) {
        J.minors_checked = true;
        // target has rank 1 here; compare the column ideal with the ideal
        // of maximal Jacobian minors, both taken modulo I_X.
        std::vector<Vec> a = gens, b;
        for (const Polynomial& m : G.jac_minors) {
            Vec v(J.target);
            v.set(0, m);
            b.push_back(std::move(v));
        }
        for (const Vec& v : ixt) {
            a.push_back(v);
            b.push_back(v);
        }
        J.minors_match = submodule_equal(J.target, a, b);
    }
    return J;
}

PairingStatus pairing_status(const LogGeometry& G, const JacobianModule& J,
                             const RegularForms& W) {
    require_input(J.q == W.p + G.k, "pairing degrees disagree: q != p + k");
    const RingPtr& R = G.R;
    PairingStatus st;
    std::vector<Polynomial> colon = colon_ideal(R, G.ctx.groebner, G.x_groebner);
    GroebnerBasis colon_basis(FreeModule::trivial(R, 1), ideal_as_vecs(R, colon));
    GroebnerBasis ic_basis(FreeModule::trivial(R, 1),
                           ideal_as_vecs(R, G.ctx.groebner));

    auto scalar = [&R](const Polynomial& p) {
        Vec v(FreeModule::trivial(R, 1));
        if (!p.is_zero()) v.set(0, p);
        return v;
    };

    st.values_in_colon = true;
    for (const auto& jt : J.source_tuples) {
        Vec delta = Vec::basis(fields_module(R, J.q), tuple_rank(G.n, jt));
        for (const Vec& xi : W.gen_forms)
            if (!colon_basis.contains(scalar(contract(delta, xi))))
                st.values_in_colon = false;
    }

    st.kernel_kills = true;
    for (const Vec& delta : J.kernel_num)
        for (const Vec& xi : W.gen_forms)
            if (!ic_basis.contains(scalar(contract(delta, xi))))
                st.kernel_kills = false;

    st.ok = st.values_in_colon && st.kernel_kills;
    return st;
}

} // namespace logres

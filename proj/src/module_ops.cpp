/// @file module_ops.cpp
/// @brief Submodule arithmetic built on the tracked Groebner engine.

#include "logres/module_ops.hpp"

namespace logres {

std::vector<Vec> reduced_gens(const FreeModule& F, const std::vector<Vec>& gens) {
    GroebnerBasis gb(F, gens);
    return gb.basis();
}

bool submodule_contains(const FreeModule& F, const std::vector<Vec>& super,
                        const std::vector<Vec>& sub) {
    GroebnerBasis gb(F, super);
    for (const auto& v : sub)
        if (!gb.contains(v)) return false;
    return true;
}

bool submodule_equal(const FreeModule& F, const std::vector<Vec>& a,
                     const std::vector<Vec>& b) {
    // reduced bases are canonical, so equality is basis equality
    return reduced_gens(F, a) == reduced_gens(F, b);
}

Vec combine(const std::vector<Vec>& cols, const std::vector<Polynomial>& coords) {
    require_internal(cols.size() == coords.size() && !cols.empty(),
                     "combine: column/coordinate mismatch");
    Vec acc(cols.front().ambient());
    for (size_t l = 0; l < cols.size(); ++l) acc += cols[l].scaled(coords[l]);
    return acc;
}

std::vector<Vec> preimage(const FreeModule& source, const std::vector<Vec>& cols,
                          const std::vector<Vec>& target) {
    require_internal(cols.size() == (size_t)source.rank(),
                     "preimage: one column per source basis element required");
    if (cols.empty()) return {};
    const FreeModule& G = cols.front().ambient();
    std::vector<Vec> all = cols;
    std::vector<Int> degrees = source.twists;
    for (const auto& t : target) {
        if (t.is_zero()) continue;
        Int d = 0;
        require_input(t.is_homogeneous(&d), "preimage: non-homogeneous target");
        all.push_back(t);
        degrees.push_back(d);
    }
    GroebnerBasis gb(G, all, /*with_syzygies=*/true, degrees);
    std::vector<Vec> out;
    for (const auto& z : gb.syzygies()) {
        Vec u(source);
        bool nonzero = false;
        for (int l = 0; l < source.rank(); ++l) {
            u.set(l, z[l]);
            nonzero = nonzero || !z[l].is_zero();
        }
        if (nonzero) out.push_back(std::move(u));
    }
    return reduced_gens(source, out);
}

std::vector<Vec> kernel_of_map(const FreeModule& source, const std::vector<Vec>& cols) {
    return preimage(source, cols, {});
}

std::vector<Vec> intersect_submodules(const FreeModule& F, const std::vector<Vec>& a,
                                      const std::vector<Vec>& b) {
    // syzygies of [a | b]: the a-part of each relation lands in the
    // intersection, and all of the intersection arises this way.
    std::vector<Vec> all;
    size_t a_count = 0;
    for (const auto& v : a)
        if (!v.is_zero()) { all.push_back(v); ++a_count; }
    for (const auto& v : b)
        if (!v.is_zero()) all.push_back(v);
    if (a_count == 0 || a_count == all.size()) return {};
    std::vector<Int> degrees;
    for (const auto& v : all) {
        Int d = 0;
        require_input(v.is_homogeneous(&d),
                      "intersection: generators must be homogeneous");
        degrees.push_back(d);
    }
    GroebnerBasis gb(F, all, /*with_syzygies=*/true, degrees);
    std::vector<Vec> out;
    for (const auto& z : gb.syzygies()) {
        Vec w(F);
        for (size_t l = 0; l < a_count; ++l) w += all[l].scaled(z[l]);
        if (!w.is_zero()) out.push_back(std::move(w));
    }
    return reduced_gens(F, out);
}

std::vector<Vec> colon_by_element(const FreeModule& F, const std::vector<Vec>& N,
                                  const Polynomial& f) {
    require_input(!f.is_zero(), "colon by the zero element");
    Int fd = 0;
    require_input(f.is_homogeneous(&fd), "colon by a non-homogeneous element");
    // source = F twisted so that v -> f*v is degree 0
    FreeModule source = F.shifted(-fd);
    std::vector<Vec> cols;
    for (int j = 0; j < F.rank(); ++j) cols.push_back(Vec::basis(F, j).scaled(f));
    std::vector<Vec> pre = preimage(source, cols, N);
    // reinterpret coordinates as honest elements of F
    std::vector<Vec> out;
    for (const auto& u : pre) {
        Vec w(F);
        for (int j = 0; j < F.rank(); ++j) w.set(j, u[j]);
        out.push_back(std::move(w));
    }
    return reduced_gens(F, out);
}

std::vector<Vec> colon_submodule(const FreeModule& F, const std::vector<Vec>& N,
                                 const std::vector<Polynomial>& J) {
    require_input(!J.empty(), "colon by the zero ideal");
    std::vector<Vec> acc;
    bool first = true;
    for (const auto& f : J) {
        std::vector<Vec> c = colon_by_element(F, N, f);
        acc = first ? c : intersect_submodules(F, acc, c);
        first = false;
    }
    return acc;
}

std::vector<Vec> colon_submodule_within(const FreeModule& F, const std::vector<Vec>& N,
                                        const std::vector<Polynomial>& J,
                                        const std::vector<Vec>& M) {
    return intersect_submodules(F, colon_submodule(F, N, J), M);
}

std::vector<Polynomial> colon_ideal(const RingPtr& R, const std::vector<Polynomial>& I,
                                    const std::vector<Polynomial>& J) {
    FreeModule F = FreeModule::trivial(R, 1);
    std::vector<Vec> res = colon_submodule(F, ideal_as_vecs(R, I), J);
    std::vector<Polynomial> out;
    for (const auto& v : res) out.push_back(v[0]);
    return out;
}

std::vector<Polynomial> intersect_ideals(const RingPtr& R, const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b) {
    FreeModule F = FreeModule::trivial(R, 1);
    std::vector<Vec> res =
        intersect_submodules(F, ideal_as_vecs(R, a), ideal_as_vecs(R, b));
    std::vector<Polynomial> out;
    for (const auto& v : res) out.push_back(v[0]);
    return out;
}

std::pair<std::vector<Vec>, int> saturate_by_element(const FreeModule& F,
                                                     const std::vector<Vec>& N,
                                                     const Polynomial& f) {
    std::vector<Vec> cur = reduced_gens(F, N);
    int steps = 0;
    for (;;) {
        std::vector<Vec> next = colon_by_element(F, cur, f);
        if (next == cur) return {cur, steps};
        cur = std::move(next);
        ++steps;
        require_internal(steps < 4096, "saturation failed to stabilize");
    }
}

bool is_nzd_on_quotient(const FreeModule& F, const std::vector<Vec>& N,
                        const Polynomial& f) {
    return colon_by_element(F, N, f) == reduced_gens(F, N);
}

std::vector<Vec> ideal_times_free(const FreeModule& F, const std::vector<Polynomial>& I) {
    std::vector<Vec> out;
    for (int j = 0; j < F.rank(); ++j)
        for (const auto& f : I)
            if (!f.is_zero()) out.push_back(Vec::basis(F, j).scaled(f));
    return out;
}

std::vector<Vec> ideal_times_span(const std::vector<Polynomial>& I,
                                  const std::vector<Vec>& gens) {
    std::vector<Vec> out;
    for (const auto& g : gens)
        for (const auto& f : I)
            if (!f.is_zero() && !g.is_zero()) out.push_back(g.scaled(f));
    return out;
}

} // namespace logres

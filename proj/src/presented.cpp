/// @file presented.cpp
/// @brief Presented modules, subquotients, and morphism arithmetic.

#include "logres/presented.hpp"

#include <algorithm>

namespace logres {

PresentedModule PresentedModule::cyclic(const RingPtr& R,
                                        const std::vector<Polynomial>& I, Int shift) {
    FreeModule F(R, {shift});
    PresentedModule M{F, {}};
    for (const auto& f : I) {
        if (f.is_zero()) continue;
        Vec v(F);
        v.set(0, f);
        M.relations.push_back(std::move(v));
    }
    return M;
}

std::optional<Vec> EmbeddedModule::coords_of(const Vec& v) const {
    std::vector<Vec> all = gens;
    all.insert(all.end(), den.begin(), den.end());
    GroebnerBasis gb(ambient, all);
    auto lifted = gb.lift(v);
    if (!lifted) return std::nullopt;
    Vec coords(pm.gens);
    for (size_t j = 0; j < gens.size(); ++j) coords.set((int)j, (*lifted)[j]);
    return coords;
}

EmbeddedModule present_submodule(const FreeModule& F, const std::vector<Vec>& gens) {
    return present_subquotient(F, gens, {});
}

EmbeddedModule present_subquotient(const FreeModule& F, const std::vector<Vec>& gens,
                                   const std::vector<Vec>& den) {
    // canonical generator representatives: reduced basis of the numerator
    return present_subquotient_on(F, reduced_gens(F, gens), den);
}

EmbeddedModule present_subquotient_on(const FreeModule& F, const std::vector<Vec>& gens,
                                      const std::vector<Vec>& den) {
    EmbeddedModule E;
    E.ambient = F;
    E.den = reduced_gens(F, den);
    E.gens = gens;
    std::vector<Int> degrees = element_degrees(E.gens, "subquotient generators");
    E.pm.gens = FreeModule(F.ring, degrees);
    E.pm.relations = preimage(E.pm.gens, E.gens, E.den);
    return E;
}

bool is_zero_module(const PresentedModule& M) {
    if (M.ngens() == 0) return true;
    GroebnerBasis gb = relation_basis(M);
    for (int j = 0; j < M.ngens(); ++j)
        if (!gb.contains(Vec::basis(M.gens, j))) return false;
    return true;
}

GroebnerBasis relation_basis(const PresentedModule& M) {
    return GroebnerBasis(M.gens, M.relations);
}

std::vector<Vec> prune_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                  const std::vector<Vec>& extra) {
    // stable sort by (degree, appearance order) — degree-ascending greedy is
    // what makes graded Nakayama applicable.
    std::vector<size_t> order(gens.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<Int> deg(gens.size(), 0);
    for (size_t i = 0; i < gens.size(); ++i)
        if (!gens[i].is_zero()) {
            require_input(gens[i].is_homogeneous(&deg[i]),
                          "prune: non-homogeneous generator");
        }
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return deg[a] < deg[b]; });

    std::vector<Vec> kept = extra;
    std::vector<Vec> out;
    for (size_t idx : order) {
        const Vec& g = gens[idx];
        if (g.is_zero()) continue;
        if (!kept.empty()) {
            GroebnerBasis gb(F, kept);
            if (gb.contains(g)) continue;
        }
        kept.push_back(g);
        out.push_back(g);
    }
    return out;
}

PresentedModule minimize_presentation(const PresentedModule& M) {
    // Work on a mutable copy of the relation matrix; rows = generators.
    std::vector<Int> gen_deg = M.gens.twists;
    std::vector<Vec> rels = M.relations;
    const RingPtr& R = M.gens.ring;

    auto rebuild_ambient = [&]() { return FreeModule(R, gen_deg); };

    for (;;) {
        // find a unit entry; pivot rule: lowest generator degree, then
        // lowest (row, column) — any fixed rule gives a deterministic result.
        int prow = -1, pcol = -1;
        for (size_t c = 0; c < rels.size(); ++c) {
            for (int r = 0; r < (int)gen_deg.size(); ++r) {
                const Polynomial& e = rels[c][r];
                if (e.is_zero() || !e.is_constant()) continue;
                if (prow < 0 || gen_deg[r] < gen_deg[prow] ||
                    (gen_deg[r] == gen_deg[prow] &&
                     (r < prow || (r == prow && (int)c < pcol)))) {
                    prow = r;
                    pcol = (int)c;
                }
            }
        }
        if (prow < 0) break;

        // column operations: clear row prow from every other column
        Rat kappa = rels[pcol][prow].leading().coeff;
        for (size_t c = 0; c < rels.size(); ++c) {
            if ((int)c == pcol) continue;
            const Polynomial& e = rels[c][prow];
            if (e.is_zero()) continue;
            rels[c] -= rels[pcol].scaled(e.scaled(Rat(1) / kappa));
        }
        // drop generator prow and relation pcol
        std::vector<Int> new_deg;
        for (int r = 0; r < (int)gen_deg.size(); ++r)
            if (r != prow) new_deg.push_back(gen_deg[r]);
        FreeModule newF(R, new_deg);
        std::vector<Vec> new_rels;
        for (size_t c = 0; c < rels.size(); ++c) {
            if ((int)c == pcol) continue;
            Vec v(newF);
            int rr = 0;
            for (int r = 0; r < (int)gen_deg.size(); ++r) {
                if (r == prow) continue;
                v.set(rr++, rels[c][r]);
            }
            new_rels.push_back(std::move(v));
        }
        gen_deg = std::move(new_deg);
        rels = std::move(new_rels);
    }

    FreeModule F = rebuild_ambient();
    // drop zero relations, then thin to a minimal generating set of the
    // relation module so the presentation is minimal in both slots.
    std::vector<Vec> nonzero;
    for (auto& v : rels)
        if (!v.is_zero()) nonzero.push_back(std::move(v));
    std::vector<Vec> minimal = prune_generators(F, nonzero);
    return {F, std::move(minimal)};
}

// ======================= MORPHISMS =======================

ModuleMap ModuleMap::zero(PresentedModule s, PresentedModule d, Int degree) {
    ModuleMap f;
    f.images.assign(s.ngens(), Vec(d.gens));
    f.src = std::move(s);
    f.dst = std::move(d);
    f.degree = degree;
    return f;
}

bool map_well_defined(const ModuleMap& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if ((int)f.images.size() != f.src.ngens())
        return fail("one image per source generator required");
    for (size_t j = 0; j < f.images.size(); ++j) {
        Int d = 0;
        if (!f.images[j].is_homogeneous(&d))
            return fail("image " + std::to_string(j) + " is not homogeneous");
        if (!f.images[j].is_zero() && d != f.src.gens.twists[j] + f.degree)
            return fail("image " + std::to_string(j) + " has degree " +
                        std::to_string(d) + ", expected " +
                        std::to_string(f.src.gens.twists[j] + f.degree));
    }
    GroebnerBasis dst_rels(f.dst.gens, f.dst.relations);
    for (size_t l = 0; l < f.src.relations.size(); ++l) {
        Vec img(f.dst.gens);
        for (int j = 0; j < f.src.ngens(); ++j)
            img += f.images[j].scaled(f.src.relations[l][j]);
        if (!dst_rels.contains(img))
            return fail("relation " + std::to_string(l) +
                        " does not map into the target relations");
    }
    return true;
}

Vec map_apply(const ModuleMap& f, const Vec& coords) {
    require_internal(coords.ambient() == f.src.gens, "map_apply: wrong coordinates");
    Vec out(f.dst.gens);
    for (int j = 0; j < f.src.ngens(); ++j) out += f.images[j].scaled(coords[j]);
    return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
    require_internal(f.dst.gens == g.src.gens, "compose: middle modules differ");
    ModuleMap h;
    h.src = f.src;
    h.dst = g.dst;
    h.degree = f.degree + g.degree;
    for (const auto& img : f.images) h.images.push_back(map_apply(g, img));
    return h;
}

namespace {

/// Shift source twists so a degree-d map becomes degree-0; kernel gens etc.
/// computed in shifted coordinates are re-twisted back at the end.  Since
/// all downstream consumers only use degrees through ambients we simply do
/// the preimage computations with columns whose stated degree includes the
/// map degree.
FreeModule shifted_source(const PresentedModule& src, Int degree) {
    FreeModule F = src.gens;
    for (auto& t : F.twists) t += degree;
    return F;
}

} // namespace

EmbeddedModule map_kernel(const ModuleMap& f) {
    // { v in src.gens : f(v) in span(dst.relations) }, then mod src.relations
    std::vector<Vec> K =
        preimage(shifted_source(f.src, f.degree), f.images, f.dst.relations);
    // reinterpret in the untwisted source ambient
    std::vector<Vec> K0;
    for (const auto& u : K) {
        Vec w(f.src.gens);
        for (int j = 0; j < f.src.ngens(); ++j) w.set(j, u[j]);
        K0.push_back(std::move(w));
    }
    // src.relations are contained in the kernel automatically; lump them in
    // so the subquotient denominators are the relations themselves.
    K0.insert(K0.end(), f.src.relations.begin(), f.src.relations.end());
    return present_subquotient(f.src.gens, K0, f.src.relations);
}

EmbeddedModule map_image(const ModuleMap& f) {
    return present_subquotient(f.dst.gens, f.images, f.dst.relations);
}

PresentedModule map_cokernel(const ModuleMap& f) {
    PresentedModule M = f.dst;
    for (const auto& v : f.images)
        if (!v.is_zero()) M.relations.push_back(v);
    return M;
}

EmbeddedModule map_homology(const ModuleMap& f, const ModuleMap& g) {
    require_internal(f.dst.gens == g.src.gens, "homology: maps not composable");
    // g o f must vanish into span(g.dst.relations)
    ModuleMap gf = compose(g, f);
    GroebnerBasis end_rels(g.dst.gens, g.dst.relations);
    for (const auto& img : gf.images)
        require_internal(end_rels.contains(img), "homology: g o f is not zero");

    std::vector<Vec> K =
        preimage(shifted_source(g.src, g.degree), g.images, g.dst.relations);
    std::vector<Vec> K0;
    for (const auto& u : K) {
        Vec w(g.src.gens);
        for (int j = 0; j < g.src.ngens(); ++j) w.set(j, u[j]);
        K0.push_back(std::move(w));
    }
    K0.insert(K0.end(), g.src.relations.begin(), g.src.relations.end());

    std::vector<Vec> den = f.images;
    den.insert(den.end(), g.src.relations.begin(), g.src.relations.end());
    return present_subquotient(g.src.gens, K0, den);
}

bool is_isomorphism(const ModuleMap& f) {
    if (!map_well_defined(f)) return false;
    return is_zero_module(map_kernel(f).pm) && is_zero_module(map_cokernel(f));
}

PresentedModule quotient_by_ideal(const PresentedModule& M,
                                  const std::vector<Polynomial>& J) {
    PresentedModule out = M;
    for (const auto& f : J) {
        if (f.is_zero()) continue;
        for (int j = 0; j < M.ngens(); ++j)
            out.relations.push_back(Vec::basis(M.gens, j).scaled(f));
    }
    return out;
}

std::vector<Polynomial> annihilator(const PresentedModule& M) {
    const RingPtr& R = M.gens.ring;
    if (M.ngens() == 0) return {Polynomial(R, Rat(1))};
    std::vector<Polynomial> acc;
    bool first = true;
    for (int j = 0; j < M.ngens(); ++j) {
        // { f : f e_j in span(relations) }: preimage along R -> M.gens, 1 -> e_j
        FreeModule source(R, {M.gens.twists[j]});
        std::vector<Vec> pre =
            preimage(source, {Vec::basis(M.gens, j)}, M.relations);
        std::vector<Polynomial> ann_j;
        for (const auto& u : pre) ann_j.push_back(u[0]);
        acc = first ? ann_j : intersect_ideals(R, acc, ann_j);
        first = false;
        if (acc.empty()) return {}; // zero ideal; no later colon can grow it
    }
    return ideal_groebner(R, acc);
}

EmbeddedModule kill_by_ideal(const PresentedModule& M, const std::vector<Polynomial>& J) {
    std::vector<Vec> K = colon_submodule(M.gens, M.relations, J);
    K.insert(K.end(), M.relations.begin(), M.relations.end());
    return present_subquotient(M.gens, K, M.relations);
}

} // namespace logres

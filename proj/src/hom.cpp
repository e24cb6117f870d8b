/// @file hom.cpp
/// @brief Hom modules, Ext, and canonical evaluation maps.

#include "logres/hom.hpp"

namespace logres {

namespace {

/// Flatten a generator-assignment matrix (one image per A-generator) into
/// the unknown-space vector; index (j, i) -> j*t0 + i (A-major).
Vec flatten_assignment(const FreeModule& U, const std::vector<Vec>& images, int t0) {
    Vec u(U);
    for (size_t j = 0; j < images.size(); ++j)
        for (int i = 0; i < t0; ++i) u.set((int)j * t0 + i, images[j][i]);
    return u;
}

} // namespace

ModuleMap HomModule::as_map(const Vec& coords) const {
    require_internal(coords.ambient() == pm.gens, "hom coordinates in wrong module");
    ModuleMap f;
    f.src = A;
    f.dst = B;
    Int d = 0;
    coords.is_homogeneous(&d);
    f.degree = d;
    for (int j = 0; j < A.ngens(); ++j) {
        Vec img(B.gens);
        for (size_t g = 0; g < eval.size(); ++g)
            img += eval[g][j].scaled(coords[(int)g]);
        f.images.push_back(std::move(img));
    }
    return f;
}

HomModule hom_module(const PresentedModule& A, const PresentedModule& B) {
    const RingPtr& R = A.gens.ring;
    const int s0 = A.ngens();
    const int t0 = B.ngens();

    HomModule H;
    H.A = A;
    H.B = B;

    // unknown space: one slot per (A-generator j, B-generator i)
    std::vector<Int> utw(s0 * t0, 0);
    for (int j = 0; j < s0; ++j)
        for (int i = 0; i < t0; ++i)
            utw[j * t0 + i] = B.gens.twists[i] - A.gens.twists[j];
    FreeModule U(R, utw);

    // candidates: assignments sending every A-relation into span(B.relations)
    std::vector<Vec> P;
    const int r1 = (int)A.relations.size();
    if (r1 == 0 || t0 == 0) {
        for (int u = 0; u < U.rank(); ++u) P.push_back(Vec::basis(U, u));
    } else {
        // constraint target: one B.gens block per A-relation, shifted so the
        // constraint map is degree-0
        std::vector<Int> gtw;
        std::vector<Int> rel_deg;
        for (const auto& rel : A.relations) {
            Int d = 0;
            require_input(rel.is_homogeneous(&d) && !rel.is_zero(),
                          "hom: non-homogeneous or zero relation");
            rel_deg.push_back(d);
            for (int i = 0; i < t0; ++i) gtw.push_back(B.gens.twists[i] - d);
        }
        FreeModule G(R, gtw);
        std::vector<Vec> cols;
        cols.reserve(U.rank());
        for (int j = 0; j < s0; ++j)
            for (int i = 0; i < t0; ++i) {
                Vec c(G);
                for (int l = 0; l < r1; ++l) c.set(l * t0 + i, A.relations[l][j]);
                cols.push_back(std::move(c));
            }
        std::vector<Vec> target;
        for (int l = 0; l < r1; ++l)
            for (const auto& rho : B.relations) {
                Vec v(G);
                for (int i = 0; i < t0; ++i) v.set(l * t0 + i, rho[i]);
                if (!v.is_zero()) target.push_back(std::move(v));
            }
        P = preimage(U, cols, target);
    }

    // trivial assignments: B-relations placed in a single A-slot
    std::vector<Vec> T;
    for (int j = 0; j < s0; ++j)
        for (const auto& rho : B.relations) {
            Vec v(U);
            for (int i = 0; i < t0; ++i) v.set(j * t0 + i, rho[i]);
            if (!v.is_zero()) T.push_back(std::move(v));
        }

    // Hom = (span P + span T)/span T with a minimal generating set
    std::vector<Vec> gens = prune_generators(U, P, T);
    std::vector<Int> gdeg = element_degrees(gens, "hom generators");
    H.pm.gens = FreeModule(R, gdeg);
    H.pm.relations = preimage(H.pm.gens, gens, T);

    for (const auto& g : gens) {
        std::vector<Vec> mat;
        mat.reserve(s0);
        for (int j = 0; j < s0; ++j) {
            Vec col(B.gens);
            for (int i = 0; i < t0; ++i) col.set(i, g[j * t0 + i]);
            mat.push_back(std::move(col));
        }
        H.eval.push_back(std::move(mat));
    }

    // paranoia: each generator's evaluation matrix is a well-defined map
    for (size_t g = 0; g < H.eval.size(); ++g) {
        ModuleMap f;
        f.src = A;
        f.dst = B;
        f.images = H.eval[g];
        f.degree = gdeg[g];
        std::string why;
        require_internal(map_well_defined(f, &why),
                         "hom generator fails its own relations: " + why);
    }
    return H;
}

std::optional<Vec> hom_coords(const HomModule& H, const std::vector<Vec>& images) {
    const int s0 = H.A.ngens();
    const int t0 = H.B.ngens();
    require_internal((int)images.size() == s0, "hom_coords: one image per generator");

    // rebuild the unknown-space picture of the Hom module
    std::vector<Int> utw(s0 * t0, 0);
    for (int j = 0; j < s0; ++j)
        for (int i = 0; i < t0; ++i)
            utw[j * t0 + i] = H.B.gens.twists[i] - H.A.gens.twists[j];
    FreeModule U(H.A.gens.ring, utw);

    std::vector<Vec> basis_list; // Hom generators as U-vectors, then trivials
    for (const auto& mat : H.eval) basis_list.push_back(flatten_assignment(U, mat, t0));
    const size_t ngen = basis_list.size();
    for (int j = 0; j < s0; ++j)
        for (const auto& rho : H.B.relations) {
            Vec v(U);
            for (int i = 0; i < t0; ++i) v.set(j * t0 + i, rho[i]);
            if (!v.is_zero()) basis_list.push_back(std::move(v));
        }

    GroebnerBasis gb(U, basis_list);
    auto lifted = gb.lift(flatten_assignment(U, images, t0));
    if (!lifted) return std::nullopt;
    Vec coords(H.pm.gens);
    for (size_t g = 0; g < ngen; ++g) coords.set((int)g, (*lifted)[g]);
    return coords;
}

HomIntoIdeal hom_into_ideal(const PresentedModule& M, const std::vector<Polynomial>& I,
                            Int shift) {
    const RingPtr& R = M.gens.ring;
    const int t0 = M.ngens();
    HomIntoIdeal out;
    std::vector<Int> tw(t0, 0);
    for (int t = 0; t < t0; ++t) tw[t] = shift - M.gens.twists[t];
    out.ambient = FreeModule(R, tw);

    // value tuples annihilated by the relations
    std::vector<Vec> K;
    if (M.relations.empty()) {
        for (int t = 0; t < t0; ++t) K.push_back(Vec::basis(out.ambient, t));
    } else {
        std::vector<Int> gtw;
        for (const auto& rel : M.relations) {
            Int d = 0;
            require_input(rel.is_homogeneous(&d) && !rel.is_zero(),
                          "hom_into_ideal: bad relation");
            gtw.push_back(shift - d);
        }
        FreeModule G(R, gtw);
        std::vector<Vec> cols;
        for (int t = 0; t < t0; ++t) {
            Vec c(G);
            for (size_t l = 0; l < M.relations.size(); ++l)
                c.set((int)l, M.relations[l][t]);
            cols.push_back(std::move(c));
        }
        K = kernel_of_map(out.ambient, cols);
    }

    // intersect with componentwise membership in the ideal
    std::vector<Vec> ideal_part = ideal_times_free(out.ambient, I);
    out.gens = intersect_submodules(out.ambient, K, ideal_part);

    EmbeddedModule E = present_submodule(out.ambient, out.gens);
    out.gens = E.gens; // canonical representatives
    out.pm = E.pm;
    return out;
}

// ---- Ext ----

namespace {

/// Hom(F, B) for free F: one generator per (F-basis r, B-generator b);
/// index r*t0 + b; relations are B's relations placed blockwise.
PresentedModule hom_free_into(const FreeModule& F, const PresentedModule& B) {
    const int t0 = B.ngens();
    std::vector<Int> tw;
    tw.reserve(F.rank() * t0);
    for (int r = 0; r < F.rank(); ++r)
        for (int b = 0; b < t0; ++b) tw.push_back(B.gens.twists[b] - F.twists[r]);
    PresentedModule H{FreeModule(F.ring, tw), {}};
    for (int r = 0; r < F.rank(); ++r)
        for (const auto& rho : B.relations) {
            Vec v(H.gens);
            for (int b = 0; b < t0; ++b) v.set(r * t0 + b, rho[b]);
            if (!v.is_zero()) H.relations.push_back(std::move(v));
        }
    return H;
}

/// Induced map Hom(F_i, B) -> Hom(F_{i+1}, B), phi -> phi o d, for the
/// differential d with columns `diff` (one per F_{i+1} basis, in F_i).
ModuleMap dualized_map(const FreeModule& Fi, const FreeModule& Fnext,
                       const std::vector<Vec>& diff, const PresentedModule& B) {
    const int t0 = B.ngens();
    ModuleMap f;
    f.src = hom_free_into(Fi, B);
    f.dst = hom_free_into(Fnext, B);
    f.degree = 0;
    for (int r = 0; r < Fi.rank(); ++r)
        for (int b = 0; b < t0; ++b) {
            Vec img(f.dst.gens);
            for (int c = 0; c < Fnext.rank(); ++c) img.set(c * t0 + b, diff[c][r]);
            f.images.push_back(std::move(img));
        }
    return f;
}

} // namespace

std::vector<PresentedModule> ext_modules(const PresentedModule& A,
                                         const PresentedModule& B) {
    Resolution res = minimal_resolution(A);
    const int p = res.length();
    const RingPtr& R = A.gens.ring;
    PresentedModule zero = PresentedModule::free_module(FreeModule(R, {}));

    std::vector<ModuleMap> delta; // delta[i]: Hom(F_i,B) -> Hom(F_{i+1},B)
    for (int i = 0; i < p; ++i)
        delta.push_back(dualized_map(res.frees[i], res.frees[i + 1], res.maps[i + 1], B));

    std::vector<PresentedModule> out;
    for (int i = 0; i <= p; ++i) {
        ModuleMap in =
            i == 0 ? ModuleMap::zero(zero, hom_free_into(res.frees[0], B)) : delta[i - 1];
        ModuleMap outm =
            i == p ? ModuleMap::zero(hom_free_into(res.frees[p], B), zero) : delta[i];
        out.push_back(map_homology(in, outm).pm);
    }
    return out;
}

PresentedModule ext_module(int i, const PresentedModule& A, const PresentedModule& B) {
    require_input(i >= 0, "ext index must be non-negative");
    std::vector<PresentedModule> all = ext_modules(A, B);
    if (i < (int)all.size()) return all[i];
    return PresentedModule::free_module(FreeModule(A.gens.ring, {}));
}

BidualityData biduality_map(const PresentedModule& A, const PresentedModule& N) {
    BidualityData D;
    D.inner = hom_module(A, N);
    D.outer = hom_module(D.inner.pm, N);
    ModuleMap ev;
    ev.src = A;
    ev.dst = D.outer.pm;
    ev.degree = 0;
    for (int j = 0; j < A.ngens(); ++j) {
        // evaluation at the j-th generator: Hom(A,N) -> N
        std::vector<Vec> images;
        images.reserve(D.inner.pm.ngens());
        for (int g = 0; g < D.inner.pm.ngens(); ++g) images.push_back(D.inner.eval[g][j]);
        auto coords = hom_coords(D.outer, images);
        require_internal(coords.has_value(),
                         "evaluation at a generator is not a homomorphism");
        ev.images.push_back(std::move(*coords));
    }
    std::string why;
    require_internal(map_well_defined(ev, &why), "biduality map ill-defined: " + why);
    D.eval = std::move(ev);
    return D;
}

} // namespace logres

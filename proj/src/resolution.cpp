/// @file resolution.cpp
/// @brief Iterated-syzygy construction of minimal free resolutions.

#include "logres/resolution.hpp"

namespace logres {

Resolution minimal_resolution(const PresentedModule& M_in) {
    Resolution res;
    res.M = minimize_presentation(M_in);
    res.frees.push_back(res.M.gens);
    res.maps.emplace_back(); // maps[0] unused

    std::vector<Vec> cur = res.M.relations; // already a minimal generating set
    FreeModule cur_ambient = res.M.gens;
    while (!cur.empty()) {
        // the level's free module: one basis element per minimal generator
        std::vector<Int> degrees = element_degrees(cur, "resolution level");
        FreeModule level(cur_ambient.ring, degrees);

        // minimality: every entry must be in the irrelevant maximal ideal
        for (const auto& col : cur)
            for (const auto& p : col.comps())
                require_internal(p.is_zero() || !p.is_constant(),
                                 "resolution differential has a unit entry");

        res.frees.push_back(level);
        res.maps.push_back(cur);

        GroebnerBasis gb(cur_ambient, cur, /*with_syzygies=*/true, degrees);
        std::vector<Vec> syz = prune_generators(level, gb.syzygies());
        cur_ambient = level;
        cur = std::move(syz);
        require_internal((int)res.frees.size() <= cur_ambient.ring->nvars() + 2,
                         "resolution longer than the global dimension");
    }
    return res;
}

BettiTable betti_table(const Resolution& res) {
    BettiTable out;
    for (size_t i = 0; i < res.frees.size(); ++i)
        for (Int d : res.frees[i].twists) out[{(int)i, d}] += 1;
    return out;
}

std::vector<int> total_betti(const Resolution& res) {
    std::vector<int> out;
    for (const auto& F : res.frees) out.push_back(F.rank());
    return out;
}

int projective_dimension(const PresentedModule& M) {
    return minimal_resolution(M).length();
}

} // namespace logres

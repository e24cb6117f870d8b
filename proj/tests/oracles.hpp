/// @file oracles.hpp
/// @brief Independent brute-force oracles for the test suites.
///
/// Everything here deliberately avoids the library's Groebner machinery:
/// degree slices of submodules are computed by enumerating monomials and
/// running dense Gaussian elimination over the rationals.  Slow, but an
/// honest second opinion.

#pragma once

#include "logres/free_module.hpp"
#include "logres/hilbert.hpp"
#include "logres/presented.hpp"

#include <map>
#include <vector>

namespace oracle {

using namespace logres;

/// All exponent vectors of exact weighted degree d (lex-ordered, ascending).
inline void monomials_rec(const RingPtr& R, int var, Int left, Exponent& cur,
                          std::vector<Exponent>& out) {
    if (var == R->nvars()) {
        if (left == 0) out.push_back(cur);
        return;
    }
    if (var == R->nvars() - 1) {
        Int w = R->weights[var];
        if (left % w == 0) {
            cur[var] = (int32_t)(left / w);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    Int w = R->weights[var];
    for (Int e = 0; e * w <= left; ++e) {
        cur[var] = (int32_t)e;
        monomials_rec(R, var + 1, left - e * w, cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Exponent> all_monomials(const RingPtr& R, Int d) {
    std::vector<Exponent> out;
    if (d < 0) return out;
    Exponent cur(R->nvars(), 0);
    monomials_rec(R, 0, d, cur, out);
    return out;
}

/// Rank of a dense rational matrix (destroys its argument).
inline int matrix_rank(std::vector<std::vector<Rat>> m) {
    int rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && rank < (int)m.size(); ++c) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < m.size(); ++r) {
            if ((int)r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

/// Basis labels for the degree-d slice of a free module.
struct SliceBasis {
    std::vector<std::pair<int, Exponent>> labels; // (component, exponent)
    std::map<std::pair<int, Exponent>, size_t> index;
};

inline SliceBasis slice_basis(const FreeModule& F, Int d) {
    SliceBasis B;
    for (int c = 0; c < F.rank(); ++c)
        for (auto& e : all_monomials(F.ring, d - F.twists[c])) {
            B.index[{c, e}] = B.labels.size();
            B.labels.push_back({c, e});
        }
    return B;
}

/// Dense row for v (element of degree d) in the slice basis.
inline std::vector<Rat> slice_row(const SliceBasis& B, const Vec& v) {
    std::vector<Rat> row(B.labels.size(), Rat(0));
    for (int c = 0; c < v.ambient().rank(); ++c)
        for (const auto& t : v[c].terms()) {
            auto it = B.index.find({c, t.exp});
            if (it == B.index.end()) throw std::runtime_error("slice_row: degree mismatch");
            row[it->second] = t.coeff;
        }
    return row;
}

/// dim_Q of the degree-d slice of span(gens) inside F.
inline int slice_dimension(const FreeModule& F, const std::vector<Vec>& gens, Int d) {
    SliceBasis B = slice_basis(F, d);
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Int gd = 0;
        if (!g.is_homogeneous(&gd)) throw std::runtime_error("oracle: inhomogeneous gen");
        for (auto& m : all_monomials(F.ring, d - gd))
            rows.push_back(slice_row(B, g.scaled(Polynomial(F.ring, m, Rat(1)))));
    }
    return matrix_rank(std::move(rows));
}

/// dim_Q of the degree-d slice of F/span(rels) — i.e. of the presented
/// module (F, rels).
inline int quotient_slice_dimension(const FreeModule& F, const std::vector<Vec>& rels,
                                    Int d) {
    SliceBasis B = slice_basis(F, d);
    return (int)B.labels.size() - slice_dimension(F, rels, d);
}

/// Check a Hilbert series against brute-force slice dimensions of the
/// presented module on degrees lo..hi; returns first failing degree or
/// nullopt on success.  (Only meaningful when all slice degrees are >= 0
/// shifted — callers pass lo covering the twists involved.)
inline std::optional<Int> series_mismatch(const PresentedModule& pm,
                                          const HilbertSeries& H, Int lo, Int hi) {
    // expand() yields coefficients for degrees 0..hi; negative degrees are
    // handled by shifting the numerator.
    HilbertSeries sh{H.numerator.shifted(-lo), H.weights};
    std::vector<ZZ> coef = sh.expand(hi - lo);
    for (Int d = lo; d <= hi; ++d) {
        int want = quotient_slice_dimension(pm.gens, pm.relations, d);
        ZZ got = coef[(size_t)(d - lo)];
        if (got != want) return d;
    }
    return std::nullopt;
}

} // namespace oracle

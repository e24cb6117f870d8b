/// @file exterior.cpp
/// @brief Exterior powers, wedge products, contraction, Jacobian minors.

#include "logres/exterior.hpp"

#include "logres/errors.hpp"
#include "logres/module_ops.hpp"

#include <algorithm>
#include <functional>

namespace logres {

std::vector<std::vector<int>> index_tuples(int n, int q) {
    std::vector<std::vector<int>> out;
    if (q < 0 || q > n) return out;
    std::vector<int> t(q);
    for (int i = 0; i < q; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (q == 0) break;
        int i = q - 1;
        while (i >= 0 && t[i] == n - q + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < q; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

int tuple_rank(int n, const std::vector<int>& t) {
    auto all = index_tuples(n, (int)t.size());
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == t) return (int)i;
    throw InternalError("index tuple out of range");
}

Int tuple_weight(const RingContext& R, const std::vector<int>& t) {
    Int w = 0;
    for (int i : t) w += R.weights[(size_t)i];
    return w;
}

FreeModule forms_module(const RingPtr& R, int q) {
    std::vector<Int> tw;
    for (const auto& t : index_tuples(R->nvars(), q))
        tw.push_back(tuple_weight(*R, t));
    return FreeModule(R, tw);
}

FreeModule fields_module(const RingPtr& R, int q) {
    std::vector<Int> tw;
    for (const auto& t : index_tuples(R->nvars(), q))
        tw.push_back(-tuple_weight(*R, t));
    return FreeModule(R, tw);
}

namespace {

/// Merge two disjoint increasing tuples; returns false if they intersect.
/// `sign` receives the parity of moving b's entries into place.
bool merge_tuples(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& merged, int& sign) {
    merged.clear();
    int inversions = 0;
    for (int x : b) {
        // count entries of a greater than x; they must jump over x
        int greater = 0;
        for (int y : a) {
            if (y == x) return false;
            if (y > x) ++greater;
        }
        inversions += greater;
    }
    merged.reserve(a.size() + b.size());
    merged.insert(merged.end(), a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace

Vec wedge(const Vec& a, int p, const Vec& b, int q) {
    const RingPtr& R = a.ambient().ring;
    require_input(same_ring(R, b.ambient().ring), "wedge over different rings");
    int n = R->nvars();
    Vec out(forms_module(R, p + q));
    if (p + q > n) return out;

    auto ta = index_tuples(n, p);
    auto tb = index_tuples(n, q);
    std::vector<int> merged;
    for (size_t i = 0; i < ta.size(); ++i) {
        if (a[(int)i].is_zero()) continue;
        for (size_t j = 0; j < tb.size(); ++j) {
            if (b[(int)j].is_zero()) continue;
            int sign = 1;
            if (!merge_tuples(ta[i], tb[j], merged, sign)) continue;
            int r = tuple_rank(n, merged);
            Polynomial term = a[(int)i] * b[(int)j];
            if (sign < 0) term = term.scaled(Rat(-1));
            out.set(r, out[r] + term);
        }
    }
    return out;
}

Polynomial contract(const Vec& delta, const Vec& omega) {
    const RingPtr& R = delta.ambient().ring;
    require_input(same_ring(R, omega.ambient().ring),
                  "contraction over different rings");
    require_input(delta.ambient().rank() == omega.ambient().rank(),
                  "contraction needs matching exterior degree");
    Polynomial out(R);
    for (int i = 0; i < delta.ambient().rank(); ++i)
        out += delta[i] * omega[i];
    return out;
}

Vec d_form(const Polynomial& f) {
    const RingPtr& R = f.ring();
    Vec out(forms_module(R, 1));
    for (int i = 0; i < R->nvars(); ++i) {
        Polynomial di = f.derivative(i);
        if (!di.is_zero()) out.set(i, di);
    }
    return out;
}

Vec dh_wedge(const RingPtr& R, const std::vector<Polynomial>& hs) {
    Vec acc(forms_module(R, 0));
    acc.set(0, Polynomial(R, Rat(1)));
    int p = 0;
    for (const auto& h : hs) {
        acc = wedge(acc, p, d_form(h), 1);
        ++p;
    }
    return acc;
}

Polynomial jacobian_minor(const RingPtr& R, const std::vector<Polynomial>& hs,
                          const std::vector<int>& t) {
    size_t k = hs.size();
    require_input(t.size() == k, "minor needs as many columns as functions");
    // cofactor expansion along the first row
    std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>());
    for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < k; ++c)
            m[r].push_back(hs[r].derivative(t[c]));

    std::vector<int> cols(k);
    for (size_t i = 0; i < k; ++i) cols[i] = (int)i;
    // recursive determinant on the small k x k matrix
    std::function<Polynomial(int, std::vector<int>)> det =
        [&](int row, std::vector<int> use) -> Polynomial {
        if (use.empty()) return Polynomial(R, Rat(1));
        Polynomial out(R);
        for (size_t c = 0; c < use.size(); ++c) {
            std::vector<int> rest;
            for (size_t d = 0; d < use.size(); ++d)
                if (d != c) rest.push_back(use[d]);
            Polynomial sub = m[(size_t)row][(size_t)use[c]] * det(row + 1, rest);
            if (c % 2 == 1) sub = sub.scaled(Rat(-1));
            out += sub;
        }
        return out;
    };
    return det(0, cols);
}

std::vector<Vec> ideal_times_forms(const RingPtr& R, int q,
                                   const std::vector<Polynomial>& ideal) {
    return ideal_times_free(forms_module(R, q), ideal);
}

} // namespace logres

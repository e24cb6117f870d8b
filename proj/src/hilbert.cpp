/// @file hilbert.cpp
/// @brief Hilbert series arithmetic and the monomial recursion.

#include "logres/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace logres {

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
    LaurentZ r = *this;
    for (const auto& [e, c] : o.coeff) r.add(e, c);
    return r;
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const {
    LaurentZ r = *this;
    for (const auto& [e, c] : o.coeff) r.add(e, -c);
    return r;
}

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
    LaurentZ r;
    for (const auto& [e1, c1] : coeff)
        for (const auto& [e2, c2] : o.coeff) r.add(e1 + e2, c1 * c2);
    return r;
}

LaurentZ LaurentZ::shifted(Int e) const {
    LaurentZ r;
    for (const auto& [e1, c] : coeff) r.coeff.emplace(e1 + e, c);
    return r;
}

std::string LaurentZ::to_string() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff) {
        ZZ a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::vector<ZZ> HilbertSeries::expand(Int upto) const {
    require_internal(upto >= 0, "expansion bound must be non-negative");
    if (numerator.is_zero()) return std::vector<ZZ>(upto + 1, ZZ(0));
    // the series may start in negative degrees (duals); expand the full
    // window and return the 0..upto slice.
    Int lo = std::min<Int>(0, numerator.coeff.begin()->first);
    std::vector<ZZ> buf(upto - lo + 1, ZZ(0));
    for (const auto& [e, c] : numerator.coeff)
        if (e <= upto) buf[e - lo] = c;
    // divide by each (1 - t^w): cumulative sums with stride w
    for (Int w : weights)
        for (Int d = lo + w; d <= upto; ++d) buf[d - lo] += buf[d - w - lo];
    std::vector<ZZ> out(buf.begin() + (0 - lo), buf.end());
    return out;
}

// ---- monomial recursion ----

static void minimalize_monomials(std::vector<Exponent>& gens) {
    std::vector<Exponent> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exp_divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
                redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    gens = std::move(out);
}

LaurentZ monomial_quotient_numerator(const RingContext& R, std::vector<Exponent> gens) {
    minimalize_monomials(gens);
    LaurentZ one;
    one.add(0, 1);
    if (gens.empty()) return one;
    if (gens.size() == 1) {
        LaurentZ r = one;
        r.add(weighted_degree(R, gens[0]), -1);
        return r;
    }
    // split off the last generator m:
    //   K(R/(L' + m)) = K(R/L') - t^(deg m) * K(R/(L' : m))
    Exponent m = gens.back();
    gens.pop_back();
    std::vector<Exponent> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Exponent q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = std::max<int32_t>(g[i] - m[i], 0);
        colon.push_back(std::move(q));
    }
    LaurentZ left = monomial_quotient_numerator(R, std::move(gens));
    LaurentZ right = monomial_quotient_numerator(R, std::move(colon));
    return left - right.shifted(weighted_degree(R, m));
}

HilbertSeries hilbert_series(const PresentedModule& M) {
    const RingContext& R = *M.gens.ring;
    HilbertSeries H;
    H.weights = R.weights;
    GroebnerBasis gb = relation_basis(M);
    // leading-term module, split by component
    std::vector<std::vector<Exponent>> lead(M.ngens());
    for (const auto& v : gb.basis()) {
        MTerm t = v.leading();
        lead[t.comp].push_back(t.exp);
    }
    for (int j = 0; j < M.ngens(); ++j) {
        LaurentZ K = monomial_quotient_numerator(R, std::move(lead[j]));
        H.numerator = H.numerator + K.shifted(M.gens.twists[j]);
    }
    return H;
}

HilbertSeries hilbert_series_from_resolution(const Resolution& res) {
    HilbertSeries H;
    H.weights = res.M.gens.ring->weights;
    int sign = 1;
    for (const auto& F : res.frees) {
        for (Int d : F.twists) H.numerator.add(d, sign);
        sign = -sign;
    }
    return H;
}

HilbertSeries hilbert_series_checked(const PresentedModule& M) {
    HilbertSeries a = hilbert_series(M);
    HilbertSeries b = hilbert_series_from_resolution(minimal_resolution(M));
    require_internal(a == b, "Hilbert series routes disagree: leading-term route " +
                                 a.numerator.to_string() + " vs resolution route " +
                                 b.numerator.to_string());
    return a;
}

int krull_dimension(const PresentedModule& M) {
    HilbertSeries H = hilbert_series(M);
    if (H.numerator.is_zero()) return -1;
    // vanishing order of the numerator at t = 1
    LaurentZ num = H.numerator;
    int order = 0;
    for (;;) {
        ZZ at_one(0);
        for (const auto& [e, c] : num.coeff) at_one += c;
        if (at_one != 0) break;
        // divide by (1 - t): with num = sum c_e t^e and num(1) = 0 the
        // quotient q satisfies q_e = sum_{d <= e} c_d (running prefix sums),
        // truncated at the top exponent.
        Int lo = num.coeff.begin()->first;
        Int hi = num.coeff.rbegin()->first;
        LaurentZ q;
        ZZ run(0);
        for (Int e = lo; e < hi; ++e) {
            auto it = num.coeff.find(e);
            if (it != num.coeff.end()) run += it->second;
            q.add(e, run);
        }
        num = std::move(q);
        ++order;
        require_internal(order <= (int)H.weights.size() + 1,
                         "numerator vanishing order exceeds nvars");
    }
    return (int)H.weights.size() - order;
}

int dimension_of_quotient(const RingPtr& R, const std::vector<Polynomial>& I) {
    return krull_dimension(PresentedModule::cyclic(R, I));
}

} // namespace logres

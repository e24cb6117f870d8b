/// @file hilbert.hpp
/// @brief Graded Hilbert series, dimension, and series cross-checks.
///
/// Every Hilbert series is represented as an integer Laurent-polynomial
/// numerator over the fixed denominator prod_i (1 - t^(w_i)).  Two
/// independent routes compute it:
///   * from the leading-term module of a relation basis (monomial
///     inclusion-exclusion recursion), and
///   * as the alternating twist sum of a minimal free resolution.
/// The analysis pipeline insists the two agree; disagreement is a kernel
/// bug and raises an internal error rather than a wrong certificate.

#pragma once

#include "logres/presented.hpp"
#include "logres/resolution.hpp"

#include <map>
#include <string>
#include <vector>

namespace logres {

/// Integer Laurent polynomial in t (exponent -> coefficient, zeros absent).
struct LaurentZ {
    std::map<Int, ZZ> coeff;

    void add(Int e, const ZZ& c) {
        if (c == 0) return;
        auto it = coeff.find(e);
        if (it == coeff.end())
            coeff.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) coeff.erase(it);
        }
    }
    bool is_zero() const { return coeff.empty(); }
    bool operator==(const LaurentZ& o) const { return coeff == o.coeff; }

    LaurentZ operator+(const LaurentZ& o) const;
    LaurentZ operator-(const LaurentZ& o) const;
    LaurentZ operator*(const LaurentZ& o) const;
    /// Multiply by t^e.
    LaurentZ shifted(Int e) const;

    std::string to_string() const; ///< e.g. "1 - t^3 + 2*t^5"
};

/// Hilbert series numerator over prod (1 - t^(w_i)).
struct HilbertSeries {
    LaurentZ numerator;
    std::vector<Int> weights;

    bool operator==(const HilbertSeries& o) const {
        return numerator == o.numerator && weights == o.weights;
    }

    /// Coefficients of the power-series expansion in degrees 0..upto.
    /// Numerators may start in negative degrees (duals); the expansion is
    /// computed over the full window and sliced to 0..upto.
    std::vector<ZZ> expand(Int upto) const;
};

/// Numerator of R/L for a monomial ideal L given by exponent vectors.
LaurentZ monomial_quotient_numerator(const RingContext& R,
                                     std::vector<Exponent> gens);

/// Hilbert series of a presented module, computed from the leading terms
/// of the canonical relation basis.
HilbertSeries hilbert_series(const PresentedModule& M);

/// Hilbert series via a resolution: alternating sum of twist polynomials.
HilbertSeries hilbert_series_from_resolution(const Resolution& res);

/// Both routes, compared; raises InternalError on disagreement.
HilbertSeries hilbert_series_checked(const PresentedModule& M);

/// Krull dimension = pole order of the series at t = 1; the zero module
/// gets the sentinel -1.
int krull_dimension(const PresentedModule& M);

/// dim R/I for an ideal.
int dimension_of_quotient(const RingPtr& R, const std::vector<Polynomial>& I);

} // namespace logres

/// @file free_module.hpp
/// @brief Graded free modules, their elements, and the module term order.
///
/// A FreeModule is R(-d_1) + ... + R(-d_r): basis element e_i carries the
/// twist d_i, so a homogeneous element of degree g has component i of
/// polynomial degree g - d_i.  Elements (Vec) carry their ambient module so
/// twist bookkeeping is checked at every operation instead of trusted.
///
/// Module term order ("term over position"): compare the monomials first in
/// the ring order; on equal monomials the term in the lower-index component
/// is the larger one.  Leading terms ignore twists entirely; twists only
/// enter homogeneity checks and degree computations.

#pragma once

#include "logres/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logres {

// ======================= FREE MODULE =======================

struct FreeModule {
    RingPtr ring;
    std::vector<Int> twists; ///< twist of each basis element; rank = size

    FreeModule() = default;
    FreeModule(RingPtr r, std::vector<Int> tw) : ring(std::move(r)), twists(std::move(tw)) {}

    /// Rank-r module with all twists zero.
    static FreeModule trivial(RingPtr r, int rank) {
        return FreeModule(std::move(r), std::vector<Int>(rank, 0));
    }

    int rank() const { return static_cast<int>(twists.size()); }

    bool operator==(const FreeModule& o) const {
        return same_ring(ring, o.ring) && twists == o.twists;
    }
    bool operator!=(const FreeModule& o) const { return !(*this == o); }

    /// F(s): shift every twist by -s, so degrees of elements drop by s.
    FreeModule shifted(Int s) const {
        FreeModule r(*this);
        for (auto& t : r.twists) t -= s;
        return r;
    }
};

// ======================= ELEMENTS =======================

/// A term of a module element: component index + monomial + coefficient.
struct MTerm {
    int comp = -1;
    Exponent exp;
    Rat coeff;
};

/// Element of a FreeModule; carries its ambient for safety.
class Vec {
public:
    Vec() = default;
    explicit Vec(FreeModule fm)
        : fm_(std::move(fm)), comps_(fm_.rank(), Polynomial(fm_.ring)) {}
    Vec(FreeModule fm, std::vector<Polynomial> comps);

    /// The basis element e_i.
    static Vec basis(const FreeModule& fm, int i) {
        Vec v(fm);
        v.comps_[i] = Polynomial(fm.ring, Rat(1));
        return v;
    }

    const FreeModule& ambient() const { return fm_; }
    const std::vector<Polynomial>& comps() const { return comps_; }
    const Polynomial& operator[](int i) const { return comps_[i]; }
    int rank() const { return fm_.rank(); }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    void set(int i, Polynomial p) { comps_[i] = std::move(p); }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec& operator+=(const Vec& o) { *this = *this + o; return *this; }
    Vec& operator-=(const Vec& o) { *this = *this - o; return *this; }

    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    /// Scale by a polynomial, a scalar, or a single term.
    Vec scaled(const Polynomial& p) const;
    Vec scaled(const Rat& c) const;
    Vec term_scaled(const Exponent& e, const Rat& c) const;

    /// Componentwise exact division by a nonzerodivisor (throws on remainder).
    Vec exact_div(const Polynomial& divisor) const;

    /// Leading module term; element must be nonzero.
    MTerm leading() const;

    /// Twisted degree of the leading term: deg(monomial) + twist(comp).
    Int leading_degree() const;

    /// True iff all components are homogeneous and the twisted degrees
    /// agree; sets *deg for nonzero elements.
    bool is_homogeneous(Int* deg = nullptr) const;

    std::string to_string() const;

private:
    FreeModule fm_;
    std::vector<Polynomial> comps_;
};

/// Compare module terms: ring order on monomials, then lower component wins.
/// Returns +1 if a > b.
inline int cmp_mterm(const RingContext& R, int comp_a, const Exponent& ea,
                     int comp_b, const Exponent& eb) {
    int c = cmp_exp(R, ea, eb);
    if (c != 0) return c;
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return 0;
}

/// Total order on elements used for canonical sorting of basis lists:
/// compare leading terms; zero sorts last; final tie by componentwise
/// polynomial comparison.
int cmp_vec(const Vec& a, const Vec& b);

/// Throw InputError unless every element of `gens` lies in `F` and is
/// homogeneous.  `what` names the offending list in the message.
void require_homogeneous(const FreeModule& F, const std::vector<Vec>& gens,
                         const std::string& what);

/// Degrees (twisted) of a list of homogeneous elements; zero vectors are
/// rejected.  These become the twists of the free module mapping onto them.
std::vector<Int> element_degrees(const std::vector<Vec>& gens, const std::string& what);

} // namespace logres

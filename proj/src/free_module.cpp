/// @file free_module.cpp
/// @brief Element arithmetic for graded free modules.

#include "logres/free_module.hpp"

#include <sstream>

namespace logres {

Vec::Vec(FreeModule fm, std::vector<Polynomial> comps)
    : fm_(std::move(fm)), comps_(std::move(comps)) {
    require_internal((int)comps_.size() == fm_.rank(), "component count != rank");
    for (auto& p : comps_)
        if (p.ring() == nullptr) p = Polynomial(fm_.ring);
}

Vec Vec::operator+(const Vec& o) const {
    require_internal(fm_ == o.fm_, "vector addition across different modules");
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] + o.comps_[i];
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    require_internal(fm_ == o.fm_, "vector subtraction across different modules");
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] - o.comps_[i];
    return r;
}

Vec Vec::operator-() const {
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = -comps_[i];
    return r;
}

bool Vec::operator==(const Vec& o) const {
    if (!(fm_ == o.fm_)) return false;
    for (int i = 0; i < rank(); ++i)
        if (!(comps_[i] == o.comps_[i])) return false;
    return true;
}

Vec Vec::scaled(const Polynomial& p) const {
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i] * p;
    return r;
}

Vec Vec::scaled(const Rat& c) const {
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].scaled(c);
    return r;
}

Vec Vec::term_scaled(const Exponent& e, const Rat& c) const {
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].term_scaled(e, c);
    return r;
}

Vec Vec::exact_div(const Polynomial& divisor) const {
    Vec r(fm_);
    for (int i = 0; i < rank(); ++i) r.comps_[i] = comps_[i].exact_div(divisor);
    return r;
}

MTerm Vec::leading() const {
    const RingContext& R = *fm_.ring;
    MTerm best;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        const Term& t = comps_[i].leading();
        if (best.comp < 0 || cmp_mterm(R, i, t.exp, best.comp, best.exp) > 0)
            best = {i, t.exp, t.coeff};
    }
    require_internal(best.comp >= 0, "leading term of zero vector");
    return best;
}

Int Vec::leading_degree() const {
    MTerm t = leading();
    return weighted_degree(*fm_.ring, t.exp) + fm_.twists[t.comp];
}

bool Vec::is_homogeneous(Int* deg) const {
    bool seen = false;
    Int d = 0;
    for (int i = 0; i < rank(); ++i) {
        if (comps_[i].is_zero()) continue;
        Int pd = 0;
        if (!comps_[i].is_homogeneous(&pd)) return false;
        Int total = pd + fm_.twists[i];
        if (seen && total != d) return false;
        d = total;
        seen = true;
    }
    if (seen && deg) *deg = d;
    return true;
}

std::string Vec::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ", ";
        os << comps_[i].to_string();
    }
    os << ")";
    return os.str();
}

int cmp_vec(const Vec& a, const Vec& b) {
    bool za = a.is_zero(), zb = b.is_zero();
    if (za || zb) return za == zb ? 0 : (za ? -1 : 1);
    const RingContext& R = *a.ambient().ring;
    MTerm ta = a.leading(), tb = b.leading();
    int c = cmp_mterm(R, ta.comp, ta.exp, tb.comp, tb.exp);
    if (c != 0) return c;
    for (int i = 0; i < a.rank(); ++i) {
        c = cmp_poly(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

void require_homogeneous(const FreeModule& F, const std::vector<Vec>& gens,
                         const std::string& what) {
    for (size_t i = 0; i < gens.size(); ++i) {
        require_input(gens[i].ambient() == F,
                      what + "[" + std::to_string(i) + "] lies in a different module");
        require_input(gens[i].is_homogeneous(),
                      what + "[" + std::to_string(i) + "] = " + gens[i].to_string() +
                          " is not homogeneous for the given weights");
    }
}

std::vector<Int> element_degrees(const std::vector<Vec>& gens, const std::string& what) {
    std::vector<Int> d;
    d.reserve(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        require_input(!gens[i].is_zero(),
                      what + "[" + std::to_string(i) + "] is zero");
        Int g = 0;
        require_input(gens[i].is_homogeneous(&g),
                      what + "[" + std::to_string(i) + "] is not homogeneous");
        d.push_back(g);
    }
    return d;
}

} // namespace logres

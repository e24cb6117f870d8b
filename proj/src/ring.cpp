/// @file ring.cpp
/// @brief Polynomial arithmetic over the graded context.

#include "logres/ring.hpp"

#include <sstream>

namespace logres {

RingPtr RingContext::make(std::vector<std::string> vars, std::vector<Int> weights) {
    require_input(!vars.empty(), "ring needs at least one variable");
    require_input(vars.size() == weights.size(),
                  "variable list and weight list differ in length");
    for (size_t i = 0; i < vars.size(); ++i) {
        require_input(!vars[i].empty(), "empty variable name");
        require_input(weights[i] > 0, "weight of " + vars[i] + " must be positive");
        for (size_t j = i + 1; j < vars.size(); ++j)
            require_input(vars[i] != vars[j], "duplicate variable name " + vars[i]);
    }
    auto ctx = std::make_shared<RingContext>();
    ctx->vars = std::move(vars);
    ctx->weights = std::move(weights);
    ctx->weight_sum = std::accumulate(ctx->weights.begin(), ctx->weights.end(), Int(0));
    return ctx;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// ---- normalization helper: sort descending, merge, drop zeros ----
Polynomial poly_normalize_(RingPtr ring, std::vector<Term> terms) {
    const RingContext& R = *ring;
    std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
        return cmp_exp(R, a.exp, b.exp) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    Polynomial p(ring);
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const auto& t : terms)
        require_internal((int)t.exp.size() == ring->nvars(), "exponent length mismatch");
    return poly_normalize_(std::move(ring), std::move(terms));
}

bool Polynomial::is_homogeneous(Int* deg) const {
    if (terms_.empty()) return true;
    Int d = weighted_degree(*ring_, terms_.front().exp);
    for (const auto& t : terms_)
        if (weighted_degree(*ring_, t.exp) != d) return false;
    if (deg) *deg = d;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge two sorted term lists.  sign = +1 for addition, -1 for subtraction.
static Polynomial merge_(const Polynomial& a, const Polynomial& b, int sign) {
    require_internal(same_ring(a.ring(), b.ring()) || a.is_zero() || b.is_zero(),
                     "polynomial arithmetic across different rings");
    RingPtr ring = a.ring() ? a.ring() : b.ring();
    const RingContext& R = *ring;
    std::vector<Term> out;
    out.reserve(a.nterms() + b.nterms());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        int c;
        if (i >= ta.size()) c = -1;
        else if (j >= tb.size()) c = 1;
        else c = cmp_exp(R, ta[i].exp, tb[j].exp);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            Term t = tb[j++];
            if (sign < 0) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        } else {
            Rat s = ta[i].coeff;
            if (sign > 0) s += tb[j].coeff; else s -= tb[j].coeff;
            if (s != 0) out.push_back({ta[i].exp, std::move(s)});
            ++i; ++j;
        }
    }
    return Polynomial::from_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return merge_(*this, o, +1); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return merge_(*this, o, -1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    require_internal(same_ring(ring_, o.ring()), "polynomial product across rings");
    std::vector<Term> out;
    out.reserve(nterms() * o.nterms());
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms())
            out.push_back({exp_add(ta.exp, tb.exp), ta.coeff * tb.coeff});
    return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::term_scaled(const Exponent& e, const Rat& c) const {
    if (c == 0 || is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({exp_add(t.exp, e), t.coeff * c});
    // multiplying by a fixed monomial preserves the term order, so the list
    // stays sorted and merge-free.
    return r;
}

Polynomial Polynomial::derivative(int i) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[i] == 0) continue;
        Exponent e = t.exp;
        Rat c = t.coeff * Rat(e[i]);
        e[i] -= 1;
        out.push_back({std::move(e), std::move(c)});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    require_internal(!divisor.is_zero(), "exact division by zero");
    if (is_zero()) return *this;
    Polynomial rem = *this;
    Polynomial quot(ring_);
    const Term& dl = divisor.leading();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading();
        require_internal(exp_divides(dl.exp, rl.exp),
                         "exact division left a remainder: " + to_string() +
                             " by " + divisor.to_string());
        Exponent m = exp_sub(rl.exp, dl.exp);
        Rat c = rl.coeff / dl.coeff;
        quot += Polynomial(ring_, m, c);
        rem -= divisor.term_scaled(m, c);
    }
    return quot;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool any_var = false;
        for (int32_t v : t.exp)
            if (v != 0) any_var = true;
        bool unit_coeff = (c == 1) && any_var;
        if (!unit_coeff) os << rat_to_string(c);
        bool printed = !unit_coeff;
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.exp[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.exp[i] != 1) os << "^" << t.exp[i];
            printed = true;
        }
    }
    return os.str();
}

int cmp_poly(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    size_t m = std::min(ta.size(), tb.size());
    const RingContext* R = a.ring() ? a.ring().get() : (b.ring() ? b.ring().get() : nullptr);
    for (size_t i = 0; i < m; ++i) {
        int c = cmp_exp(*R, ta[i].exp, tb[i].exp);
        if (c != 0) return c;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff > tb[i].coeff ? 1 : -1;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    return 0;
}

} // namespace logres

/// @file groebner.cpp
/// @brief Tracked Buchberger engine.

#include "logres/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace logres {

static Division divide_ptrs(const Vec& v, const std::vector<const Vec*>& divisors) {
    const FreeModule& F = v.ambient();
    Division out;
    out.rem = Vec(F);
    out.quot.assign(divisors.size(), Polynomial(F.ring));

    Vec p = v;
    while (!p.is_zero()) {
        MTerm t = p.leading();
        bool reduced = false;
        for (size_t j = 0; j < divisors.size(); ++j) {
            if (divisors[j]->is_zero()) continue;
            MTerm lt = divisors[j]->leading();
            if (lt.comp != t.comp || !exp_divides(lt.exp, t.exp)) continue;
            Exponent m = exp_sub(t.exp, lt.exp);
            Rat c = t.coeff / lt.coeff;
            p -= divisors[j]->term_scaled(m, c);
            out.quot[j] += Polynomial(F.ring, m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the leading term into the remainder and keep going on
            // the strictly smaller tail.
            Vec lt_vec(F);
            lt_vec.set(t.comp, Polynomial(F.ring, t.exp, t.coeff));
            out.rem += lt_vec;
            p -= lt_vec;
        }
    }
    return out;
}

Division divide(const Vec& v, const std::vector<Vec>& divisors) {
    std::vector<const Vec*> ptrs;
    ptrs.reserve(divisors.size());
    for (const auto& d : divisors) ptrs.push_back(&d);
    return divide_ptrs(v, ptrs);
}

namespace {

/// Working element: the vector plus its expression in the input generators.
struct Tracked {
    Vec v;
    std::vector<Polynomial> coeffs; // over input generators
};

/// Divide v by the working set (no copies of the divisors).
Division divide_tracked(const Vec& v, const std::vector<Tracked>& work) {
    std::vector<const Vec*> ptrs;
    ptrs.reserve(work.size());
    for (const auto& w : work) ptrs.push_back(&w.v);
    return divide_ptrs(v, ptrs);
}

} // namespace

GroebnerBasis::GroebnerBasis(FreeModule F, std::vector<Vec> gens, bool with_syzygies,
                             std::optional<std::vector<Int>> gen_degrees)
    : F_(std::move(F)), gens_(std::move(gens)), has_syz_(with_syzygies) {
    require_homogeneous(F_, gens_, "generators");
    if (gen_degrees) {
        require_internal(gen_degrees->size() == gens_.size(),
                         "degree list length != generator count");
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (gens_[i].is_zero()) continue;
            Int d = 0;
            gens_[i].is_homogeneous(&d);
            require_internal(d == (*gen_degrees)[i],
                             "stated generator degree disagrees with the element");
        }
    }
    const RingContext& R = *F_.ring;
    const size_t s = gens_.size();

    auto zero_row = [&]() { return std::vector<Polynomial>(s, Polynomial(F_.ring)); };

    std::vector<Tracked> work;
    std::vector<std::vector<Polynomial>> zero_reductions; // syzygy rows over gens

    auto record_zero = [&](std::vector<Polynomial> row) {
        if (!has_syz_) return;
        bool all_zero = true;
        for (const auto& p : row)
            if (!p.is_zero()) { all_zero = false; break; }
        if (!all_zero) zero_reductions.push_back(std::move(row));
    };

    // Pair queue keyed by (degree of the S-pair, i, j) for a deterministic
    // normal selection strategy.  Only same-leading-component pairs matter.
    std::map<std::tuple<Int, size_t, size_t>, std::pair<size_t, size_t>> pairs;
    auto add_pairs_for = [&](size_t jnew) {
        MTerm ln = work[jnew].v.leading();
        for (size_t i = 0; i < jnew; ++i) {
            MTerm li = work[i].v.leading();
            if (li.comp != ln.comp) continue;
            Exponent g = exp_lcm(li.exp, ln.exp);
            Int deg = weighted_degree(R, g) + F_.twists[ln.comp];
            pairs[{deg, i, jnew}] = {i, jnew};
        }
    };

    auto append_element = [&](Vec v, std::vector<Polynomial> coeffs) {
        // normalize to unit leading coefficient
        Rat lc = v.leading().coeff;
        if (lc != 1) {
            Rat inv = Rat(1) / lc;
            v = v.scaled(inv);
            for (auto& p : coeffs) p = p.scaled(inv);
        }
        work.push_back({std::move(v), std::move(coeffs)});
        add_pairs_for(work.size() - 1);
    };

    // ---- seed with the input generators ----
    for (size_t i = 0; i < s; ++i) {
        auto row = zero_row();
        row[i] = Polynomial(F_.ring, Rat(1));
        if (gens_[i].is_zero()) {
            record_zero(std::move(row)); // e_i is itself a syzygy
            continue;
        }
        Division d = divide_tracked(gens_[i], work);
        // subtract the used multiples of earlier work elements
        for (size_t l = 0; l < work.size(); ++l) {
            if (d.quot[l].is_zero()) continue;
            for (size_t t = 0; t < s; ++t)
                row[t] -= d.quot[l] * work[l].coeffs[t];
        }
        if (d.rem.is_zero()) record_zero(std::move(row));
        else append_element(std::move(d.rem), std::move(row));
    }

    // ---- main loop: process every pair ----
    while (!pairs.empty()) {
        auto it = pairs.begin();
        auto [i, j] = it->second;
        pairs.erase(it);

        MTerm li = work[i].v.leading();
        MTerm lj = work[j].v.leading();
        Exponent g = exp_lcm(li.exp, lj.exp);
        Exponent mi = exp_sub(g, li.exp);
        Exponent mj = exp_sub(g, lj.exp);
        Rat ci = Rat(1) / li.coeff;
        Rat cj = Rat(1) / lj.coeff;

        Vec sp = work[i].v.term_scaled(mi, ci) - work[j].v.term_scaled(mj, cj);
        std::vector<Polynomial> row = zero_row();
        for (size_t t = 0; t < s; ++t)
            row[t] = work[i].coeffs[t].term_scaled(mi, ci) -
                     work[j].coeffs[t].term_scaled(mj, cj);

        Division d = divide_tracked(sp, work);
        for (size_t l = 0; l < work.size(); ++l) {
            if (d.quot[l].is_zero()) continue;
            for (size_t t = 0; t < s; ++t)
                row[t] -= d.quot[l] * work[l].coeffs[t];
        }
        if (d.rem.is_zero()) record_zero(std::move(row));
        else append_element(std::move(d.rem), std::move(row));
    }

    // ---- syzygies: rows of (Id - S*T) plus the recorded reductions ----
    if (has_syz_) {
        syz_ambient_ = FreeModule(F_.ring, std::vector<Int>());
        for (size_t i = 0; i < s; ++i) {
            Int d = gen_degrees ? (*gen_degrees)[i] : 0;
            if (!gens_[i].is_zero()) gens_[i].is_homogeneous(&d);
            // zero generators keep the stated degree (or 0 when unstated);
            // their syzygy e_i was already recorded and is homogeneous
            // regardless.
            syz_ambient_.twists.push_back(d);
        }
        std::vector<Vec> syz;
        for (size_t i = 0; i < s; ++i) {
            if (gens_[i].is_zero()) continue;
            Division d = divide_tracked(gens_[i], work);
            require_internal(d.rem.is_zero(), "generator does not reduce to zero "
                                              "against its own basis");
            // row_i(Id - S*T) = e_i - sum_l quot_l * work_l.coeffs
            std::vector<Polynomial> row = zero_row();
            row[i] = Polynomial(F_.ring, Rat(1));
            for (size_t l = 0; l < work.size(); ++l) {
                if (d.quot[l].is_zero()) continue;
                for (size_t t = 0; t < s; ++t)
                    row[t] -= d.quot[l] * work[l].coeffs[t];
            }
            Vec sv(syz_ambient_, row);
            if (!sv.is_zero()) syz.push_back(std::move(sv));
        }
        for (auto& row : zero_reductions)
            syz.push_back(Vec(syz_ambient_, std::move(row)));
        // sanity: each candidate really annihilates the generators
        for (const auto& z : syz) {
            Vec acc(F_);
            for (size_t t = 0; t < s; ++t) acc += gens_[t].scaled(z[t]);
            require_internal(acc.is_zero(), "recorded syzygy fails to annihilate");
        }
        syzygies_ = std::move(syz);
    }

    // ---- minimalize and fully reduce the basis ----
    // 1. drop elements whose leading term is divisible by another's
    std::vector<size_t> keep;
    for (size_t i = 0; i < work.size(); ++i) {
        MTerm li = work[i].v.leading();
        bool redundant = false;
        for (size_t j = 0; j < work.size(); ++j) {
            if (i == j) continue;
            MTerm lj = work[j].v.leading();
            if (lj.comp != li.comp || !exp_divides(lj.exp, li.exp)) continue;
            if (lj.exp == li.exp) {
                // equal leading terms: keep the earlier element
                if (j < i) { redundant = true; break; }
            } else {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Tracked> minimal;
    for (size_t i : keep) minimal.push_back(std::move(work[i]));

    // 2. tail-reduce every element against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<const Vec*> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(&minimal[j].v);
            Division d = divide_ptrs(minimal[i].v, others);
            if (d.rem != minimal[i].v) {
                changed = true;
                require_internal(!d.rem.is_zero(),
                                 "minimal basis element reduced to zero");
                // update tracking: rem = elem - sum quot_l * other_l
                std::vector<Polynomial> row = minimal[i].coeffs;
                size_t idx = 0;
                for (size_t j = 0; j < minimal.size(); ++j) {
                    if (j == i) continue;
                    if (!d.quot[idx].is_zero())
                        for (size_t t = 0; t < s; ++t)
                            row[t] -= d.quot[idx] * minimal[j].coeffs[t];
                    ++idx;
                }
                Rat lc = d.rem.leading().coeff;
                if (lc != 1) {
                    Rat inv = Rat(1) / lc;
                    d.rem = d.rem.scaled(inv);
                    for (auto& p : row) p = p.scaled(inv);
                }
                minimal[i] = {std::move(d.rem), std::move(row)};
            }
        }
    }

    // 3. canonical sort: by leading term ascending, then full comparison
    std::sort(minimal.begin(), minimal.end(), [](const Tracked& a, const Tracked& b) {
        return cmp_vec(a.v, b.v) < 0;
    });

    for (auto& m : minimal) {
        basis_.push_back(std::move(m.v));
        in_gens_.push_back(std::move(m.coeffs));
    }

    // verify the transition rows really express the basis in the generators
    for (size_t j = 0; j < basis_.size(); ++j) {
        Vec acc(F_);
        for (size_t t = 0; t < s; ++t) acc += gens_[t].scaled(in_gens_[j][t]);
        require_internal(acc == basis_[j], "transition row fails to reproduce basis");
    }
}

Vec GroebnerBasis::normal_form(const Vec& v) const {
    require_internal(v.ambient() == F_, "normal form in the wrong module");
    return divide(v, basis_).rem;
}

std::optional<std::vector<Polynomial>> GroebnerBasis::lift(const Vec& v) const {
    Division d = divide(v, basis_);
    if (!d.rem.is_zero()) return std::nullopt;
    std::vector<Polynomial> out(gens_.size(), Polynomial(F_.ring));
    for (size_t j = 0; j < basis_.size(); ++j) {
        if (d.quot[j].is_zero()) continue;
        for (size_t t = 0; t < gens_.size(); ++t)
            out[t] += d.quot[j] * in_gens_[j][t];
    }
    return out;
}

const FreeModule& GroebnerBasis::syzygy_ambient() const {
    require_internal(has_syz_, "syzygies were not requested");
    return syz_ambient_;
}

const std::vector<Vec>& GroebnerBasis::syzygies() const {
    require_internal(has_syz_, "syzygies were not requested");
    return syzygies_;
}

std::vector<Vec> ideal_as_vecs(const RingPtr& R, const std::vector<Polynomial>& gens) {
    FreeModule F = FreeModule::trivial(R, 1);
    std::vector<Vec> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        Vec v(F);
        v.set(0, g);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Polynomial> ideal_groebner(const RingPtr& R,
                                       const std::vector<Polynomial>& gens) {
    GroebnerBasis gb(FreeModule::trivial(R, 1), ideal_as_vecs(R, gens));
    std::vector<Polynomial> out;
    out.reserve(gb.basis().size());
    for (const auto& v : gb.basis()) out.push_back(v[0]);
    return out;
}

} // namespace logres

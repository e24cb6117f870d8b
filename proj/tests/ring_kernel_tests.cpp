/// @file ring_kernel_tests.cpp
/// @brief Kernel suite: ring arithmetic, Groebner bases, syzygies,
///        resolutions, Hilbert series, Hom/Ext, invariants.
///
/// Expected values marked "hand oracle" were computed independently (by
/// hand or by the brute-force linear algebra in oracles.hpp) before the
/// library code ran them.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logres/groebner.hpp"
#include "logres/hilbert.hpp"
#include "logres/hom.hpp"
#include "logres/invariants.hpp"
#include "logres/module_ops.hpp"
#include "logres/presented.hpp"
#include "logres/resolution.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace logres;

namespace {

RingPtr R2() { return RingContext::make({"x", "y"}, {1, 1}); }
RingPtr R3() { return RingContext::make({"x", "y", "z"}, {1, 1, 1}); }
RingPtr Rmc() { return RingContext::make({"x", "y", "z"}, {3, 4, 5}); }

Polynomial mono(const RingPtr& R, std::vector<int> e, Rat c = Rat(1)) {
    Exponent ex(e.begin(), e.end());
    return Polynomial(R, ex, c);
}

std::set<std::string> poly_strings(const std::vector<Polynomial>& v) {
    std::set<std::string> out;
    for (const auto& p : v) out.insert(p.to_string());
    return out;
}

std::vector<Polynomial> rank1_polys(const std::vector<Vec>& v) {
    std::vector<Polynomial> out;
    for (const auto& w : v) out.push_back(w[0]);
    return out;
}

/// Generators of the (3,4,5) monomial curve's defining ideal.
std::vector<Polynomial> monomial_curve_ideal(const RingPtr& R) {
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);
    return {x * z - y * y, x * x * x - y * z, x * x * y - z * z};
}

/// The complete-intersection part (xz - y^2, x^3 - yz).
std::vector<Polynomial> monomial_curve_ci(const RingPtr& R) {
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);
    return {x * z - y * y, x * x * x - y * z};
}

} // namespace

// ======================= RING ARITHMETIC =======================

TEST_CASE("ring: weighted degrees and monomial order") {
    auto R = Rmc();
    CHECK(weighted_degree(*R, Exponent{1, 1, 0}) == 7);
    CHECK(weighted_degree(*R, Exponent{2, 0, 1}) == 11);

    auto Q = R2();
    // graded reverse lex with unit weights: x^2 > x*y > y^2
    Exponent x2{2, 0}, xy{1, 1}, y2{0, 2};
    CHECK(cmp_exp(*Q, x2, xy) > 0);
    CHECK(cmp_exp(*Q, xy, y2) > 0);
    CHECK(cmp_exp(*Q, y2, x2) < 0);
    CHECK(cmp_exp(*Q, x2, x2) == 0);
    // degree dominates
    CHECK(cmp_exp(*Q, Exponent{0, 3}, x2) > 0);
}

TEST_CASE("ring: polynomial arithmetic") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);

    Polynomial s = x + y;
    CHECK((s * s).to_string() == "x^2 + 2*x*y + y^2");
    CHECK((x * x - y * y).to_string() == "x^2 - y^2");
    CHECK(((x + y) - (x + y)).is_zero());

    // exact division
    Polynomial q = (x * x - y * y).exact_div(x - y);
    CHECK(q == x + y);
    CHECK_THROWS_AS((x * x + y).exact_div(x), InternalError);

    // derivative
    Polynomial p = x * x * y + x;
    CHECK(p.derivative(0).to_string() == "2*x*y + 1");
    CHECK(p.derivative(1) == x * x);

    Int d = 0;
    CHECK(p.is_homogeneous(&d) == false);
    CHECK((x * x * y).is_homogeneous(&d));
    CHECK(d == 3);

    CHECK(mono(R, {2, 1}, Rat(2)).to_string() == "2*x^2*y");
    CHECK((mono(R, {2, 1}, Rat(2)) - mono(R, {0, 0}, Rat(1, 3))).to_string() ==
          "2*x^2*y - 1/3");
}

TEST_CASE("ring: context validation") {
    CHECK_THROWS_AS(RingContext::make({"x", "x"}, {1, 1}), InputError);
    CHECK_THROWS_AS(RingContext::make({"x", "y"}, {1, 0}), InputError);
    CHECK_THROWS_AS(RingContext::make({"x", "y"}, {1, -2}), InputError);
    CHECK_THROWS_AS(RingContext::make({}, {}), InputError);
}

// ======================= GROEBNER =======================

TEST_CASE("groebner: frozen hand oracle {x^2, x*y + y^2}") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    FreeModule F = FreeModule::trivial(R, 1);

    std::vector<Vec> gens;
    for (const auto& p : {x * x, x * y + y * y}) {
        Vec v(F);
        v.set(0, p);
        gens.push_back(v);
    }
    GroebnerBasis gb(F, gens, /*with_syzygies=*/true);

    // hand oracle: reduced basis {x^2, x*y + y^2, y^3}
    CHECK(poly_strings(rank1_polys(gb.basis())) ==
          std::set<std::string>{"x^2", "x*y + y^2", "y^3"});

    // membership
    Vec t(F);
    t.set(0, x * x * y);
    CHECK(gb.contains(t));
    t.set(0, x * y);
    CHECK_FALSE(gb.contains(t));
    CHECK(gb.normal_form(t)[0].to_string() == "-y^2");
    // normal forms are idempotent
    CHECK(gb.normal_form(gb.normal_form(t)) == gb.normal_form(t));

    // lift recombines
    Vec y3(F);
    y3.set(0, y * y * y);
    auto lift = gb.lift(y3);
    REQUIRE(lift.has_value());
    CHECK((*lift)[0] * (x * x) + (*lift)[1] * (x * y + y * y) == y * y * y);

    // syzygy module equals the Koszul relation (hand oracle: the inputs
    // form a regular sequence)
    const FreeModule& S = gb.syzygy_ambient();
    Vec koszul(S);
    koszul.set(0, (x * y + y * y).scaled(Rat(-1)));
    koszul.set(1, x * x);
    CHECK(submodule_equal(S, gb.syzygies(), {koszul}));
}

TEST_CASE("groebner: Koszul syzygies of (x, y, z)") {
    auto R = R3();
    FreeModule F = FreeModule::trivial(R, 1);
    std::vector<Vec> gens;
    for (int i = 0; i < 3; ++i) {
        Vec v(F);
        v.set(0, var_poly(R, i));
        gens.push_back(v);
    }
    GroebnerBasis gb(F, gens, true);
    const FreeModule& S = gb.syzygy_ambient();

    auto row = [&](int i, int j) { // x_j e_i - x_i e_j
        Vec v(S);
        v.set(i, var_poly(R, j));
        v.set(j, var_poly(R, i).scaled(Rat(-1)));
        return v;
    };
    CHECK(submodule_equal(S, gb.syzygies(), {row(0, 1), row(0, 2), row(1, 2)}));
}

TEST_CASE("groebner: canonical output independent of generator order") {
    auto R = Rmc();
    FreeModule F = FreeModule::trivial(R, 1);
    auto I = monomial_curve_ideal(R);
    std::vector<std::vector<Polynomial>> orders = {
        {I[0], I[1], I[2]}, {I[2], I[0], I[1]}, {I[1], I[2], I[0]}};
    std::vector<std::vector<std::string>> bases;
    for (auto& ord : orders) {
        std::vector<Polynomial> gb = ideal_groebner(R, ord);
        std::vector<std::string> strs;
        for (auto& p : gb) strs.push_back(p.to_string());
        bases.push_back(strs);
    }
    CHECK(bases[0] == bases[1]);
    CHECK(bases[1] == bases[2]);
}

TEST_CASE("groebner: degree slices match brute force") {
    auto R = Rmc();
    FreeModule F = FreeModule::trivial(R, 1);
    auto gens = ideal_as_vecs(R, monomial_curve_ci(R));
    auto basis = reduced_gens(F, gens);
    // the reduced basis spans the same slices as the raw generators
    for (Int d = 8; d <= 22; ++d)
        CHECK(oracle::slice_dimension(F, basis, d) ==
              oracle::slice_dimension(F, gens, d));
}

// ======================= PREIMAGE / COLON / SATURATION =======================

TEST_CASE("module ops: preimage of an ideal under multiplication") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    FreeModule F = FreeModule::trivial(R, 1);
    FreeModule src(R, {1}); // R(-1), so x*e0 is degree-correct

    Vec col(F);
    col.set(0, x);
    Vec tgt(F);
    tgt.set(0, y);
    auto pre = preimage(src, {col}, {tgt});
    REQUIRE(pre.size() == 1);
    CHECK(pre[0][0] == y); // (y) : x = (y)
}

TEST_CASE("module ops: colon, intersection, saturation") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);

    CHECK(poly_strings(colon_ideal(R, {x * y}, {x})) == std::set<std::string>{"y"});
    CHECK(poly_strings(colon_ideal(R, {x * x, y}, {x})) ==
          std::set<std::string>{"x", "y"});
    CHECK(poly_strings(intersect_ideals(R, {x}, {y})) == std::set<std::string>{"x*y"});

    FreeModule F = FreeModule::trivial(R, 1);
    auto [sat, m] = saturate_by_element(F, ideal_as_vecs(R, {x * x * y}), x);
    CHECK(poly_strings(rank1_polys(sat)) == std::set<std::string>{"y"});
    CHECK(m == 2);

    CHECK(is_nzd_on_quotient(F, ideal_as_vecs(R, {x * y}), x + y));
    CHECK_FALSE(is_nzd_on_quotient(F, ideal_as_vecs(R, {x * y}), x));
}

TEST_CASE("module ops: monomial curve residual (I_C : I_X) = (x, y)") {
    auto R = Rmc();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    auto colon = colon_ideal(R, monomial_curve_ci(R), monomial_curve_ideal(R));
    CHECK(poly_strings(colon) == std::set<std::string>{"x", "y"});
}

// ======================= PRESENTATIONS =======================

TEST_CASE("presentations: subquotient (x,y,z)/(x,y) is cyclic") {
    auto R = R3();
    FreeModule F = FreeModule::trivial(R, 1);
    std::vector<Polynomial> xyz = {var_poly(R, 0), var_poly(R, 1), var_poly(R, 2)};
    std::vector<Polynomial> xy = {var_poly(R, 0), var_poly(R, 1)};

    EmbeddedModule W = present_subquotient(F, ideal_as_vecs(R, xyz),
                                           ideal_as_vecs(R, xy));
    PresentedModule Wmin = minimize_presentation(W.pm);
    REQUIRE(Wmin.ngens() == 1);
    CHECK(Wmin.gens.twists[0] == 1); // generated by the class of z
    CHECK(poly_strings(annihilator(Wmin)) == std::set<std::string>{"x", "y"});
    CHECK(krull_dimension(Wmin) == 1);
}

TEST_CASE("presentations: unit entries cancel") {
    auto R = R2();
    Polynomial x = var_poly(R, 0);
    PresentedModule M{FreeModule(R, {0, 1}), {}};
    Vec rel(M.gens);
    rel.set(0, x);
    rel.set(1, Polynomial(R, Rat(-1)));
    M.relations.push_back(rel);

    PresentedModule Mmin = minimize_presentation(M);
    CHECK(Mmin.ngens() == 1);
    CHECK(Mmin.gens.twists[0] == 0);
    CHECK(Mmin.relations.empty());
}

TEST_CASE("presentations: coords_of recombines") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    FreeModule F = FreeModule::trivial(R, 1);
    EmbeddedModule E = present_submodule(F, ideal_as_vecs(R, {x * x, x * y + y * y}));

    Vec y3(F);
    y3.set(0, y * y * y);
    auto c = E.coords_of(y3);
    REQUIRE(c.has_value());
    Vec back(F);
    for (size_t t = 0; t < E.gens.size(); ++t) back += E.gens[t].scaled((*c)[(int)t]);
    CHECK(back == y3);

    Vec xy(F);
    xy.set(0, x * y);
    CHECK_FALSE(E.coords_of(xy).has_value());
}

TEST_CASE("presentations: annihilator of a diagonal cokernel") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule M{FreeModule::trivial(R, 2), {}};
    Vec r1(M.gens), r2(M.gens);
    r1.set(0, x);
    r2.set(1, y);
    M.relations = {r1, r2};
    CHECK(poly_strings(annihilator(M)) == std::set<std::string>{"x*y"});
}

TEST_CASE("presentations: kill_by_ideal finds the socle submodule") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    // { v in R/(xy) : x v = 0 } = (y)/(xy)
    PresentedModule M = PresentedModule::cyclic(R, {x * y});
    EmbeddedModule K = kill_by_ideal(M, {x});
    PresentedModule Kmin = minimize_presentation(K.pm);
    REQUIRE(Kmin.ngens() == 1);
    CHECK(Kmin.gens.twists[0] == 1);
    CHECK(poly_strings(annihilator(Kmin)) == std::set<std::string>{"x"});
}

// ======================= RESOLUTIONS / BETTI =======================

TEST_CASE("resolution: Koszul complex of the maximal ideal (hand oracle 1,3,3,1)") {
    auto R = R3();
    PresentedModule M = PresentedModule::cyclic(
        R, {var_poly(R, 0), var_poly(R, 1), var_poly(R, 2)});
    Resolution res = minimal_resolution(M);
    CHECK(total_betti(res) == std::vector<int>{1, 3, 3, 1});

    BettiTable bt = betti_table(res);
    CHECK(bt[{0, 0}] == 1);
    CHECK(bt[{1, 1}] == 3);
    CHECK(bt[{2, 2}] == 3);
    CHECK(bt[{3, 3}] == 1);

    Invariants inv = module_invariants(M);
    CHECK(inv.pdim == 3);
    CHECK(inv.depth == 0);
    CHECK(inv.dim == 0);
}

TEST_CASE("resolution: Hilbert-Burch shape of the (3,4,5) monomial curve") {
    auto R = Rmc();
    PresentedModule M = PresentedModule::cyclic(R, monomial_curve_ideal(R));
    Resolution res = minimal_resolution(M);
    CHECK(total_betti(res) == std::vector<int>{1, 3, 2});

    BettiTable bt = betti_table(res);
    CHECK(bt[{1, 8}] == 1);
    CHECK(bt[{1, 9}] == 1);
    CHECK(bt[{1, 10}] == 1);
    CHECK(bt[{2, 13}] == 1);
    CHECK(bt[{2, 14}] == 1);

    Invariants inv = module_invariants(M);
    CHECK(inv.pdim == 2);
    CHECK(inv.depth == 1);
    CHECK(inv.dim == 1);
    CHECK(quotient_is_cm(R, monomial_curve_ideal(R)));
}

TEST_CASE("resolution: complete intersection (3,4,5) curve pair") {
    auto R = Rmc();
    PresentedModule M = PresentedModule::cyclic(R, monomial_curve_ci(R));
    Resolution res = minimal_resolution(M);
    CHECK(total_betti(res) == std::vector<int>{1, 2, 1});
    BettiTable bt = betti_table(res);
    CHECK(bt[{1, 8}] == 1);
    CHECK(bt[{1, 9}] == 1);
    CHECK(bt[{2, 17}] == 1); // Koszul: twist 8 + 9
}

// ======================= HILBERT SERIES =======================

TEST_CASE("hilbert: two routes agree and match hand expansion for R/(x^2, y^3)") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule M = PresentedModule::cyclic(R, {x * x, y * y * y});

    HilbertSeries H = hilbert_series_checked(M); // internal two-route check
    std::vector<ZZ> c = H.expand(6);
    CHECK(c == std::vector<ZZ>{1, 2, 2, 1, 0, 0, 0});

    // the resolution route yields the identical numerator
    CHECK(hilbert_series_from_resolution(minimal_resolution(M)).numerator ==
          H.numerator);
    CHECK(krull_dimension(M) == 0);
}

TEST_CASE("hilbert: semigroup series of the (3,4,5) monomial curve") {
    auto R = Rmc();
    PresentedModule M = PresentedModule::cyclic(R, monomial_curve_ideal(R));
    std::vector<ZZ> c = hilbert_series_checked(M).expand(40);

    // hand oracle: numerical semigroup <3,4,5> = all of N except {1, 2}
    for (Int d = 0; d <= 40; ++d) {
        bool in_semigroup = (d != 1 && d != 2);
        CHECK(c[(size_t)d] == (in_semigroup ? 1 : 0));
    }
    CHECK(krull_dimension(M) == 1);
}

TEST_CASE("hilbert: negative twists expand correctly") {
    auto R = R2();
    PresentedModule M = PresentedModule::free_module(FreeModule(R, {-2, 1}));
    std::vector<ZZ> c = hilbert_series_checked(M).expand(1);
    CHECK(c == std::vector<ZZ>{3, 5}); // dim R(2)_d = d+3, dim R(-1)_d = d
}

TEST_CASE("hilbert: brute-force slice oracle") {
    auto R = R3();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);
    PresentedModule M = PresentedModule::cyclic(R, {x * y, x * z});
    CHECK(oracle::series_mismatch(M, hilbert_series_checked(M), 0, 10) ==
          std::nullopt);

    auto Rw = Rmc();
    PresentedModule Mw = PresentedModule::cyclic(Rw, monomial_curve_ideal(Rw));
    CHECK(oracle::series_mismatch(Mw, hilbert_series_checked(Mw), 0, 24) ==
          std::nullopt);
}

TEST_CASE("hilbert: zero module sentinel") {
    auto R = R2();
    PresentedModule Z = PresentedModule::cyclic(R, {Polynomial(R, Rat(1))});
    CHECK(is_zero_module(Z));
    CHECK(krull_dimension(Z) == -1);
}

// ======================= INVARIANTS =======================

TEST_CASE("invariants: regular sequences") {
    auto R = R3();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);
    CHECK(is_regular_sequence(R, {x, y, z}));
    CHECK_FALSE(is_regular_sequence(R, {x * y, x * z}));
    CHECK(is_regular_sequence(R, {})); // empty sequence is vacuously regular

    auto Q = R2();
    Polynomial a = var_poly(Q, 0), b = var_poly(Q, 1);
    CHECK(is_regular_sequence(Q, {a * a, a * b + b * b}));

    auto Rw = Rmc();
    CHECK(is_regular_sequence(Rw, monomial_curve_ci(Rw)));
    CHECK_FALSE(is_regular_sequence(Rw, monomial_curve_ideal(Rw))); // 3 gens, height 2
}

TEST_CASE("invariants: height, CM, depth via two routes") {
    auto R = R3();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);

    CHECK(ideal_height(R, {x * y, x * z}) == 1);
    CHECK(ideal_height(R, {x, y}) == 2);

    // R/(xy, z) is CM of dimension 1
    CHECK(quotient_is_cm(R, {x * y, z}));
    // R/(xy, xz) is not CM: dim 2, depth 1
    CHECK_FALSE(quotient_is_cm(R, {x * y, x * z}));

    PresentedModule M = PresentedModule::cyclic(R, {x * y, x * z});
    // module_invariants already cross-checks depth against Ext vanishing;
    // repeat the Ext route explicitly as a frozen oracle
    Invariants inv = module_invariants(M);
    CHECK(inv.dim == 2);
    CHECK(inv.depth == 1);
    CHECK(inv.pdim == 2);

    auto exts = ext_modules(M, PresentedModule::free_module(FreeModule::trivial(R, 1)));
    REQUIRE(exts.size() == 3);
    CHECK(is_zero_module(exts[0]));
    CHECK_FALSE(is_zero_module(exts[1]));
    CHECK_FALSE(is_zero_module(exts[2]));
}

TEST_CASE("invariants: MCM over a quotient") {
    auto R = R3();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1), z = var_poly(R, 2);

    // (x, y)/(xy) is MCM over R/(xy, z)? ann((x,y)/(xy)) does not contain z
    // -> use modules genuinely over the quotient:
    // R/(xy, z) over itself is MCM
    PresentedModule M = PresentedModule::cyclic(R, {x * y, z});
    CHECK(is_mcm_over(M, R, {x * y, z}));

    // R/(x, y, z) has depth 0 < 1 = dim R/(xy, z): not MCM
    PresentedModule N = PresentedModule::cyclic(R, {x, y, z});
    CHECK_FALSE(is_mcm_over(N, R, {x * y, z}));

    // annihilator containment is enforced
    CHECK_THROWS_AS(is_mcm_over(PresentedModule::cyclic(R, {z}), R, {x * y, z}),
                    InputError);
}

// ======================= HOM / EXT =======================

TEST_CASE("hom: Hom(R/(x), R/(xy)) is cyclic, generated by multiplication by y") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule A = PresentedModule::cyclic(R, {x});
    PresentedModule B = PresentedModule::cyclic(R, {x * y});

    HomModule H = hom_module(A, B);
    PresentedModule Hmin = minimize_presentation(H.pm);
    REQUIRE(Hmin.ngens() == 1);
    CHECK(Hmin.gens.twists[0] == 1);
    CHECK(poly_strings(annihilator(Hmin)) == std::set<std::string>{"x"});

    REQUIRE(H.pm.ngens() == 1);
    CHECK(H.eval[0][0][0] == y); // the generator sends 1 to y
}

TEST_CASE("hom: Hom(R, M) recovers M") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule A = PresentedModule::free_module(FreeModule::trivial(R, 1));
    PresentedModule B = PresentedModule::cyclic(R, {x * y});
    HomModule H = hom_module(A, B);
    CHECK(hilbert_series_checked(H.pm) == hilbert_series_checked(B));
}

TEST_CASE("hom: coordinates of an explicit map round-trip") {
    auto R = R2();
    Polynomial x = var_poly(R, 0);
    PresentedModule A = PresentedModule::cyclic(R, {x});
    HomModule H = hom_module(A, A);

    // the identity map
    std::vector<Vec> images;
    Vec e(A.gens);
    e.set(0, Polynomial(R, Rat(1)));
    images.push_back(e);
    auto c = hom_coords(H, images);
    REQUIRE(c.has_value());
    ModuleMap f = H.as_map(*c);
    CHECK(map_well_defined(f));
    CHECK(f.degree == 0);
    CHECK(is_isomorphism(f));

    // x * identity is trivial in Hom(R/(x), R/(x)) but still a map
    Vec xe(A.gens);
    xe.set(0, x);
    auto cx = hom_coords(H, {xe});
    REQUIRE(cx.has_value());

    // sending 1 to a non-annihilated element is not a homomorphism: into
    // R/(x^2), 1 -> 1 would need x*1 = 0 which fails
    PresentedModule B = PresentedModule::cyclic(R, {x * x});
    HomModule H2 = hom_module(A, B);
    Vec bad(B.gens);
    bad.set(0, Polynomial(R, Rat(1)));
    CHECK_FALSE(hom_coords(H2, {bad}).has_value());
}

TEST_CASE("hom: biduality of R/(x) against R/(xy)") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    BidualityData D = biduality_map(PresentedModule::cyclic(R, {x}),
                                    PresentedModule::cyclic(R, {x * y}));
    CHECK(map_well_defined(D.eval));
    CHECK(is_isomorphism(D.eval));
}

TEST_CASE("hom into ideal: duals with honest ring-element values") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    FreeModule F = FreeModule::trivial(R, 1);

    // Hom((x,y), R) = R * (inclusion): one generator whose value on each
    // module generator is that generator itself
    EmbeddedModule I = present_submodule(F, ideal_as_vecs(R, {x, y}));
    HomIntoIdeal H = hom_into_ideal(I.pm, {Polynomial(R, Rat(1))}, 0);
    REQUIRE(H.gens.size() == 1);
    for (size_t t = 0; t < I.gens.size(); ++t) CHECK(H.gens[0][(int)t] == I.gens[t][0]);
    CHECK(H.pm.relations.empty()); // free of rank one

    // Hom(R/(x), (xy)) = 0: torsion cannot map into an ideal
    HomIntoIdeal Z = hom_into_ideal(PresentedModule::cyclic(R, {x}), {x * y}, 0);
    CHECK(Z.gens.empty());

    // End((x,y)) = R, again the identity
    HomIntoIdeal E = hom_into_ideal(I.pm, {x, y}, 0);
    REQUIRE(E.gens.size() == 1);
    for (size_t t = 0; t < I.gens.size(); ++t) CHECK(E.gens[0][(int)t] == I.gens[t][0]);
}

TEST_CASE("ext: Koszul duality for cyclic complete intersections") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule Rfree = PresentedModule::free_module(FreeModule::trivial(R, 1));

    // Ext^i(R/(x,y), R): zero for i < 2, R/(x,y)(2) at the top
    auto exts = ext_modules(PresentedModule::cyclic(R, {x, y}), Rfree);
    REQUIRE(exts.size() == 3);
    CHECK(is_zero_module(exts[0]));
    CHECK(is_zero_module(exts[1]));
    CHECK_FALSE(is_zero_module(exts[2]));
    LaurentZ want; // t^-2 * (1 - t)^2
    want.add(-2, 1);
    want.add(-1, -2);
    want.add(0, 1);
    CHECK(hilbert_series_checked(exts[2]).numerator == want);

    // Ext^1(R/(x^2), R) = R/(x^2)(2)
    auto exts2 = ext_modules(PresentedModule::cyclic(R, {x * x}), Rfree);
    REQUIRE(exts2.size() == 2);
    CHECK(is_zero_module(exts2[0]));
    LaurentZ want2; // t^-2 * (1 - t^2)
    want2.add(-2, 1);
    want2.add(0, -1);
    CHECK(hilbert_series_checked(exts2[1]).numerator == want2);
}

// ======================= MAP HOMOLOGY =======================

TEST_CASE("maps: kernel, image, cokernel of multiplication") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);

    // multiplication by x on R/(xy): kernel = (y)/(xy), cokernel = R/(x)
    PresentedModule M = PresentedModule::cyclic(R, {x * y});
    ModuleMap f;
    f.src = M;
    f.dst = M;
    f.degree = 1;
    Vec img(M.gens);
    img.set(0, x);
    f.images = {img};
    REQUIRE(map_well_defined(f));

    PresentedModule K = minimize_presentation(map_kernel(f).pm);
    REQUIRE(K.ngens() == 1);
    CHECK(K.gens.twists[0] == 1);
    CHECK(poly_strings(annihilator(K)) == std::set<std::string>{"x"});

    PresentedModule C = minimize_presentation(map_cokernel(f));
    CHECK(poly_strings(annihilator(C)) == std::set<std::string>{"x"});
    CHECK(krull_dimension(C) == 1);
}

TEST_CASE("maps: homology of a Koszul-like pair") {
    auto R = R2();
    Polynomial x = var_poly(R, 0), y = var_poly(R, 1);
    PresentedModule Rfree = PresentedModule::free_module(FreeModule::trivial(R, 1));
    PresentedModule R2free = PresentedModule::free_module(FreeModule(R, {1, 1}));
    PresentedModule Rtop = PresentedModule::free_module(FreeModule(R, {2}));

    // R(-2) --(-y, x)--> R(-1)^2 --(x, y)--> R : homology at the middle is 0
    ModuleMap d2;
    d2.src = Rtop;
    d2.dst = R2free;
    d2.degree = 0;
    Vec c(R2free.gens);
    c.set(0, y.scaled(Rat(-1)));
    c.set(1, x);
    d2.images = {c};

    ModuleMap d1;
    d1.src = R2free;
    d1.dst = Rfree;
    d1.degree = 0;
    Vec i0(Rfree.gens), i1(Rfree.gens);
    i0.set(0, x);
    i1.set(0, y);
    d1.images = {i0, i1};

    REQUIRE(map_well_defined(d2));
    REQUIRE(map_well_defined(d1));
    CHECK(is_zero_module(map_homology(d2, d1).pm));

    // and the cokernel of d1 is R/(x,y)
    PresentedModule C = map_cokernel(d1);
    CHECK(poly_strings(annihilator(C)) == std::set<std::string>{"x", "y"});
}

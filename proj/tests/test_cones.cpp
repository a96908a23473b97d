#include "doctest.h"

#include "artifact/cones.hpp"
#include "artifact/suites.hpp"

#include <cmath>

using namespace stq;

namespace {
StElement apt(std::vector<Vec> v) { return make_apartment(v); }
Q value(const PartialFraction& f, const Vec& z) {
    auto v = eval_pfrac(f, z);
    REQUIRE(v);
    return *v;
}
FourierSpec spec2(std::vector<Vec> rays, std::vector<int> n = {1, 1}) {
    FourierSpec s;
    s.cone.rays = rays;
    s.u = {{1, 0}, {0, 1}};
    s.n = n;
    return s;
}
} // namespace

TEST_CASE("cones to Steinberg elements") {
    Vec e1 = {1, 0}, e2 = {0, 1};
    CHECK(cone_to_steinberg(Cone{{e1, e2}}, 2) == apt({e1, e2}));
    CHECK(cone_to_steinberg(Cone{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 3) == apt({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(cone_to_steinberg(Cone{{e1}}, 2).empty());
    CHECK(cone_to_steinberg(Cone{{e2, e1}}, 2) == apt({e1, e2}));
    CHECK(cone_contains(Cone{{e1, e2}}, {1, 2}));
    CHECK(cone_contains(Cone{{e1, e2}}, {0, 2}));
    CHECK_FALSE(cone_contains(Cone{{e1, e2}}, {-1, 2}));
    CHECK(cone_contains(Cone{{{1}, {-1}}}, {-5}));
}

TEST_CASE("partial fractions") {
    Vec e1 = {1, 0}, e2 = {0, 1}, s = {1, 1};
    Vec z = {2, 3};
    CHECK(value(rho(apt({e1, e2})), z) == Q(1, 6));

    StElement rel = apt({e1, e2});
    lc_add(rel, apt({e1, s}), -1);
    lc_add(rel, apt({s, e2}), -1);
    CHECK(value(rho(rel), z) == 0);
    CHECK(st_equality_oracle(rel));

    // degree -3 in one variable
    PartialFraction f = rho(AptKey{IVec{1}}, {3});
    CHECK(value(f, {2}) == Q(1, 8));
    PartialFraction g = rho(apt({{2}}));
    CHECK(value(g, {2}) == Q(1, 2));
    PartialFraction h = rho(make_apartment({{2}}).begin()->first, {3});
    CHECK(value(h, {4}) == value(h, {2}) / 8);

    PartialFraction sing = rho(apt({e1, e2}));
    CHECK_FALSE(eval_pfrac(sing, {0, 3}));
}

TEST_CASE("equality oracle") {
    Vec a = {1, 0}, b = {0, 1};
    St2Element defect = st2_product(make_L({a}), make_L({b}));
    lc_add(defect, make_L({a, b}), -1);
    lc_add(defect, make_L({b, a}), -1);
    CHECK(st2_equality_oracle(defect));
    CHECK_FALSE(st2_equality_oracle(make_L({a, b})));

    Rng r(21, 0);
    for (int t = 0; t < 50; ++t) {
        int d = 2 + t % 2;
        StElement x = apt(random_basis(r, d));
        StElement y = flag_expand(x, standard_flag(d));
        lc_add(y, x, -1);
        CHECK(st_equality_oracle(y));
    }
}

TEST_CASE("fourier coefficients") {
    FourierSpec li = standard_li_spec({2, 1, 3});
    CHECK(fourier_coefficient(li, {1, 2, 4}) == Q(1, 1 * 2 * 64));
    CHECK(fourier_coefficient(li, {2, 1, 4}) == 0);
    CHECK(fourier_coefficient(li, {0, 2, 4}) == 0);
    CHECK(fourier_coefficient(standard_li_spec({2}), {-3}) == 0);
    CHECK(fourier_coefficient(standard_li_spec({2}), {3}) == Q(1, 9));
}

TEST_CASE("truncated sums against Bernoulli values") {
    FourierSpec s;
    s.cone.rays = {{1}, {-1}};
    s.u = {{1}};
    s.n = {2};
    CHECK(std::abs(truncated_fourier_sum(s, {1.0 / 3}, 10000) - bernoulli_reference(2, 1.0 / 3)) < 1e-6);
    // -(2 pi i)^2 / 2 * B_2(1/3)
    double b2 = 1.0 / 9 - 1.0 / 3 + 1.0 / 6;
    CHECK(std::abs(bernoulli_reference(2, 1.0 / 3) - std::complex<double>(2 * M_PI * M_PI * b2, 0)) < 1e-12);
    s.n = {1};
    auto want = std::complex<double>(0, -2 * M_PI) * (1.0 / 3 - 0.5);
    CHECK(std::abs(bernoulli_reference(1, 1.0 / 3) - want) < 1e-12);
    CHECK(std::abs(truncated_fourier_sum(s, {1.0 / 3}, 10000) - want) < 1e-2);
    CHECK_THROWS_AS(truncated_fourier_sum(s, {0.0}, 100), std::invalid_argument);
}

TEST_CASE("coefficient shuffle") {
    FourierSpec l1 = standard_li_spec({1});
    std::vector<std::pair<Q, FourierSpec>> dec{{1, spec2({{0, 1}, {1, 1}})}, {1, spec2({{1, 0}, {1, 1}})}, {-1, spec2({{1, 1}})}};
    CHECK(coefficient_shuffle_check(l1, l1, dec, 25).ok);
    auto bad = dec;
    bad[0].second.n = {1, 2};
    CheckResult r = coefficient_shuffle_check(l1, l1, bad, 25);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.size() == 2);
    CHECK(coefficient_shuffle_check(l1, l1, bad, 0).ok);
}

TEST_CASE("homogeneity") {
    FourierSpec s = standard_li_spec({2, 1});
    CHECK(homogeneity_check(s, 2, 6).ok);
    CHECK(homogeneity_check(s, 3, 6).ok);
    CHECK(homogeneity_check(s, 1, 6).ok);
    // an exponent with no matching functional makes the claimed degree wrong
    FourierSpec broken = standard_li_spec({2});
    broken.n = {2, 1};
    CHECK_FALSE(homogeneity_check(broken, 2, 6).ok);
}

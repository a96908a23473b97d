#include "doctest.h"

#include "artifact/barcplx.hpp"
#include "artifact/st2.hpp"
#include "artifact/suites.hpp"

using namespace stq;

namespace {
const Vec e1 = {1, 0, 0}, e2 = {0, 1, 0}, e3 = {0, 0, 1};
StElement apt(std::vector<Vec> v) { return make_apartment(v); }
BarElement lw(std::vector<Vec> v) { return BarElement{{line_word(v), Q(1)}}; }
BarElement comb(std::initializer_list<std::pair<Q, BarElement>> xs) {
    BarElement r;
    for (auto& [c, x] : xs) lc_add(r, x, c);
    return r;
}
} // namespace

TEST_CASE("bar differential") {
    Vec a = {1, 0}, b = {0, 1};
    CHECK(bar_differential(lw({a, b})) == bar_normalize(make_word({apt({a, b})})));
    BarElement d3 = bar_differential(lw({e1, e2, e3}));
    BarElement expect = comb({{1, make_word({apt({e1, e2}), apt({e3})})}, {-1, make_word({apt({e1}), apt({e2, e3})})}});
    CHECK(d3 == bar_normalize(expect));

    Rng r(11, 0);
    for (int t = 0; t < 30; ++t) {
        int d = 2 + t % 3;
        auto v = random_basis(r, d);
        BarElement w = lw(v);
        CHECK(bar_differential(bar_differential(w)).empty());
    }
}

TEST_CASE("bar shuffle and deconcatenation") {
    CHECK(bar_shuffle(lw({e1}), lw({e2})) == comb({{1, lw({e1, e2})}, {1, lw({e2, e1})}}));
    BarElement s = bar_shuffle(lw({e1, e2}), lw({e3}));
    CHECK(s.size() == 3);
    CHECK(s == comb({{1, lw({e1, e2, e3})}, {1, lw({e1, e3, e2})}, {1, lw({e3, e1, e2})}}));

    Vec a = {1, 0, 0, 0}, b = {0, 1, 1, 0}, c = {0, 0, 1, 0}, d = {1, 1, 1, 1};
    BarElement x = lw({a, b}), y = lw({c}), z = lw({d});
    CHECK(bar_shuffle(bar_shuffle(x, y), z) == bar_shuffle(x, bar_shuffle(y, z)));

    for (int m = 1; m <= 3; ++m) {
        std::vector<Vec> all = {e1, e2, e3};
        std::vector<Vec> vs(all.begin(), all.begin() + m);
        Word w = line_word(vs);
        auto parts = deconcat(w);
        CHECK(parts.size() == (size_t)m + 1);
        for (auto& [p, q] : parts) {
            Word j = p;
            j.insert(j.end(), q.begin(), q.end());
            CHECK(j == w);
        }
    }
}

TEST_CASE("hyperplane projection") {
    Vec a = {1, 0}, b = {0, 1};
    CHECK(p_H_project(lw({a, b}), {1, 1}) == lw({a, b}));
    CHECK(p_H_project(lw({a, b}), {1, 0}).empty());
    CHECK_THROWS(p_H_project(make_word({apt({a, b})}), {1, 1}));

    // with h(v_i) = 1 only one word of s(I) survives
    std::vector<Vec> v = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec h = {1, 1, 1};
    BarElement p = p_H_project(embed_s(make_I(v)), h);
    REQUIRE(p.size() == 1);
    CHECK(p.begin()->first == line_word(v));
    CHECK(abs(p.begin()->second) == 1);
}

TEST_CASE("shuffle span reduction") {
    Vec a = {1, 0}, b = {0, 1};
    CHECK(shuffle_span_reduce(comb({{1, lw({a, b})}, {1, lw({b, a})}})).empty());
    BarElement r = shuffle_span_reduce(lw({a, b}));
    CHECK(r.size() == 1);
    CHECK(shuffle_span_reduce(comb({{1, r}, {-1, lw({a, b})}})).empty());
    CHECK(shuffle_span_reduce(BarElement{}).empty());
    CHECK(shuffle_span_reduce(r) == r);

    BarElement x = comb({{2, lw({e1, e2, e3})}, {-1, lw({e3, e1, e2})}, {Q(1, 2), lw({e2, e3, e1})}});
    BarElement rx = shuffle_span_reduce(x);
    CHECK(shuffle_span_reduce(rx) == rx);
    CHECK(shuffle_span_reduce(comb({{1, x}, {5, bar_shuffle(lw({e1}), lw({e2, e3}))}})) == rx);
    CHECK_FALSE(rx.empty());
}

TEST_CASE("symbols are cycles") {
    Rng r(5, 1);
    for (int t = 0; t < 50; ++t) {
        int d = 2 + t % 3;
        auto v = random_basis(r, d);
        CHECK(bar_differential(embed_s(t % 2 ? make_L(v) : make_I(v))).empty());
    }
}

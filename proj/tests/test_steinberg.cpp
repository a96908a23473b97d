#include "doctest.h"

#include "artifact/steinberg.hpp"

using namespace stq;

namespace {
StElement apt(std::vector<Vec> v) { return make_apartment(v); }
StElement sum(std::initializer_list<std::pair<Q, StElement>> xs) {
    StElement r;
    for (auto& [c, x] : xs) lc_add(r, x, c);
    return r;
}
} // namespace

TEST_CASE("make_apartment") {
    CHECK(apt({{0, 1}, {1, 0}}) == sum({{-1, apt({{1, 0}, {0, 1}})}}));
    CHECK(apt({{1, 0}, {2, 0}}).empty());
    CHECK(apt({{-2, 0}, {1, 1}}) == apt({{1, 0}, {1, 1}}));
}

TEST_CASE("flag expansion") {
    Flag f = standard_flag(2);
    CHECK(flag_expand(apt({{1, 0}, {0, 1}}), f) == apt({{1, 0}, {0, 1}}));
    StElement x = flag_expand(apt({{0, 1}, {1, 1}}), f);
    CHECK(x == sum({{1, apt({{1, 0}, {1, 1}})}, {-1, apt({{1, 0}, {0, 1}})}}));
    CHECK(flag_expand(x, f) == x);
    Vec v0 = {1, 0}, v1 = {0, 1}, v2 = {1, 1};
    StElement rel = sum({{1, apt({v1, v2})}, {-1, apt({v0, v2})}, {1, apt({v0, v1})}});
    CHECK(is_zero(rel));
    CHECK_FALSE(is_zero(apt({{1, 0}, {0, 1}})));
    CHECK(is_zero(sum({{1, apt({{1, 2}, {3, 1}})}, {-1, apt({{Q(7, 3), Q(14, 3)}, {3, 1}})}})));
}

TEST_CASE("products and residues") {
    CHECK(st_multiply(apt({{1}}), apt({{1}})).empty());
    StElement e1 = apt({{1, 0}}), e2 = apt({{0, 1}});
    CHECK(st_multiply(e1, e2) == apt({{1, 0}, {0, 1}}));
    CHECK(st_multiply(e2, e1) == sum({{-1, apt({{1, 0}, {0, 1}})}}));
    CHECK(residue(apt({{1, 0}, {0, 1}}), {1, 0}) == apt({{1}}));
    CHECK(residue(apt({{0, 1}, {1, 1}}), {1, 0}).empty());
    CHECK_THROWS(residue(apt({{1, 0}, {0, 1}}), {0, 0, 1}));
}

TEST_CASE("ash-rudolph small cases") {
    StElement r = ash_rudolph_reduce(apt({{1, 0}, {1, 2}}));
    CHECK(r == sum({{1, apt({{1, 0}, {1, 1}})}, {1, apt({{1, 1}, {1, 2}})}}));
    StElement id = apt({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(ash_rudolph_reduce(id) == id);
    StElement big = apt({{1, 2, 3}, {-2, 5, 1}, {4, 0, 7}});
    StElement red = ash_rudolph_reduce(big);
    for (auto& [k, c] : red) {
        Mat m;
        for (auto& p : k) m.push_back(to_vec(p));
        CHECK(abs(det(m)) == 1);
    }
    lc_add(red, big, -1);
    CHECK(is_zero(red));
}

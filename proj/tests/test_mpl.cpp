#include "doctest.h"

#include "artifact/mpl.hpp"
#include "artifact/suites.hpp"

#include <tuple>

using namespace stq;

namespace {

Monomial mono(std::vector<long> e, Q phase = 0) {
    Vec v;
    for (long x : e) v.push_back(x);
    return make_monomial(phase, v);
}
LiGen li(std::vector<int> n, std::vector<Monomial> m) { return LiGen{n, m}; }
LiSum one(const LiGen& g, const Q& c = 1) { return LiSum{{g, c}}; }
FormalII ii(std::vector<IIArg> z) { return FormalII{z}; }

// right factors of delta_top grouped by the left factor and put in depth one normal form
std::map<LiGen, DepthOneNF> grouped(const TopTerms& t) {
    std::map<LiGen, LiSum> by;
    for (auto& [k, c] : t) lc_add(by[k.first], k.second, c);
    std::map<LiGen, DepthOneNF> out;
    for (auto& [l, r] : by) {
        DepthOneNF nf = depth1_nf(r.begin()->first.weight(), r, 1);
        if (!nf.empty()) out[l] = nf;
    }
    return out;
}

bool barsym_same(const BarSym& a, const BarSym& b) {
    BarSym d = a;
    barsym_add(d, b, -1);
    return barsym_empty(bar_sym_normalize(d));
}

using Triple = std::tuple<FormalII, IIProduct, IIProduct>;

} // namespace

TEST_CASE("iterated integral rewrites") {
    Monomial x = mono({1, 0}), y = mono({0, 1});
    CHECK(li_to_ii(standard_li({1})) == IISum{{ii({std::nullopt, mono({0}), mono({1})}), -1}});
    CHECK(ii_shuffle(ii({std::nullopt, x, y}), ii({std::nullopt, y, y})) ==
          IISum{{ii({std::nullopt, x, y, y}), 1}, {ii({std::nullopt, y, x, y}), 1}});
    CHECK(ii_reverse(ii({std::nullopt, x, y})) == IISum{{ii({y, x, std::nullopt}), -1}});
    IISum twice;
    for (auto& [k, c] : ii_reverse(ii({x, y, std::nullopt, y})))
        for (auto& [k2, c2] : ii_reverse(k)) lc_add(twice, k2, c * c2);
    CHECK(twice == IISum{{ii({x, y, std::nullopt, y}), 1}});
}

TEST_CASE("divergent integrals") {
    Monomial z1 = mono({1, 0, 0}), z2 = mono({0, 1, 0}), z3 = mono({0, 0, 1});
    LiSum want;
    lc_add(want, li({1}, {mono_div(z3, z2)}), Q(-1));
    lc_add(want, li({1}, {mono_div(z1, z2)}), Q(1));
    CHECK(divergent_reduce(ii({z1, z2, z3})) == want);
    CHECK(divergent_reduce(ii({std::nullopt, std::nullopt, z2, z3})) == one(li({2}, {mono_div(z3, z2)})));
    CHECK(divergent_reduce(ii({std::nullopt, z2, std::nullopt})).empty());
}

TEST_CASE("goncharov coproduct") {
    Monomial a = mono({1, 0, 0}), x = mono({0, 1, 0}), b = mono({0, 0, 1});
    IICoproduct c = goncharov_coproduct(ii({a, x, b}));
    CHECK(c.size() == 2);
    CHECK(c.count({ii({a, x, b}), IIProduct{}}));
    CHECK(c.count({ii({a, b}), IIProduct{ii({a, x, b})}}));

    Rng r(31, 0);
    auto arg = [&]() -> IIArg {
        long k = r.uniform(0, 3);
        if (k == 0) return std::nullopt;
        std::vector<long> e(3, 0);
        e[k - 1] = r.uniform(1, 2);
        return mono(e, Q(r.uniform(0, 1), 2));
    };
    for (int t = 0; t < 10; ++t) {
        std::vector<IIArg> z;
        for (int i = 0; i < 5; ++i) z.push_back(arg());
        FormalII w = ii(z);
        LinComb<Triple> lhs, rhs;
        for (auto& [k, c1] : goncharov_coproduct(w)) {
            for (auto& [k2, c2] : goncharov_coproduct(k.first)) lc_add(lhs, Triple{k2.first, k2.second, k.second}, c1 * c2);
            LinComb<std::pair<IIProduct, IIProduct>> acc{{{}, Q(1)}};
            for (auto& f : k.second) {
                LinComb<std::pair<IIProduct, IIProduct>> next;
                for (auto& [p, c3] : acc)
                    for (auto& [k3, c4] : goncharov_coproduct(f)) {
                        IIProduct l = p.first, rr = p.second;
                        l.push_back(k3.first);
                        rr.insert(rr.end(), k3.second.begin(), k3.second.end());
                        lc_add(next, std::make_pair(ii_product(l), ii_product(rr)), c3 * c4);
                    }
                acc = std::move(next);
            }
            for (auto& [p, c3] : acc) lc_add(rhs, Triple{k.first, p.first, p.second}, c1 * c3);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("depth one normal form") {
    LiSum x = one(li({2}, {mono({1, 0}, Q(1, 3))}));
    CHECK(depth1_to_sum(depth1_nf(2, x)) == x);
    for (int n = 1; n <= 4; ++n) {
        DepthOneNF inv = depth1_nf(n, one(li({n}, {mono({-1, 0})})));
        DepthOneNF want = depth1_nf(n, one(li({n}, {mono({1, 0})}), n % 2 ? 1 : -1));
        CHECK(inv == want);
    }
    DepthOneNF d = depth1_nf(2, one(li({2}, {mono({2, 0}, Q(1, 2))})));
    LiSum expect;
    lc_add(expect, li({2}, {mono({1, 0}, Q(1, 4))}), Q(2));
    lc_add(expect, li({2}, {mono({1, 0}, Q(3, 4))}), Q(2));
    CHECK(depth1_to_sum(d) == expect);

    // distribution relation Li_2(x^2) = 2 (Li_2(x) + Li_2(-x))
    LiSum dist = one(li({2}, {mono({2})}));
    lc_add(dist, li({2}, {mono({1})}), -2);
    lc_add(dist, li({2}, {mono({1}, Q(1, 2))}), -2);
    CHECK(depth1_nf(2, dist).empty());
}

TEST_CASE("truncated coproduct") {
    Monomial x1 = mono({1, 0}), x2 = mono({0, 1}), x12 = mono({1, 1});
    auto g21 = grouped(delta_top(standard_li({2, 1})));
    std::map<LiGen, DepthOneNF> want21;
    want21[li({2}, {x12})] = depth1_nf(1, one(li({1}, {x2})), 1);
    want21[li({1}, {x2})] = depth1_nf(2, one(li({2}, {x1})), 1);
    LiSum r;
    lc_add(r, li({2}, {x1}), -1);
    lc_add(r, li({2}, {x2}), -1);
    want21[li({1}, {x12})] = depth1_nf(2, r, 1);
    CHECK(g21 == want21);

    auto g11 = grouped(delta_top(standard_li({1, 1})));
    std::map<LiGen, DepthOneNF> want11;
    want11[li({1}, {x2})] = depth1_nf(1, one(li({1}, {x1})), 1);
    LiSum r11 = one(li({1}, {x2}));
    lc_add(r11, li({1}, {x1}), -1);
    want11[li({1}, {x12})] = depth1_nf(1, r11, 1);
    CHECK(g11 == want11);

    for (auto n : std::vector<std::vector<int>>{{1, 2}, {3, 1}, {2, 2}, {1, 1, 2}})
        for (auto& [k, c] : delta_top(standard_li(n))) CHECK(k.first.weight() + k.second.weight() == standard_li(n).weight());
}

TEST_CASE("sigma") {
    BarSym s = sigma(std::vector<LiGen>{li({1}, {mono({1, 0})}), li({1}, {mono({0, 1})})});
    CHECK(s == BarSym{{Mono{0, 0}, BarElement{{line_word({{1, 0}, {0, 1}}), Q(1)}}}});
    BarSym t = sigma(std::vector<LiGen>{li({1}, {mono({1, 1})}), li({1}, {mono({0, 2})})});
    CHECK(t == BarSym{{Mono{0, 0}, BarElement{{line_word({{1, 1}, {0, 1}}), Q(2)}}}});
    CHECK(barsym_empty(sigma(std::vector<LiGen>{li({1}, {mono({1, 1})}), li({1}, {mono({2, 2})})})));
}

TEST_CASE("truncated symbols") {
    Vec e1 = {1, 0}, e2 = {0, 1};
    // Li_{2,1}: ([e1+e2|e2] + [e2|e1] - [e1+e2|e1]) (x) e1
    BarSym want;
    BarElement w;
    lc_add(w, line_word({{1, 1}, e2}), Q(1));
    lc_add(w, line_word({e2, e1}), Q(1));
    lc_add(w, line_word({{1, 1}, e1}), Q(-1));
    want[Mono{1, 0}] = w;
    BarSym got = sigma(iterated_delta(one(standard_li({2, 1}))));
    CHECK(barsym_same(got, want));
    CHECK(barsym_same(goncharov_sigma(standard_li({2, 1})), want));
    CHECK(barsym_same(embed_s_sym(truncated_symbol_closed({2, 1})), want));

    St2Sym l11{{Mono{0, 0}, make_L({e1, e2})}};
    CHECK(st2_sym_equal(truncated_symbol_closed({1, 1}), l11));
    St2Sym l3{{Mono{2}, lc_scaled(make_L({{1}}), Q(1, 2))}};
    CHECK(st2_sym_equal(truncated_symbol_closed({3}), l3));

    for (auto n : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 3}, {1, 1, 1}, {2, 1, 1}}) {
        auto st = truncated_symbol(one(standard_li(n)));
        REQUIRE(st);
        CHECK(st2_sym_equal(*st, truncated_symbol_closed(n)));
    }
}

TEST_CASE("GL action") {
    PushedLi x = pushed_standard({2, 1}, 2);
    PushedLi same = gl_act(identity(2), x);
    CHECK(same.cols == x.cols);
    CHECK(same.coeff == x.coeff);

    for (int n = 1; n <= 3; ++n)
        for (long q : {2, 3, -2}) {
            PushedLi y = gl_act(Mat{{Q(q)}}, pushed_standard({n}, 1));
            auto st = truncated_symbol(expand_pushed(y));
            REQUIRE(st);
            Q f = 1;
            for (int i = 1; i < n; ++i) f *= q;
            St2Sym want;
            for (auto& [m, e] : truncated_symbol_closed({n})) want[m] = lc_scaled(e, f);
            CHECK(st2_sym_equal(*st, want));
        }

    Mat a = {{1, 2}, {0, 1}}, b = {{2, 0}, {1, 1}};
    PushedLi ab = gl_act(matmul(a, b), x), a_b = gl_act(a, gl_act(b, x));
    CHECK(ab.cols == a_b.cols);
    CHECK(ab.coeff == a_b.coeff);
    CHECK(st2_sym_equal(st2_sym_act(matmul(a, b), truncated_symbol_closed({2, 1})),
                        st2_sym_act(a, st2_sym_act(b, truncated_symbol_closed({2, 1})))));
}

TEST_CASE("identity verification") {
    auto terms = li22_identity();
    CHECK(verify_li_identity(terms, 2).ok);
    CHECK(verify_li_identity({}, 2).ok);
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].product || terms[i].li.n.size() < 2) continue;
        auto bad = terms;
        bad[i].li.coeff += 1;
        IdentityReport rep = verify_li_identity(bad, 2);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.residual.empty());
    }
}

#include "artifact/mpl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace stq {

namespace {

Z binom(int n, int k) {
    Z r;
    if (k < 0 || k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Q qpow(const Q& b, int e) {
    Q r = 1;
    Q base = e < 0 ? Q(1) / b : b;
    for (int i = 0; i < std::abs(e); ++i) r *= base;
    return r;
}

Z factorial(int n) {
    Z r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

bool lex_negative(const IVec& v) {
    for (auto& x : v)
        if (x != 0) return x < 0;
    return false;
}

} // namespace

Q reduce_phase(const Q& q) {
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Q r = q - Q(fl);
    r.canonicalize();
    return r;
}

bool Monomial::operator<(const Monomial& o) const { return std::tie(phase, exp) < std::tie(o.phase, o.exp); }

Monomial make_monomial(const Q& phase, const Vec& exp) { return {reduce_phase(phase), exp}; }
Monomial mono_unit(int d) { return {Q(0), Vec(d)}; }
Monomial mono_mul(const Monomial& a, const Monomial& b) { return make_monomial(a.phase + b.phase, add(a.exp, b.exp)); }
Monomial mono_inv(const Monomial& a) { return make_monomial(-a.phase, scale(a.exp, -1)); }
Monomial mono_div(const Monomial& a, const Monomial& b) { return mono_mul(a, mono_inv(b)); }
bool mono_is_constant(const Monomial& a) { return is_zero_vec(a.exp); }

int LiGen::weight() const { return std::accumulate(n.begin(), n.end(), 0); }
bool LiGen::operator<(const LiGen& o) const { return std::tie(n, m) < std::tie(o.n, o.m); }

LiGen standard_li(const std::vector<int>& n) {
    int k = (int)n.size();
    LiGen g{n, {}};
    for (int i = 0; i < k; ++i) {
        Vec e(k);
        e[i] = 1;
        g.m.push_back({Q(0), e});
    }
    return g;
}

// ---------------------------------------------------------------- iterated integrals

IIProduct ii_product(std::vector<FormalII> factors) {
    IIProduct r;
    for (auto& f : factors)
        if (f.weight() > 0) r.push_back(std::move(f));
    std::sort(r.begin(), r.end());
    return r;
}

IISum li_to_ii(const LiGen& g) {
    int k = g.depth();
    if (k == 0) throw std::invalid_argument("li_to_ii: empty index");
    int d = g.ambient();
    FormalII x;
    x.z.push_back(std::nullopt);
    Monomial partial = mono_unit(d);
    for (int i = 0; i < k; ++i) {
        x.z.push_back(partial);
        for (int j = 1; j < g.n[i]; ++j) x.z.push_back(std::nullopt);
        partial = mono_mul(partial, g.m[i]);
    }
    x.z.push_back(partial);
    return IISum{{x, Q(k % 2 ? -1 : 1)}};
}

IISum ii_shuffle(const FormalII& a, const FormalII& b) {
    if (a.z.front() != b.z.front() || a.z.back() != b.z.back())
        throw std::invalid_argument("ii_shuffle: endpoints differ");
    std::vector<IIArg> ma(a.z.begin() + 1, a.z.end() - 1), mb(b.z.begin() + 1, b.z.end() - 1);
    size_t n = ma.size() + mb.size();
    std::vector<bool> mask(n, false);
    std::fill(mask.begin() + ma.size(), mask.end(), true);
    IISum r;
    do {
        FormalII x;
        x.z.push_back(a.z.front());
        size_t ia = 0, ib = 0;
        for (size_t i = 0; i < n; ++i) x.z.push_back(mask[i] ? mb[ib++] : ma[ia++]);
        x.z.push_back(a.z.back());
        lc_add(r, x, Q(1));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return r;
}

IIProdSum ii_path_compose(const FormalII& x, const IIArg& a) {
    int n = x.weight();
    IIProdSum r;
    for (int k = 0; k <= n; ++k) {
        FormalII l, rt;
        l.z.assign(x.z.begin(), x.z.begin() + k + 1);
        l.z.push_back(a);
        rt.z.push_back(a);
        rt.z.insert(rt.z.end(), x.z.begin() + k + 1, x.z.end());
        lc_add(r, ii_product({l, rt}), Q(1));
    }
    return r;
}

IISum ii_reverse(const FormalII& x) {
    FormalII r{std::vector<IIArg>(x.z.rbegin(), x.z.rend())};
    return IISum{{r, Q(x.weight() % 2 ? -1 : 1)}};
}

IICoproduct goncharov_coproduct(const FormalII& x) {
    int n = x.weight();
    IICoproduct r;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx{0};
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1) idx.push_back(i);
        idx.push_back(n + 1);
        FormalII left;
        std::vector<FormalII> gaps;
        for (size_t p = 0; p < idx.size(); ++p) {
            left.z.push_back(x.z[idx[p]]);
            if (p + 1 < idx.size()) {
                FormalII g;
                g.z.assign(x.z.begin() + idx[p], x.z.begin() + idx[p + 1] + 1);
                gaps.push_back(std::move(g));
            }
        }
        lc_add(r, std::make_pair(left, ii_product(std::move(gaps))), Q(1));
    }
    return r;
}

LiSum divergent_reduce(const FormalII& x) {
    int n = x.weight();
    int pos = -1;
    for (int i = 1; i <= n; ++i) {
        if (!x.z[i]) continue;
        if (pos >= 0) throw std::invalid_argument("divergent_reduce: more than one nonzero middle argument");
        pos = i;
    }
    if (pos < 0) throw std::invalid_argument("divergent_reduce: no nonzero middle argument");
    int k = pos - 1, l = n - pos;
    Q c = Q(binom(k + l, k)) * ((k + 1) % 2 ? -1 : 1);
    const Monomial& z2 = *x.z[pos];
    LiSum r;
    if (x.z.back()) lc_add(r, LiGen{{k + l + 1}, {mono_div(*x.z.back(), z2)}}, c);
    if (x.z.front()) lc_add(r, LiGen{{k + l + 1}, {mono_div(*x.z.front(), z2)}}, -c);
    return r;
}

// ---------------------------------------------------------------- depth one

DepthOneNF depth1_nf(int weight, const LiSum& x, const Z& level) {
    Z w = 1;
    for (auto& [g, c] : x) {
        if (g.depth() != 1 || g.n[0] != weight) throw std::invalid_argument("depth1_nf: term of wrong shape");
        for (auto& e : g.m[0].exp) mpz_lcm(w.get_mpz_t(), w.get_mpz_t(), e.get_den_mpz_t());
    }
    if (level != 0) {
        if (level % w != 0) throw std::invalid_argument("depth1_nf: level does not cover the exponents");
        w = level;
    }
    DepthOneNF nf;
    nf.weight = weight;
    nf.level = w;
    for (auto& [g, c] : x) {
        const Monomial& m = g.m[0];
        if (mono_is_constant(m)) {
            lc_add(nf.constants, m.phase, c);
            continue;
        }
        IVec b = to_ivec(scale(m.exp, Q(w)));
        Q q = m.phase, coeff = c;
        if (lex_negative(b)) {
            for (auto& e : b) e = -e;
            q = -q;
            if ((weight - 1) % 2) coeff = -coeff;
        }
        Z gg = gcd_of(b);
        for (auto& e : b) e /= gg;
        coeff *= qpow(Q(gg), weight - 1);
        long gl = gg.get_si();
        for (long j = 0; j < gl; ++j) lc_add(nf.terms, std::make_pair(reduce_phase((q + j) / Q(gg)), b), coeff);
    }
    return nf;
}

LiSum depth1_to_sum(const DepthOneNF& nf) {
    LiSum r;
    for (auto& [k, c] : nf.terms) lc_add(r, LiGen{{nf.weight}, {{k.first, scale(to_vec(k.second), Q(1) / Q(nf.level))}}}, c);
    return r;
}

// ---------------------------------------------------------------- truncated coproduct

TopTerms delta_top(const LiGen& g) {
    int k = g.depth();
    if (k < 2) throw std::invalid_argument("delta_top: depth must be at least 2");
    TopTerms r;
    {
        LiGen left{std::vector<int>(g.n.begin() + 1, g.n.end()), std::vector<Monomial>(g.m.begin() + 1, g.m.end())};
        lc_add(r, std::make_pair(left, LiGen{{g.n[0]}, {g.m[0]}}), Q(1));
    }
    for (int i = 0; i + 1 < k; ++i) {
        int a = g.n[i], b = g.n[i + 1];
        auto merged = [&](int e) {
            LiGen l;
            for (int j = 0; j < k; ++j) {
                if (j == i + 1) continue;
                if (j == i) {
                    l.n.push_back(e);
                    l.m.push_back(mono_mul(g.m[i], g.m[i + 1]));
                } else {
                    l.n.push_back(g.n[j]);
                    l.m.push_back(g.m[j]);
                }
            }
            return l;
        };
        for (int p = b; p <= a + b - 1; ++p) {
            Q c = Q(binom(p - 1, b - 1)) * ((p - b) % 2 ? -1 : 1);
            lc_add(r, std::make_pair(merged(a + b - p), LiGen{{p}, {g.m[i + 1]}}), c);
        }
        for (int p = a; p <= a + b - 1; ++p) {
            Q c = -Q(binom(p - 1, a - 1)) * ((p - a) % 2 ? -1 : 1);
            lc_add(r, std::make_pair(merged(a + b - p), LiGen{{p}, {g.m[i]}}), c);
        }
    }
    return r;
}

DepthOneTensor iterated_delta(const LiSum& x) {
    DepthOneTensor cur;
    for (auto& [g, c] : x) lc_add(cur, std::vector<LiGen>{g}, c);
    while (true) {
        DepthOneTensor next;
        bool changed = false;
        for (auto& [fs, c] : cur) {
            if (fs[0].depth() < 2) {
                lc_add(next, fs, c);
                continue;
            }
            changed = true;
            for (auto& [lr, c2] : delta_top(fs[0])) {
                std::vector<LiGen> nf{lr.first, lr.second};
                nf.insert(nf.end(), fs.begin() + 1, fs.end());
                lc_add(next, nf, c * c2);
            }
        }
        cur = std::move(next);
        if (!changed) return cur;
    }
}

BarSym sigma(const std::vector<LiGen>& factors, const Q& coeff) {
    BarSym r;
    if (factors.empty() || coeff == 0) return r;
    int d = factors[0].ambient();
    std::vector<Vec> vs;
    Poly p = poly_one(d);
    for (auto& f : factors) {
        if (f.depth() != 1) throw std::invalid_argument("sigma: factor of depth other than one");
        const Vec& v = f.m[0].exp;
        if (is_zero_vec(v)) return r;
        vs.push_back(v);
        p = poly_mul(p, poly_pow(linear_form(v), f.n[0] - 1, d));
        p = lc_scaled(p, Q(1) / Q(factorial(f.n[0] - 1)));
    }
    if (rank(vs) < (int)vs.size()) return r;
    Q sat = saturation_index(vs);
    Word w = line_word(vs);
    for (auto& [m, c] : p) lc_add(r[m], w, coeff * sat * c);
    for (auto it = r.begin(); it != r.end();) it = it->second.empty() ? r.erase(it) : std::next(it);
    return r;
}

BarSym sigma(const DepthOneTensor& t) {
    BarSym r;
    for (auto& [fs, c] : t) barsym_add(r, sigma(fs, c));
    return r;
}

BarSym bar_sym_normalize(const BarSym& x) {
    BarSym r;
    for (auto& [m, b] : x) {
        BarElement n = bar_normalize(b);
        if (!n.empty()) r[m] = std::move(n);
    }
    return r;
}

BarSym embed_s_sym(const St2Sym& x) {
    BarSym r;
    for (auto& [m, e] : x) {
        BarElement b = embed_s(e);
        if (!b.empty()) r[m] = std::move(b);
    }
    return r;
}

St2Sym st2_sym_normal_form(const St2Sym& x) {
    St2Sym r;
    for (auto& [m, e] : x) {
        St2Element n = st2_normal_form(e);
        if (!n.empty()) r[m] = std::move(n);
    }
    return r;
}

bool st2_sym_equal(const St2Sym& a, const St2Sym& b) {
    St2Sym diff = a;
    for (auto& [m, e] : b) lc_add(diff[m], e, Q(-1));
    return is_zero_st2(diff);
}

St2Sym truncated_symbol_closed(const std::vector<int>& n) {
    int k = (int)n.size();
    std::vector<Vec> e;
    for (int i = 0; i < k; ++i) {
        Vec v(k);
        v[i] = 1;
        e.push_back(v);
    }
    St2Element l = make_L(e);
    St2Sym r;
    for (auto& [m, c] : divided_power_monomial(n)) r[m] = lc_scaled(l, c);
    return r;
}

namespace {

std::vector<std::vector<Vec>> independent_subsets(const std::vector<Vec>& lines, int k) {
    std::vector<std::vector<Vec>> out;
    int n = (int)lines.size();
    if (n < k) return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<Vec> s;
        for (int i = 0; i < n; ++i)
            if (pick[i]) s.push_back(lines[i]);
        if (rank(s) == k) out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

} // namespace

std::optional<St2Sym> solve_st2_sym(const BarSym& target, int k) {
    std::set<Point> first, last;
    for (auto& [m, b] : target)
        for (auto& [w, c] : b) {
            if ((int)w.size() != k || !is_line_word(w)) throw std::invalid_argument("solve_st2_sym: target is not a line word sum");
            first.insert(w.front()[0]);
            last.insert(w.back()[0]);
        }
    std::vector<Vec> fl, ll;
    for (auto& p : first) fl.push_back(to_vec(p));
    for (auto& p : last) ll.push_back(to_vec(p));
    std::vector<St2Element> fam;
    std::vector<BarElement> fam_s;
    for (auto& a : independent_subsets(fl, k))
        for (auto& b : independent_subsets(ll, k)) {
            St2Element g = make_pair_element(a, b);
            fam.push_back(g);
            fam_s.push_back(embed_s(g));
        }
    St2Sym r;
    for (auto& [m, b] : target) {
        auto sol = solve_in_span(b, fam_s);
        if (!sol) return std::nullopt;
        St2Element x;
        for (size_t j = 0; j < fam.size(); ++j)
            if ((*sol)[j] != 0) lc_add(x, fam[j], (*sol)[j]);
        x = st2_normal_form(x);
        if (!x.empty()) r[m] = std::move(x);
    }
    return r;
}

std::optional<St2Sym> truncated_symbol(const LiSum& x) {
    LiSum top;
    int d = -1;
    for (auto& [g, c] : x) {
        if (d < 0) d = g.ambient();
        if (g.ambient() != d) throw std::invalid_argument("truncated_symbol: mixed ambient dimensions");
        if (g.depth() == d) lc_add(top, g, c);
    }
    if (top.empty()) return St2Sym{};
    BarSym target = bar_sym_normalize(sigma(iterated_delta(top)));
    return solve_st2_sym(target, d);
}

BarSym goncharov_sigma(const LiGen& g) {
    if (g.depth() != 2) throw std::invalid_argument("goncharov_sigma: depth two only");
    BarSym r;
    for (auto& [ii, c0] : li_to_ii(g)) {
        for (auto& [term, c] : goncharov_coproduct(ii)) {
            const FormalII& left = term.first;
            const IIProduct& right = term.second;
            if (left.weight() == 0 || right.size() != 1) continue;
            auto nonzero = [](const FormalII& x) {
                int n = 0;
                for (int i = 1; i <= x.weight(); ++i) n += x.z[i].has_value();
                return n;
            };
            if (nonzero(left) != 1 || nonzero(right[0]) != 1) continue;
            LiSum l = divergent_reduce(left), rt = divergent_reduce(right[0]);
            for (auto& [lg, lc] : l)
                for (auto& [rg, rc] : rt) barsym_add(r, sigma({lg, rg}, c0 * c * lc * rc));
        }
    }
    return bar_sym_normalize(r);
}

// ---------------------------------------------------------------- GL action

PushedLi pushed_standard(const std::vector<int>& n, int d) {
    PushedLi x;
    x.n = n;
    for (int i = 0; i < d; ++i) {
        Vec e(d);
        e[i] = 1;
        x.cols.push_back(e);
    }
    return x;
}

PushedLi gl_act(const Mat& a, const PushedLi& x) {
    PushedLi r = x;
    for (auto& c : r.cols) c = matvec(a, c);
    return r;
}

LiSum expand_pushed(const PushedLi& x) {
    int d = (int)x.cols.size();
    int k = (int)x.n.size();
    if (k > d) throw std::invalid_argument("expand_pushed: depth exceeds dimension");
    Z l = 1;
    for (auto& c : x.cols)
        for (auto& e : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    std::vector<IVec> p;
    Z g = 0;
    for (auto& c : x.cols) {
        p.push_back(to_ivec(scale(c, Q(l))));
        for (auto& e : p.back()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("expand_pushed: zero matrix");
    for (auto& c : p)
        for (auto& e : c) e /= g;
    std::vector<Vec> pv;
    for (auto& c : p) pv.push_back(to_vec(c));
    Q dt = det(from_columns(pv));
    if (dt == 0) throw std::invalid_argument("expand_pushed: singular matrix");
    Z nn = abs(dt.get_num());
    int w = std::accumulate(x.n.begin(), x.n.end(), 0);
    Q coeff = x.coeff * qpow(Q(g) / Q(l), w - d) * qpow(Q(nn), w - d - 1);
    long N = nn.get_si();
    LiSum r;
    std::vector<long> c(d, 0);
    while (true) {
        LiGen li;
        li.n = x.n;
        for (int j = 0; j < k; ++j) {
            Q ph = 0;
            for (int i = 0; i < d; ++i) ph += Q(c[i]) * Q(p[j][i]);
            li.m.push_back(make_monomial(ph / Q(nn), scale(pv[j], Q(1) / Q(nn))));
        }
        lc_add(r, li, coeff);
        int i = 0;
        while (i < d && ++c[i] == N) c[i++] = 0;
        if (i == d) break;
    }
    return r;
}

St2Sym st2_sym_act(const Mat& a, const St2Sym& x) {
    St2Sym r;
    for (auto& [m, e] : x) {
        St2Element moved;
        for (auto& [pr, c] : e) {
            std::vector<Vec> av, bv;
            for (auto& v : key_vectors(pr.first)) av.push_back(matvec(a, v));
            for (auto& v : key_vectors(pr.second)) bv.push_back(matvec(a, v));
            lc_add(moved, make_pair_element(av, bv), c);
        }
        Poly pm = poly_linear_subst(Poly{{m, Q(1)}}, a);
        for (auto& [m2, c2] : pm) lc_add(r[m2], moved, c2);
    }
    return st2_sym_normal_form(r);
}

IdentityReport verify_li_identity(const std::vector<IdentityTerm>& terms, int d, uint64_t seed) {
    IdentityReport rep;
    LiSum total;
    int weight = -1;
    for (auto& t : terms) {
        if (t.product) continue;
        int w = std::accumulate(t.li.n.begin(), t.li.n.end(), 0);
        if (weight >= 0 && w != weight) throw std::invalid_argument("verify_li_identity: mixed weights");
        weight = w;
        if ((int)t.li.cols.size() != d) throw std::invalid_argument("verify_li_identity: matrix of wrong size");
        if ((int)t.li.n.size() < d) continue;
        lc_add(total, expand_pushed(t.li));
    }
    auto st = truncated_symbol(total);
    if (!st) throw std::runtime_error("verify_li_identity: symbol not in the image of s");
    rep.residual = *st;
    rep.ok = is_zero_st_infty(rep.residual, seed);
    return rep;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m) {
    std::string s;
    if (m.phase != 0) s += "e(" + to_string(m.phase) + ")";
    bool any = false;
    for (size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (m.exp[i] != 1) s += "^(" + to_string(m.exp[i]) + ")";
        any = true;
    }
    if (!any && m.phase == 0) s = "1";
    return s;
}

std::string to_string(const LiGen& g) {
    std::string s = "Li_";
    for (size_t i = 0; i < g.n.size(); ++i) s += (i ? "," : "") + std::to_string(g.n[i]);
    s += "(";
    for (size_t i = 0; i < g.m.size(); ++i) s += (i ? ", " : "") + to_string(g.m[i]);
    return s + ")";
}

std::string to_string(const FormalII& x) {
    std::string s = "I(";
    for (size_t i = 0; i < x.z.size(); ++i) {
        if (i == 1) s += "; ";
        else if (i + 1 == x.z.size()) s += "; ";
        else if (i) s += ", ";
        s += x.z[i] ? to_string(*x.z[i]) : "0";
    }
    return s + ")";
}

std::string to_string(const BarSym& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [m, b] : x) {
        if (!s.empty()) s += "\n";
        s += "(" + to_string(b) + ") * " + to_string(Poly{{m, Q(1)}});
    }
    return s;
}

std::string to_string(const St2Sym& x) {
    if (x.empty()) return "0";
    std::string s;
    for (auto& [m, e] : x) {
        if (!s.empty()) s += "\n";
        s += "(" + to_string(e) + ") * " + to_string(Poly{{m, Q(1)}});
    }
    return s;
}

} // namespace stq

#include "artifact/st2.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace stq {

St2Element make_pair_element(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    auto [sa, ka] = apartment_key(a);
    auto [sb, kb] = apartment_key(b);
    St2Element r;
    if (sa && sb) r.emplace(AptPair{ka, kb}, Q(sa * sb));
    return r;
}

St2Element st2_unit() { return St2Element{{AptPair{}, Q(1)}}; }

St2Element st2_normal_form(const St2Element& x) {
    St2Element out;
    for (auto& [p, c] : x) {
        StElement a = normal_form(StElement{{p.first, Q(1)}});
        StElement b = normal_form(StElement{{p.second, Q(1)}});
        for (auto& [ka, ca] : a)
            for (auto& [kb, cb] : b) lc_add(out, AptPair{ka, kb}, c * ca * cb);
    }
    return out;
}

bool is_zero_st2(const St2Element& x) { return st2_normal_form(x).empty(); }

bool is_zero_st2(const St2Sym& x) {
    return std::all_of(x.begin(), x.end(), [](auto& kv) { return is_zero_st2(kv.second); });
}

namespace {
void require_independent(const std::vector<Vec>& v, const char* who) {
    if (!v.empty() && rank(Mat(v.begin(), v.end())) != (int)v.size())
        throw std::invalid_argument(std::string(who) + ": arguments are linearly dependent");
}
} // namespace

St2Element make_L(const std::vector<Vec>& v) {
    require_independent(v, "make_L");
    int d = (int)v.size();
    std::vector<Vec> a, b;
    Vec acc(v.empty() ? 0 : v[0].size());
    for (int i = d - 1; i >= 0; --i) {
        acc = add(acc, v[i]);
        a.push_back(acc);
        b.push_back(v[i]);
    }
    return make_pair_element(a, b);
}

St2Element make_I(const std::vector<Vec>& v) {
    require_independent(v, "make_I");
    int d = (int)v.size();
    std::vector<Vec> a, b;
    for (int i = d - 1; i >= 0; --i) {
        a.push_back(v[i]);
        b.push_back(i == d - 1 ? v[i] : sub(v[i], v[i + 1]));
    }
    return lc_scaled(make_pair_element(a, b), Q(d % 2 ? -1 : 1));
}

St2Element make_corr(const std::vector<Vec>& v) {
    Vec s(v[0].size());
    for (auto& x : v) s = add(s, x);
    if (!is_zero_vec(s)) throw std::invalid_argument("make_corr: arguments must sum to zero");
    return make_L(std::vector<Vec>(v.begin() + 1, v.end()));
}

St2Element make_corr_colon(const std::vector<Vec>& u) {
    std::vector<Vec> v;
    for (size_t i = 0; i < u.size(); ++i) v.push_back(sub(u[i], u[(i + 1) % u.size()]));
    return make_corr(v);
}

namespace {

std::vector<std::vector<int>> all_perms(int d) {
    std::vector<std::vector<int>> r;
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do r.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return r;
}

std::vector<Vec> pick(const std::vector<Vec>& vs, unsigned mask) {
    std::vector<Vec> r;
    for (size_t i = 0; i < vs.size(); ++i)
        if (mask >> i & 1) r.push_back(vs[i]);
    return r;
}

} // namespace

BarElement embed_s(const St2Element& x) {
    BarElement out;
    for (auto& [pr, c] : x) {
        const AptKey& ka = pr.first;
        const AptKey& kb = pr.second;
        int d = (int)ka.size();
        if (d == 0) {
            lc_add(out, Word{}, c);
            continue;
        }
        int n = (int)ka[0].size();
        std::vector<Vec> va = key_vectors(ka), wb = key_vectors(kb);
        std::map<std::pair<unsigned, unsigned>, Subspace> cache;
        auto meet = [&](unsigned ma, unsigned mb) -> const Subspace& {
            auto key = std::make_pair(ma, mb);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, intersect(span(pick(va, ma), n), span(pick(wb, mb), n))).first;
            return it->second;
        };
        auto perms = all_perms(d);
        for (auto& sg : perms) {
            std::vector<unsigned> f(d + 1, 0);
            for (int i = 0; i < d; ++i) f[i + 1] = f[i] | 1u << sg[i];
            int ssg = perm_sign(sg);
            for (auto& tu : perms) {
                std::vector<unsigned> g(d + 1, 0);
                for (int j = 0; j < d; ++j) g[j + 1] = g[j] | 1u << tu[d - 1 - j];
                Word w;
                bool generic = true;
                for (int i = 1; i <= d && generic; ++i) {
                    if (i < d && meet(f[i], g[d - i]).dim() != 0) generic = false;
                    if (!generic) break;
                    const Subspace& l = meet(f[i], g[d - i + 1]);
                    if (l.dim() != 1) {
                        generic = false;
                        break;
                    }
                    w.push_back({canonical_point(l.basis[0])});
                }
                if (generic) lc_add(out, w, c * ssg * perm_sign(tu));
            }
        }
    }
    return out;
}

St2Element st2_product(const St2Element& a, const St2Element& b) {
    St2Element out;
    for (auto& [pa, ca] : a)
        for (auto& [pb, cb] : b) {
            StElement l = st_multiply(StElement{{pa.first, Q(1)}}, StElement{{pb.first, Q(1)}});
            StElement r = st_multiply(StElement{{pa.second, Q(1)}}, StElement{{pb.second, Q(1)}});
            for (auto& [kl, cl] : l)
                for (auto& [kr, cr] : r) lc_add(out, AptPair{kl, kr}, ca * cb * cl * cr);
        }
    return out;
}

St2Tensor st2_coproduct(const St2Element& x, int kfilter) {
    St2Tensor out;
    for (auto& [pr, c] : x) {
        int d = (int)pr.first.size();
        if (d == 0) continue;
        int n = (int)pr.first[0].size();
        std::vector<Vec> v = key_vectors(pr.first), w = key_vectors(pr.second);
        for (unsigned mi = 0; mi < (1u << d); ++mi) {
            int k = __builtin_popcount(mi);
            if (kfilter >= 0 && k != kfilter) continue;
            std::vector<int> I, Ic;
            for (int i = 0; i < d; ++i) (mi >> i & 1 ? I : Ic).push_back(i);
            Subspace ai = span(pick(v, mi), n);
            for (unsigned mj = 0; mj < (1u << d); ++mj) {
                if (__builtin_popcount(mj) != d - k) continue;
                std::vector<int> J, Jc;
                for (int j = 0; j < d; ++j) (mj >> j & 1 ? J : Jc).push_back(j);
                std::vector<Vec> both = pick(v, mi);
                for (auto& y : pick(w, mj)) both.push_back(y);
                if (rank(Mat(both.begin(), both.end())) != d) continue;
                Subspace bj = span(pick(w, mj), n);
                std::vector<int> sig = I, tau = Jc;
                sig.insert(sig.end(), Ic.begin(), Ic.end());
                tau.insert(tau.end(), J.begin(), J.end());
                int sign = perm_sign(sig) * perm_sign(tau);
                std::vector<Vec> l1 = pick(v, mi), l2, r1, r2 = pick(w, mj);
                for (int j : Jc) {
                    std::vector<Vec> g = pick(w, mj);
                    g.push_back(w[j]);
                    Subspace m = intersect(ai, span(g, n));
                    if (m.dim() != 1) throw std::logic_error("st2_coproduct: expected a line");
                    l2.push_back(m.basis[0]);
                }
                for (int i : Ic) {
                    std::vector<Vec> g = pick(v, mi);
                    g.push_back(v[i]);
                    Subspace m = intersect(bj, span(g, n));
                    if (m.dim() != 1) throw std::logic_error("st2_coproduct: expected a line");
                    r1.push_back(m.basis[0]);
                }
                auto [s1, k1] = apartment_key(l1);
                auto [s2, k2] = apartment_key(l2);
                auto [s3, k3] = apartment_key(r1);
                auto [s4, k4] = apartment_key(r2);
                Q coef = c * sign * s1 * s2 * s3 * s4;
                if (coef == 0) continue;
                auto& slot = out[St2Slot{ai, bj}];
                lc_add(slot, std::make_pair(AptPair{k1, k2}, AptPair{k3, k4}), coef);
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

St2Element dualize(const St2Element& x) {
    St2Element out;
    for (auto& [pr, c] : x) {
        if (pr.first.empty()) {
            lc_add(out, pr, c);
            continue;
        }
        if (pr.first.size() != pr.first[0].size())
            throw std::invalid_argument("dualize: apartments must span the ambient space");
        auto da = dual_basis(key_vectors(pr.first));
        auto db = dual_basis(key_vectors(pr.second));
        lc_add(out, make_pair_element(db, da), c);
    }
    return out;
}

namespace {

BarElement append_letter(const BarElement& x, const Vec& p, const Q& c) {
    BarElement out;
    for (auto& [w, k] : x) {
        Word nw = w;
        nw.push_back({canonical_point(p)});
        lc_add(out, nw, k * c);
    }
    return out;
}

std::vector<Vec> without(const std::vector<Vec>& v, size_t i) {
    std::vector<Vec> r;
    for (size_t j = 0; j < v.size(); ++j)
        if (j != i) r.push_back(v[j]);
    return r;
}

} // namespace

BarElement symbol_L(const std::vector<Vec>& v) {
    size_t d = v.size();
    if (d == 1) return BarElement{{Word{{canonical_point(v[0])}}, Q(1)}};
    BarElement out = append_letter(symbol_L(std::vector<Vec>(v.begin() + 1, v.end())), v[0], 1);
    for (size_t i = 0; i + 1 < d; ++i) {
        std::vector<Vec> m;
        for (size_t j = 0; j < d; ++j) {
            if (j == i) m.push_back(add(v[i], v[i + 1]));
            else if (j != i + 1) m.push_back(v[j]);
        }
        BarElement s = symbol_L(m);
        lc_add(out, append_letter(s, v[i + 1], 1));
        lc_add(out, append_letter(s, v[i], -1));
    }
    return out;
}

BarElement symbol_I(const std::vector<Vec>& v) {
    size_t d = v.size();
    if (d == 1) return BarElement{{Word{{canonical_point(v[0])}}, Q(-1)}};
    BarElement out = append_letter(symbol_I(std::vector<Vec>(v.begin(), v.end() - 1)), v[d - 1], -1);
    for (size_t i = 0; i + 1 < d; ++i) {
        Vec diff = sub(v[i + 1], v[i]);
        lc_add(out, append_letter(symbol_I(without(v, i + 1)), diff, 1));
        lc_add(out, append_letter(symbol_I(without(v, i)), diff, -1));
    }
    return out;
}

Vec choose_functional(int ambient, const std::vector<Point>& lines, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, 97);
    Vec h(ambient);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& x : h) x = dist(rng);
        bool ok = std::all_of(lines.begin(), lines.end(), [&](const Point& p) { return dot(h, to_vec(p)) != 0; });
        if (ok) break;
    }
    return h;
}

BarElement st_infty_form(const BarElement& s_image, const Vec& h) {
    return shuffle_span_reduce(p_H_project(s_image, h));
}

namespace {

std::vector<Point> letters_of(const BarElement& x) {
    std::vector<Point> r;
    for (auto& [w, c] : x)
        for (auto& k : w) r.push_back(k[0]);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

int ambient_of(const St2Element& x) {
    for (auto& [p, c] : x)
        if (!p.first.empty()) return (int)p.first[0].size();
    return 0;
}

} // namespace

bool is_zero_st_infty(const St2Element& x, uint64_t seed) {
    BarElement img = embed_s(x);
    if (img.empty()) return true;
    Vec h = choose_functional(ambient_of(x), letters_of(img), seed);
    return st_infty_form(img, h).empty();
}

bool is_zero_st_infty(const St2Sym& x, uint64_t seed) {
    return std::all_of(x.begin(), x.end(), [&](auto& kv) { return is_zero_st_infty(kv.second, seed); });
}

namespace {

using WedgeTerms = LinComb<std::pair<Word, Word>>;

void add_outer(WedgeTerms& out, const BarElement& a, const BarElement& b, const Q& c) {
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b) lc_add(out, std::make_pair(wa, wb), c * ca * cb);
}

void prune(WedgeForm& f) {
    for (auto it = f.begin(); it != f.end();) it = it->second.empty() ? f.erase(it) : std::next(it);
}

Subspace span_of(const std::vector<Vec>& v) { return span(v, (int)v[0].size()); }

} // namespace

WedgeForm cobracket_from_coproduct(const std::vector<Vec>& v, const Vec& h) {
    int d = (int)v.size();
    St2Element x = make_L(v);
    std::map<AptPair, BarElement> cache;
    auto nf = [&](const AptPair& p) -> const BarElement& {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, st_infty_form(embed_s(St2Element{{p, Q(1)}}), h)).first;
        return it->second;
    };
    WedgeForm out;
    for (int k = 1; k < d; ++k)
        for (auto& [slot, terms] : st2_coproduct(x, k))
            for (auto& [tp, c] : terms) {
                const BarElement& a = nf(tp.first);
                const BarElement& b = nf(tp.second);
                add_outer(out[slot], a, b, c);
                add_outer(out[St2Slot{slot.second, slot.first}], b, a, -c);
            }
    prune(out);
    return out;
}

WedgeForm cobracket_formula(const std::vector<Vec>& v, const Vec& h) {
    int d = (int)v.size();
    std::vector<Vec> vv(d + 1);
    vv[0] = Vec(v[0].size());
    for (int i = 0; i < d; ++i) {
        vv[i + 1] = v[i];
        vv[0] = sub(vv[0], v[i]);
    }
    WedgeForm out;
    for (int j = 0; j <= d; ++j)
        for (int i = 1; i < d; ++i) {
            std::vector<Vec> a, b;
            for (int t = j + 1; t <= j + i; ++t) a.push_back(vv[t % (d + 1)]);
            for (int t = j + i + 1; t <= j + d; ++t) b.push_back(vv[t % (d + 1)]);
            BarElement na = st_infty_form(embed_s(make_L(a)), h), nb = st_infty_form(embed_s(make_L(b)), h);
            Subspace u = span_of(a), w = span_of(b);
            add_outer(out[St2Slot{u, w}], na, nb, -1);
            add_outer(out[St2Slot{w, u}], nb, na, 1);
        }
    prune(out);
    return out;
}

CobracketReport check_cobracket(const std::vector<Vec>& v, uint64_t seed) {
    int d = (int)v.size();
    std::vector<Point> lines;
    Vec v0(v[0].size());
    for (auto& x : v) {
        lines.push_back(canonical_point(x));
        v0 = sub(v0, x);
    }
    lines.push_back(canonical_point(v0));
    Vec h = choose_functional((int)v[0].size(), lines, seed);
    WedgeForm lhs = cobracket_from_coproduct(v, h), rhs = cobracket_formula(v, h);
    CobracketReport rep;
    rep.lhs_terms = rep.rhs_terms = 0;
    for (auto& [s, t] : lhs) rep.lhs_terms += t.size();
    for (auto& [s, t] : rhs) rep.rhs_terms += t.size();
    rep.equal = lhs == rhs;
    WedgeForm neg = rhs;
    for (auto& [s, t] : neg)
        for (auto& [k, c] : t) c = -c;
    rep.equal_negated = lhs == neg;
    (void)d;
    return rep;
}

std::vector<Vec> coxeter_to_basis(const std::vector<Vec>& p, const std::vector<Vec>& q) {
    size_t d = p.size();
    if (q.size() != d || d == 0) throw std::invalid_argument("coxeter_to_basis: simplexes of different sizes");
    int n = (int)p[0].size();
    if (rank(Mat(p.begin(), p.end())) != (int)d) throw std::invalid_argument("coxeter_to_basis: P is degenerate");
    if (rank(Mat(q.begin(), q.end())) != (int)d) throw std::invalid_argument("coxeter_to_basis: Q is degenerate");
    if (canonical_point(p[0]) != canonical_point(q[0])) throw std::invalid_argument("coxeter_to_basis: P_1 != Q_1");
    std::vector<Vec> v = {p[0]};
    Vec s = p[0];
    for (size_t i = 1; i < d; ++i) {
        std::string idx = std::to_string(i + 1);
        auto coef = solve(from_columns({s, p[i]}), q[i]);
        if (!coef) throw std::invalid_argument("coxeter_to_basis: Q_" + idx + " is not on the line through P_" + std::to_string(i) + " and P_" + idx);
        Q alpha = (*coef)[0], beta = (*coef)[1];
        if (alpha == 0) throw std::invalid_argument("coxeter_to_basis: not generic, Q_" + idx + " = P_" + idx);
        if (beta == 0) throw std::invalid_argument("coxeter_to_basis: Q_" + idx + " = P_" + std::to_string(i));
        Vec vi = scale(q[i], -1 / alpha);
        v.push_back(vi);
        s = add(s, vi);
    }
    (void)n;
    return v;
}

std::optional<Vec> span_solve(const St2Element& target, const std::vector<St2Element>& family) {
    std::vector<St2Element> nf;
    for (auto& f : family) nf.push_back(st2_normal_form(f));
    return solve_in_span(st2_normal_form(target), nf);
}

std::string to_string(const St2Element& x) {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [p, c] : x) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c) + "*" + to_string(p.first) + "(x)" + to_string(p.second);
    }
    return s;
}

} // namespace stq

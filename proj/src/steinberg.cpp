#include "artifact/steinberg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace stq {

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::pair<int, AptKey> apartment_key(const std::vector<Vec>& vs) {
    if (vs.empty()) return {1, {}};
    for (auto& v : vs)
        if (is_zero_vec(v)) return {0, {}};
    if (rank(Mat(vs.begin(), vs.end())) < (int)vs.size()) return {0, {}};
    AptKey pts;
    for (auto& v : vs) pts.push_back(canonical_point(v));
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    AptKey sorted;
    for (int i : idx) sorted.push_back(pts[i]);
    return {perm_sign(idx), sorted};
}

StElement make_apartment(const std::vector<Vec>& vs) {
    auto [s, k] = apartment_key(vs);
    StElement r;
    if (s != 0) r.emplace(k, Q(s));
    return r;
}

std::vector<Vec> key_vectors(const AptKey& k) {
    std::vector<Vec> r;
    for (auto& p : k) r.push_back(to_vec(p));
    return r;
}

Subspace key_span(const AptKey& k) {
    return span(key_vectors(k), k.empty() ? 0 : (int)k[0].size());
}

namespace {

// vectors w_1..w_k in Q^k; expansion in the standard flag basis
std::vector<std::pair<int, std::vector<Vec>>> expand_standard(const std::vector<Vec>& w) {
    int k = (int)w.size();
    std::vector<std::pair<int, std::vector<Vec>>> out;
    std::vector<int> tau(k);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        std::vector<Vec> u;
        for (int t : tau) u.push_back(w[t]);
        bool generic = true;
        for (int i = 0; i + 1 < k && generic; ++i) {
            int m = k - i - 1;
            Mat minor(m, Vec(m));
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) minor[a][b] = u[i + 1 + b][i + 1 + a];
            if (det(minor) == 0) generic = false;
        }
        if (!generic) continue;
        std::vector<Vec> pts;
        for (int i = 0; i + 1 < k; ++i) {
            int nv = k - i, ne = k - i - 1;
            Mat sys(ne, Vec(nv));
            for (int a = 0; a < ne; ++a)
                for (int b = 0; b < nv; ++b) sys[a][b] = u[i + b][i + 1 + a];
            Mat ns = nullspace(sys);
            Vec p(k);
            for (int b = 0; b < nv; ++b)
                for (int c = 0; c < k; ++c) p[c] += ns[0][b] * u[i + b][c];
            pts.push_back(p);
        }
        pts.push_back(u[k - 1]);
        out.push_back({perm_sign(tau), pts});
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

void expand_into(StElement& out, const std::vector<Vec>& local, const Q& c,
                 const std::function<Vec(const Vec&)>& back) {
    for (auto& [s, pts] : expand_standard(local)) {
        std::vector<Vec> amb;
        for (auto& p : pts) amb.push_back(back(p));
        auto [s2, key] = apartment_key(amb);
        if (s2 == 0) throw std::logic_error("flag expansion produced a degenerate apartment");
        lc_add(out, key, c * s * s2);
    }
}

} // namespace

StElement flag_expand(const StElement& x, const Flag& f) {
    int d = f.dim();
    Mat b = from_columns(f.basis);
    Mat binv = inverse(b);
    StElement out;
    for (auto& [key, c] : x) {
        if ((int)key.size() != d) throw std::invalid_argument("flag_expand: apartment size differs from flag length");
        std::vector<Vec> local;
        for (auto& p : key) local.push_back(matvec(binv, to_vec(p)));
        expand_into(out, local, c, [&](const Vec& v) { return matvec(b, v); });
    }
    return out;
}

StElement normal_form(const StElement& x) {
    StElement out;
    for (auto& [key, c] : x) {
        Subspace w = key_span(key);
        if (w.dim() != (int)key.size()) continue;
        std::vector<Vec> local;
        for (auto& p : key) local.push_back(w.coords(to_vec(p)));
        expand_into(out, local, c, [&](const Vec& v) { return w.from_coords(v); });
    }
    return out;
}

bool is_zero(const StElement& x) { return normal_form(x).empty(); }

StElement st_multiply(const StElement& a, const StElement& b) {
    StElement out;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) {
            std::vector<Vec> vs = key_vectors(ka);
            for (auto& v : key_vectors(kb)) vs.push_back(v);
            auto [s, k] = apartment_key(vs);
            if (s) lc_add(out, k, ca * cb * s);
        }
    return out;
}

StElement residue(const StElement& x, const Vec& p) {
    Point cp = canonical_point(p);
    Subspace line = span({p}, (int)p.size());
    StElement out;
    for (auto& [key, c] : x) {
        if (key.size() != p.size()) throw std::invalid_argument("residue: point not in the ambient space");
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] != cp) continue;
            std::vector<Vec> rest;
            for (size_t j = 0; j < key.size(); ++j)
                if (j != i) rest.push_back(line.quotient_coords(to_vec(key[j])));
            auto [s, k] = apartment_key(rest);
            if (s) lc_add(out, k, c * s * (i % 2 ? -1 : 1));
        }
    }
    return out;
}

namespace {

Z det2(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// [v1,v2] as a combination of unimodular apartments, splitting along continued fractions
void reduce2(const IVec& v1, const IVec& v2, const Q& c, StElement& out) {
    Z alpha = det2(v1, v2);
    if (abs(alpha) <= 1) {
        auto [s, k] = apartment_key({to_vec(v1), to_vec(v2)});
        if (s) lc_add(out, k, c * s);
        return;
    }
    Z g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), v1[0].get_mpz_t(), v1[1].get_mpz_t());
    IVec w = {-y, x}; // det(v1, w) = 1
    Z beta = det2(v2, w);
    Z t0;
    mpz_fdiv_q(t0.get_mpz_t(), beta.get_mpz_t(), alpha.get_mpz_t());
    // smallest child determinant; ties go to the mediant inside the cone, then lexicographic
    IVec best;
    std::tuple<Z, int, IVec> bestkey;
    bool have = false;
    for (Z t : {Z(t0), Z(t0 + 1)}) {
        Z child = t * alpha - beta;
        IVec v0 = {w[0] + t * v1[0], w[1] + t * v1[1]};
        int outside = sgn(child) == sgn(alpha) ? 0 : 1;
        std::tuple<Z, int, IVec> key{abs(child), outside, canonical_point(to_vec(v0))};
        if (!have || key < bestkey) {
            have = true;
            bestkey = key;
            best = v0;
        }
    }
    reduce2(v1, best, c, out);
    reduce2(best, v2, c, out);
}

Z floor_div(const Z& a, const Z& b) {
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

StElement reduce_general(const StElement& x, int d);

struct LineChart {
    IVec vp; // h(vp) > 0
    Mat uinv;
    std::vector<IVec> basis;
};

LineChart chart_for(const Point& p) {
    LineChart ch;
    ch.vp = p;
    if (p.back() < 0)
        for (auto& z : ch.vp) z = -z;
    ch.basis = unimodular_completion(ch.vp);
    std::vector<Vec> cols;
    for (auto& b : ch.basis) cols.push_back(to_vec(b));
    ch.uinv = inverse(from_columns(cols));
    return ch;
}

Vec chart_quotient(const LineChart& ch, const Point& v) {
    Vec c = matvec(ch.uinv, to_vec(v));
    return Vec(c.begin() + 1, c.end());
}

StElement lattice_residue(const StElement& x, const Point& p, const LineChart& ch) {
    StElement out;
    for (auto& [key, c] : x) {
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] != p) continue;
            std::vector<Vec> rest;
            for (size_t j = 0; j < key.size(); ++j)
                if (j != i) rest.push_back(chart_quotient(ch, key[j]));
            auto [s, k] = apartment_key(rest);
            if (s) lc_add(out, k, c * s * (i % 2 ? -1 : 1));
        }
    }
    return out;
}

StElement coresidue(const StElement& y, const LineChart& ch) {
    Z k = ch.vp.back();
    size_t d = ch.vp.size();
    StElement out;
    for (auto& [key, c] : y) {
        std::vector<Vec> vs = {to_vec(ch.vp)};
        for (auto& q : key) {
            IVec u(d);
            for (size_t j = 0; j < q.size(); ++j)
                for (size_t r = 0; r < d; ++r) u[r] += q[j] * ch.basis[j + 1][r];
            Z t = -floor_div(u.back(), k);
            for (size_t r = 0; r < d; ++r) u[r] += t * ch.vp[r];
            vs.push_back(to_vec(u));
        }
        auto [s, kk] = apartment_key(vs);
        if (s) lc_add(out, kk, c * s);
    }
    return out;
}

Z abs_det(const AptKey& k) {
    Mat m;
    for (auto& p : k) m.push_back(to_vec(p));
    return abs(det(m).get_num());
}

StElement reduce_general(const StElement& x, int d) {
    if (d == 1) {
        StElement out;
        for (auto& [k, c] : x) lc_add(out, k, c);
        return out;
    }
    if (d == 2) {
        StElement out;
        for (auto& [k, c] : x) reduce2(k[0], k[1], c, out);
        return out;
    }
    StElement z, r;
    for (auto& [k, c] : x) {
        if (abs_det(k) == 1)
            lc_add(z, k, c);
        else
            lc_add(r, k, c);
    }
    while (!r.empty()) {
        std::map<Z, std::vector<Point>, std::greater<Z>> levels;
        for (auto& [k, c] : r)
            for (auto& p : k)
                if (p.back() != 0) levels[abs(p.back())].push_back(p);
        bool found = false;
        for (auto& [lev, pts] : levels) {
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            std::vector<std::pair<LineChart, StElement>> lifts;
            for (auto& p : pts) {
                LineChart ch = chart_for(p);
                StElement res = lattice_residue(r, p, ch);
                if (is_zero(res)) continue;
                lifts.push_back({ch, reduce_general(res, d - 1)});
            }
            if (lifts.empty()) continue;
            for (auto& [ch, y] : lifts) {
                StElement cy = coresidue(y, ch);
                lc_add(z, cy, 1);
                lc_add(r, cy, -1);
            }
            found = true;
            break;
        }
        if (!found) {
            if (!is_zero(r)) throw std::logic_error("ash_rudolph_reduce: residues vanish on a nonzero element");
            break;
        }
    }
    return z;
}

} // namespace

StElement ash_rudolph_reduce(const StElement& x) {
    if (x.empty()) return {};
    int d = (int)x.begin()->first.size();
    for (auto& [k, c] : x)
        if ((int)k.size() != d || (int)k[0].size() != d)
            throw std::invalid_argument("ash_rudolph_reduce: apartments must be full rank in Z^d");
    return reduce_general(x, d);
}

StElement ash_rudolph_reduce(const AptKey& a) {
    StElement x;
    x.emplace(a, Q(1));
    return ash_rudolph_reduce(x);
}

std::string to_string(const AptKey& k) {
    std::string s = "[";
    for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + to_string(k[i]);
    return s + "]";
}

std::string to_string(const StElement& x) {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : x) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c) + "*" + to_string(k);
    }
    return s;
}

} // namespace stq

#include "artifact/qlinalg.hpp"

#include <stdexcept>

namespace stq {

Vec to_vec(const IVec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

IVec to_ivec(const Vec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw std::invalid_argument("non-integral vector");
        r[i] = v[i].get_num();
    }
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, const Q& c) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

Q dot(const Vec& a, const Vec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat matmul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Vec matvec(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat identity(int d) {
    Mat m(d, Vec(d));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

Mat from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return {};
    Mat m(cols[0].size(), Vec(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    return m;
}

std::vector<Vec> columns(const Mat& m) { return transpose(m); }

Q det(const Mat& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    for (auto& r : m)
        if (r.size() != n) throw std::invalid_argument("det: non-square matrix");
    std::vector<IVec> a(n, IVec(n));
    Z denom = 1;
    for (size_t i = 0; i < n; ++i) {
        Z l = 1;
        for (auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
        denom *= l;
    }
    int sign = 1;
    Z prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    Q r(a[n - 1][n - 1] * sign, denom);
    r.canonicalize();
    return r;
}

Mat rref(const Mat& m, std::vector<int>* pivots) {
    Mat a = m;
    std::vector<int> piv;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Q inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Q f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back((int)c);
        ++r;
    }
    a.resize(r);
    if (pivots) *pivots = piv;
    return a;
}

int rank(const Mat& m) { return (int)rref(m).size(); }

Mat nullspace(const Mat& m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    Mat out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
        out.push_back(v);
    }
    return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    size_t rows = m.size();
    if (rows == 0) return Vec{};
    size_t cols = m[0].size();
    Mat aug = m;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    Vec x(cols);
    for (size_t i = 0; i < piv.size(); ++i) {
        if ((size_t)piv[i] == cols) return std::nullopt;
        x[piv[i]] = r[i][cols];
    }
    return x;
}

Mat inverse(const Mat& m) {
    size_t n = m.size();
    Mat aug = m;
    for (size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n);
        aug[i][n + i] = 1;
    }
    std::vector<int> piv;
    Mat r = rref(aug, &piv);
    if (r.size() < n || piv[n - 1] >= (int)n) throw std::invalid_argument("inverse: singular matrix");
    Mat inv(n, Vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = r[i][n + j];
    return inv;
}

std::vector<Vec> dual_basis(const std::vector<Vec>& b) {
    // rows of B^{-1} pair to delta with the columns of B
    return inverse(from_columns(b));
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(quotient_coords(v)) || dim() == ambient; }

Vec Subspace::coords(const Vec& v) const {
    Vec c(pivots.size());
    for (size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
    return c;
}

Vec Subspace::from_coords(const Vec& c) const {
    Vec v(ambient);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < ambient; ++j) v[j] += c[i] * basis[i][j];
    return v;
}

Vec Subspace::quotient_coords(const Vec& v) const {
    Vec r = v;
    for (size_t i = 0; i < basis.size(); ++i) {
        Q f = r[pivots[i]];
        if (f == 0) continue;
        for (int j = 0; j < ambient; ++j) r[j] -= f * basis[i][j];
    }
    std::vector<bool> is_piv(ambient, false);
    for (int p : pivots) is_piv[p] = true;
    Vec out;
    for (int j = 0; j < ambient; ++j)
        if (!is_piv[j]) out.push_back(r[j]);
    return out;
}

Subspace span(const std::vector<Vec>& vs, int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = rref(Mat(vs.begin(), vs.end()), &s.pivots);
    return s;
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    // solve sum a_i u_i = sum b_j w_j
    int k = u.dim(), l = w.dim();
    if (k == 0 || l == 0) return span({}, u.ambient);
    Mat sys(u.ambient, Vec(k + l));
    for (int r = 0; r < u.ambient; ++r) {
        for (int i = 0; i < k; ++i) sys[r][i] = u.basis[i][r];
        for (int j = 0; j < l; ++j) sys[r][k + j] = -w.basis[j][r];
    }
    std::vector<Vec> gens;
    for (auto& n : nullspace(sys)) {
        Vec c(n.begin(), n.begin() + k);
        gens.push_back(u.from_coords(c));
    }
    return span(gens, u.ambient);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    std::vector<Vec> g(u.basis.begin(), u.basis.end());
    g.insert(g.end(), w.basis.begin(), w.basis.end());
    return span(g, u.ambient);
}

Subspace Flag::level(int i) const {
    return span(std::vector<Vec>(basis.begin(), basis.begin() + i), basis.empty() ? 0 : (int)basis[0].size());
}

Flag standard_flag(int d) {
    Flag f;
    for (int i = 0; i < d; ++i) {
        Vec e(d);
        e[i] = 1;
        f.basis.push_back(e);
    }
    return f;
}

Z gcd_of(const IVec& v) {
    Z g = 0;
    for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IVec primitive(const Vec& v) {
    Z l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
    Z g = gcd_of(r);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    for (auto& x : r) x /= g;
    return r;
}

IVec canonical_point(const Vec& v) {
    IVec r = primitive(v);
    for (auto& x : r) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : r) y = -y;
        break;
    }
    return r;
}

Q saturation_index(const std::vector<Vec>& vs) {
    size_t k = vs.size();
    if (k == 0) return 1;
    size_t d = vs[0].size();
    Q scale_f = 1;
    std::vector<IVec> iv;
    for (auto& v : vs) {
        Z l = 1;
        for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        IVec r(d);
        for (size_t i = 0; i < d; ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
        scale_f /= l;
        iv.push_back(r);
    }
    // gcd of all k x k minors
    Z g = 0;
    std::vector<int> sel(k);
    for (size_t i = 0; i < k; ++i) sel[i] = (int)i;
    while (true) {
        Mat m(k, Vec(k));
        for (size_t a = 0; a < k; ++a)
            for (size_t b = 0; b < k; ++b) m[a][b] = iv[a][sel[b]];
        Z mnr = det(m).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mnr.get_mpz_t());
        int i = (int)k - 1;
        while (i >= 0 && sel[i] == (int)(d - k + i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (size_t j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (g == 0) throw std::invalid_argument("saturation_index: dependent vectors");
    return Q(g) * scale_f;
}

std::vector<IVec> unimodular_completion(const IVec& v) {
    size_t d = v.size();
    if (gcd_of(v) != 1) throw std::invalid_argument("unimodular_completion: vector not primitive");
    std::vector<IVec> m(d, IVec(d));
    for (size_t i = 0; i < d; ++i) m[i][i] = 1;
    IVec w = v;
    for (size_t i = 1; i < d; ++i) {
        if (w[i] == 0) continue;
        Z g, a, b;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), w[0].get_mpz_t(), w[i].get_mpz_t());
        Z c = -w[i] / g, e = w[0] / g;
        IVec r0(d), ri(d);
        for (size_t j = 0; j < d; ++j) {
            r0[j] = a * m[0][j] + b * m[i][j];
            ri[j] = c * m[0][j] + e * m[i][j];
        }
        m[0] = r0;
        m[i] = ri;
        w[0] = g;
        w[i] = 0;
    }
    if (w[0] < 0)
        for (auto& x : m[0]) x = -x;
    Mat mq(d, Vec(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) mq[i][j] = m[i][j];
    Mat inv = inverse(mq);
    std::vector<IVec> cols;
    for (auto& c : columns(inv)) cols.push_back(to_ivec(c));
    return cols;
}

std::string to_string(const Q& x) {
    Q q = x;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

} // namespace stq

#include "artifact/cones.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace stq {

StElement cone_to_steinberg(const Cone& c, int ambient) {
    if ((int)c.rays.size() != ambient) return {};
    Q dt = det(c.rays);
    if (dt == 0) return {};
    return lc_scaled(make_apartment(c.rays), Q(sgn(dt)));
}

bool cone_contains(const Cone& c, const Vec& v) {
    if (c.rays.empty()) return is_zero_vec(v);
    if (c.rays.size() == 2 && canonical_point(c.rays[0]) == canonical_point(c.rays[1]) &&
        dot(c.rays[0], c.rays[1]) < 0)
        return rank({c.rays[0], v}) <= 1;
    auto coef = solve(from_columns(c.rays), v);
    if (!coef) return false;
    for (auto& x : *coef)
        if (x < 0) return false;
    return true;
}

PartialFraction rho(const AptKey& a, const std::vector<int>& n) {
    std::vector<Vec> v = key_vectors(a);
    auto dual = dual_basis(v);
    PartialFractionTerm t;
    t.coeff = det(Mat(dual.begin(), dual.end()));
    for (size_t i = 0; i < dual.size(); ++i) t.factors.push_back({dual[i], n[i]});
    return {t};
}

PartialFraction rho(const StElement& x) {
    PartialFraction out;
    for (auto& [k, c] : x)
        for (auto t : rho(k, std::vector<int>(k.size(), 1))) {
            t.coeff *= c;
            out.push_back(t);
        }
    return out;
}

PartialFraction rho(const StElement& x, const Poly& p) {
    PartialFraction out;
    for (auto& [k, c] : x) {
        std::vector<Vec> v = key_vectors(k);
        Poly in_v = poly_linear_subst(p, inverse(from_columns(v)));
        for (auto& [m, pc] : in_v) {
            std::vector<int> n;
            Z fact = 1;
            for (int e : m) {
                n.push_back(e + 1);
                for (int j = 2; j <= e; ++j) fact *= j;
            }
            for (auto t : rho(k, n)) {
                t.coeff *= c * pc * fact;
                out.push_back(t);
            }
        }
    }
    return out;
}

std::optional<Q> eval_pfrac(const PartialFraction& f, const Vec& z) {
    Q total = 0;
    for (auto& t : f) {
        Q den = 1;
        for (auto& [u, e] : t.factors) {
            Q l = dot(u, z);
            if (l == 0) return std::nullopt;
            for (int i = 0; i < e; ++i) den *= l;
        }
        total += t.coeff / den;
    }
    return total;
}

namespace {

Vec random_point(std::mt19937_64& rng, int d, int maxc) {
    std::uniform_int_distribution<int> dist(1, maxc);
    Vec z(d);
    for (auto& x : z) x = dist(rng);
    return z;
}

template <class F>
bool oracle_loop(int d, const OracleConfig& cfg, F&& eval) {
    std::mt19937_64 rng(cfg.seed);
    int done = 0, misses = 0;
    while (done < cfg.points) {
        auto v = eval(rng, d);
        if (!v) {
            if (++misses > 100 * cfg.points) throw std::runtime_error("oracle: persistent pole collisions");
            continue;
        }
        if (*v != 0) return false;
        ++done;
    }
    return true;
}

} // namespace

bool st_equality_oracle(const StElement& x, const OracleConfig& cfg) {
    if (x.empty()) return true;
    int d = (int)x.begin()->first[0].size();
    PartialFraction f = rho(x);
    return oracle_loop(d, cfg, [&](std::mt19937_64& rng, int dd) { return eval_pfrac(f, random_point(rng, dd, cfg.max_coord)); });
}

bool st_equality_oracle(const std::map<Mono, StElement>& x, const OracleConfig& cfg) {
    PartialFraction f;
    int d = 0;
    for (auto& [m, e] : x) {
        if (e.empty()) continue;
        d = (int)e.begin()->first[0].size();
        Poly p{{m, Q(1)}};
        for (auto& t : rho(e, p)) f.push_back(t);
    }
    if (f.empty()) return true;
    return oracle_loop(d, cfg, [&](std::mt19937_64& rng, int dd) { return eval_pfrac(f, random_point(rng, dd, cfg.max_coord)); });
}

bool st2_equality_oracle(const St2Element& x, const OracleConfig& cfg) {
    if (x.empty()) return true;
    int d = (int)x.begin()->first.first[0].size();
    return oracle_loop(d, cfg, [&](std::mt19937_64& rng, int dd) -> std::optional<Q> {
        Vec z = random_point(rng, dd, cfg.max_coord), z2 = random_point(rng, dd, cfg.max_coord);
        Q total = 0;
        for (auto& [p, c] : x) {
            auto a = eval_pfrac(rho(p.first, std::vector<int>(p.first.size(), 1)), z);
            auto b = eval_pfrac(rho(p.second, std::vector<int>(p.second.size(), 1)), z2);
            if (!a || !b) return std::nullopt;
            total += c * *a * *b;
        }
        return total;
    });
}

int FourierSpec::weight() const {
    int w = 0;
    for (int x : n) w += x;
    return w;
}

FourierSpec standard_li_spec(const std::vector<int>& n) {
    int d = (int)n.size();
    FourierSpec s;
    for (int i = 0; i < d; ++i) {
        Vec r(d);
        for (int j = i; j < d; ++j) r[j] = 1;
        s.cone.rays.push_back(r);
        Vec e(d);
        e[i] = 1;
        s.u.push_back(e);
    }
    s.n = n;
    return s;
}

Q fourier_coefficient(const FourierSpec& s, const IVec& nu) {
    Vec v = to_vec(nu);
    if (!cone_contains(s.cone, v)) return 0;
    Q r = 1;
    for (size_t j = 0; j < s.u.size(); ++j) {
        Q l = dot(s.u[j], v);
        if (l == 0) return 0;
        for (int k = 0; k < s.n[j]; ++k) r /= l;
    }
    return r;
}

std::complex<double> truncated_fourier_sum(const FourierSpec& s, const std::vector<double>& x, long m) {
    if (m < 1) throw std::invalid_argument("truncated_fourier_sum: M must be positive");
    bool singular = true;
    for (double xi : x)
        if (std::abs(xi - std::round(xi)) > 1e-15) singular = false;
    if (singular) throw std::invalid_argument("truncated_fourier_sum: singular support at x = 0");
    size_t d = x.size();
    std::vector<std::vector<double>> ud;
    for (auto& u : s.u) {
        std::vector<double> r;
        for (auto& q : u) r.push_back(q.get_d());
        ud.push_back(r);
    }
    std::complex<double> total = 0;
    std::vector<long> nu(d, -m);
    const double two_pi = 2 * M_PI;
    while (true) {
        IVec iv(d);
        for (size_t i = 0; i < d; ++i) iv[i] = nu[i];
        if (cone_contains(s.cone, to_vec(iv))) {
            double coef = 1;
            for (size_t j = 0; j < ud.size(); ++j) {
                double l = 0;
                for (size_t i = 0; i < d; ++i) l += ud[j][i] * nu[i];
                if (l == 0) {
                    coef = 0;
                    break;
                }
                coef /= std::pow(l, s.n[j]);
            }
            if (coef != 0) {
                double ph = 0;
                for (size_t i = 0; i < d; ++i) ph += nu[i] * x[i];
                total += coef * std::polar(1.0, two_pi * ph);
            }
        }
        size_t i = 0;
        while (i < d && nu[i] == m) nu[i++] = -m;
        if (i == d) break;
        ++nu[i];
    }
    return total;
}

std::complex<double> bernoulli_reference(int n, double x) {
    double t = x - std::floor(x);
    // B_n(t) from the explicit sum over binomials and Bernoulli numbers
    std::vector<double> b(n + 1, 0.0);
    b[0] = 1;
    for (int k = 1; k <= n; ++k) {
        double s = 0, binom = 1;
        for (int j = 0; j < k; ++j) {
            s += binom * b[j];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        b[k] = -s / (k + 1);
    }
    double bn = 0, binom = 1;
    for (int k = 0; k <= n; ++k) {
        bn += binom * b[k] * std::pow(t, n - k);
        binom = binom * (n - k) / (k + 1);
    }
    std::complex<double> tpi(0, 2 * M_PI), p = 1;
    double fact = 1;
    for (int k = 1; k <= n; ++k) {
        p *= tpi;
        fact *= k;
    }
    return -p / fact * bn;
}

namespace {

template <class F>
CheckResult scan_box(size_t d, long m, F&& pred) {
    CheckResult r;
    if (m <= 0) return r;
    std::vector<long> nu(d, -m);
    while (true) {
        IVec iv(d);
        for (size_t i = 0; i < d; ++i) iv[i] = nu[i];
        if (!pred(iv)) {
            r.ok = false;
            r.witness = iv;
            return r;
        }
        size_t i = 0;
        while (i < d && nu[i] == m) nu[i++] = -m;
        if (i == d) break;
        ++nu[i];
    }
    return r;
}

} // namespace

CheckResult coefficient_shuffle_check(const FourierSpec& f1, const FourierSpec& f2,
                                      const std::vector<std::pair<Q, FourierSpec>>& decomposition, long m) {
    size_t d1 = f1.u.size(), d2 = f2.u.size();
    return scan_box(d1 + d2, m, [&](const IVec& nu) {
        IVec a(nu.begin(), nu.begin() + d1), b(nu.begin() + d1, nu.end());
        Q lhs = fourier_coefficient(f1, a) * fourier_coefficient(f2, b);
        Q rhs = 0;
        for (auto& [c, s] : decomposition) rhs += c * fourier_coefficient(s, nu);
        return lhs == rhs;
    });
}

CheckResult homogeneity_check(const FourierSpec& s, long factor, long m) {
    Q scale = 1;
    for (int i = 0; i < s.weight(); ++i) scale /= factor;
    return scan_box(s.u.size(), m, [&](const IVec& nu) {
        IVec big = nu;
        for (auto& x : big) x *= factor;
        return fourier_coefficient(s, big) == scale * fourier_coefficient(s, nu);
    });
}

} // namespace stq

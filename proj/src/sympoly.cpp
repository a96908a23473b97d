#include "artifact/sympoly.hpp"

namespace stq {

Poly poly_one(int nvars) { return Poly{{Mono(nvars, 0), Q(1)}}; }

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            lc_add(r, m, ca * cb);
        }
    return r;
}

Poly poly_pow(const Poly& a, int n, int nvars) {
    Poly r = poly_one(nvars);
    for (int i = 0; i < n; ++i) r = poly_mul(r, a);
    return r;
}

Poly linear_form(const Vec& coeffs) {
    Poly r;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Mono m(coeffs.size(), 0);
        m[i] = 1;
        lc_add(r, m, coeffs[i]);
    }
    return r;
}

Poly poly_linear_subst(const Poly& p, const Mat& a) {
    int d = (int)a.size();
    std::vector<Poly> images;
    for (size_t j = 0; j < a[0].size(); ++j) {
        Vec col(d);
        for (int i = 0; i < d; ++i) col[i] = a[i][j];
        images.push_back(linear_form(col));
    }
    Poly r;
    for (auto& [m, c] : p) {
        Poly t = poly_one(d);
        for (size_t j = 0; j < m.size(); ++j) t = poly_mul(t, poly_pow(images[j], m[j], d));
        lc_add(r, t, c);
    }
    return r;
}

Poly divided_power_monomial(const std::vector<int>& n) {
    Mono m(n.size());
    Z denom = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        m[i] = n[i] - 1;
        for (int k = 2; k < n[i]; ++k) denom *= k;
    }
    return Poly{{m, Q(1) / Q(denom)}};
}

Poly poly_block_product(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            Mono m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            lc_add(r, m, ca * cb);
        }
    return r;
}

std::string to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [m, c] : p) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i]) s += "*e" + std::to_string(i + 1) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    return s;
}

} // namespace stq

#pragma once

#include "artifact/steinberg.hpp"

#include <vector>

namespace stq {

using Mono = std::vector<int>; // exponent vector
using Poly = LinComb<Mono>;

Poly poly_one(int nvars);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int n, int nvars);
Poly linear_form(const Vec& coeffs);
// substitutes e_j -> sum_i a[i][j] e_i
Poly poly_linear_subst(const Poly& p, const Mat& a);
// prod e_i^{n_i-1}/(n_i-1)!, one variable per exponent
Poly divided_power_monomial(const std::vector<int>& n);
// concatenates variable blocks
Poly poly_block_product(const Poly& a, const Poly& b);
std::string to_string(const Poly& p);

} // namespace stq

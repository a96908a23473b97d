#pragma once

#include "artifact/st2.hpp"
#include "artifact/sympoly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace stq {

struct Cone {
    std::vector<Vec> rays;
};

StElement cone_to_steinberg(const Cone& c, int ambient);
// closed cone membership; simplicial or a full line {e,-e}
bool cone_contains(const Cone& c, const Vec& v);

struct PartialFractionTerm {
    Q coeff;
    std::vector<std::pair<Vec, int>> factors; // (dual vector, exponent)
};
using PartialFraction = std::vector<PartialFractionTerm>;

// det(v^1..v^d) / prod <v^i,z>^{n_i} for the apartment taken in key order
PartialFraction rho(const AptKey& a, const std::vector<int>& n);
PartialFraction rho(const StElement& x);
// St (x) S: the polynomial is rewritten in the divided-power basis of each apartment
PartialFraction rho(const StElement& x, const Poly& p);

// nullopt when some factor vanishes at z
std::optional<Q> eval_pfrac(const PartialFraction& f, const Vec& z);

struct OracleConfig {
    int points = 5;
    uint64_t seed = 1;
    int max_coord = 10000;
};

bool st_equality_oracle(const StElement& x, const OracleConfig& cfg = {});
bool st_equality_oracle(const std::map<Mono, StElement>& x, const OracleConfig& cfg = {});
bool st2_equality_oracle(const St2Element& x, const OracleConfig& cfg = {});

struct FourierSpec {
    Cone cone;
    std::vector<Vec> u;
    std::vector<int> n;
    int weight() const;
};

FourierSpec standard_li_spec(const std::vector<int>& n);
Q fourier_coefficient(const FourierSpec& s, const IVec& nu);
std::complex<double> truncated_fourier_sum(const FourierSpec& s, const std::vector<double>& x, long m);
std::complex<double> bernoulli_reference(int n, double x);

struct CheckResult {
    bool ok = true;
    IVec witness;
};

// F1(nu1) F2(nu2) = sum c_s F_s(nu1,nu2) on the box |nu|_inf <= m
CheckResult coefficient_shuffle_check(const FourierSpec& f1, const FourierSpec& f2,
                                      const std::vector<std::pair<Q, FourierSpec>>& decomposition, long m);
CheckResult homogeneity_check(const FourierSpec& s, long factor, long m);

} // namespace stq

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace stq {

using Q = mpq_class;
using Z = mpz_class;
using Vec = std::vector<Q>;
using IVec = std::vector<Z>;
using Mat = std::vector<Vec>; // row-major

Vec to_vec(const IVec& v);
IVec to_ivec(const Vec& v); // requires integral entries
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Q& c);
Q dot(const Vec& a, const Vec& b);

Mat transpose(const Mat& m);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& m, const Vec& v);
Mat identity(int d);
Mat from_columns(const std::vector<Vec>& cols);
std::vector<Vec> columns(const Mat& m);

// fraction-free Bareiss elimination after clearing row denominators
Q det(const Mat& m);
int rank(const Mat& m);
// reduced row echelon form; zero rows removed
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr);
Mat nullspace(const Mat& m);
std::optional<Vec> solve(const Mat& m, const Vec& b);
Mat inverse(const Mat& m);
std::vector<Vec> dual_basis(const std::vector<Vec>& b);

struct Subspace {
    int ambient = 0;
    Mat basis; // rref rows
    std::vector<int> pivots;

    int dim() const { return (int)basis.size(); }
    bool contains(const Vec& v) const;
    // coordinates on the echelon basis (= entries at the pivot columns)
    Vec coords(const Vec& v) const;
    Vec from_coords(const Vec& c) const;
    // coordinates in the quotient ambient/this, realized on the non-pivot columns
    Vec quotient_coords(const Vec& v) const;
    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
    bool operator<(const Subspace& o) const { return basis < o.basis; }
};

Subspace span(const std::vector<Vec>& vs, int ambient);
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);

// complete flag given by an ordered basis: F_i = <b_1..b_i>
struct Flag {
    std::vector<Vec> basis;
    int dim() const { return (int)basis.size(); }
    Subspace level(int i) const;
};
Flag standard_flag(int d);

Q saturation_index(const std::vector<Vec>& vs);
IVec canonical_point(const Vec& v);
IVec primitive(const Vec& v); // sign kept
Z gcd_of(const IVec& v);
// integral unimodular matrix (as columns) whose first column is the primitive vector v
std::vector<IVec> unimodular_completion(const IVec& v);

std::string to_string(const Q& q);
std::string to_string(const Vec& v);
std::string to_string(const IVec& v);
Q parse_rational(const std::string& s);

} // namespace stq

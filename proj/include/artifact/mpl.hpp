#pragma once

#include "artifact/st2.hpp"
#include "artifact/sympoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stq {

// zeta * x^exp with zeta = exp(2 pi i phase)
struct Monomial {
    Q phase;
    Vec exp;
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return phase == o.phase && exp == o.exp; }
};

Q reduce_phase(const Q& q); // into [0,1)
Monomial make_monomial(const Q& phase, const Vec& exp);
Monomial mono_unit(int d);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& a);
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_is_constant(const Monomial& a);

struct LiGen {
    std::vector<int> n;
    std::vector<Monomial> m;
    int weight() const;
    int depth() const { return (int)n.size(); }
    int ambient() const { return m.empty() ? 0 : (int)m[0].exp.size(); }
    bool operator<(const LiGen& o) const;
    bool operator==(const LiGen& o) const { return n == o.n && m == o.m; }
};
using LiSum = LinComb<LiGen>;

// Li_{n_1..n_k}(x_1..x_k) on the torus of dimension k
LiGen standard_li(const std::vector<int>& n);

// ---- formal iterated integrals; nullopt is the argument 0
using IIArg = std::optional<Monomial>;
struct FormalII {
    std::vector<IIArg> z; // z_0, z_1..z_n, z_{n+1}
    int weight() const { return (int)z.size() - 2; }
    bool operator<(const FormalII& o) const { return z < o.z; }
    bool operator==(const FormalII& o) const { return z == o.z; }
};
using IISum = LinComb<FormalII>;
// commutative products of integrals; weight-0 factors are dropped
using IIProduct = std::vector<FormalII>;
using IIProdSum = LinComb<IIProduct>;
IIProduct ii_product(std::vector<FormalII> factors);

IISum li_to_ii(const LiGen& g);
IISum ii_shuffle(const FormalII& a, const FormalII& b);
IIProdSum ii_path_compose(const FormalII& x, const IIArg& a);
IISum ii_reverse(const FormalII& x);

using IICoproduct = LinComb<std::pair<FormalII, IIProduct>>;
IICoproduct goncharov_coproduct(const FormalII& x);

// Li_n(zeta) constants are returned with a zero exponent vector
LiSum divergent_reduce(const FormalII& x);

// ---- depth one normal forms
struct DepthOneNF {
    int weight = 0;
    Z level = 1;
    LinComb<std::pair<Q, IVec>> terms; // (phase, primitive lex-positive vector at this level)
    LinComb<Q> constants;              // Li_n(zeta)
    bool empty() const { return terms.empty() && constants.empty(); }
    bool operator==(const DepthOneNF& o) const {
        return weight == o.weight && level == o.level && terms == o.terms && constants == o.constants;
    }
};
// level 0 picks the lcm of the exponent denominators
DepthOneNF depth1_nf(int weight, const LiSum& x, const Z& level = 0);
LiSum depth1_to_sum(const DepthOneNF& nf);

// ---- truncated coproduct
using TopTerms = LinComb<std::pair<LiGen, LiGen>>;
TopTerms delta_top(const LiGen& g);
// iterated on the left factor; split-off factors are appended in order
using DepthOneTensor = LinComb<std::vector<LiGen>>;
DepthOneTensor iterated_delta(const LiSum& x);

BarSym sigma(const std::vector<LiGen>& factors, const Q& coeff = 1);
BarSym sigma(const DepthOneTensor& t);
BarSym bar_sym_normalize(const BarSym& x);
BarSym embed_s_sym(const St2Sym& x);
St2Sym st2_sym_normal_form(const St2Sym& x);
bool st2_sym_equal(const St2Sym& a, const St2Sym& b);

St2Sym truncated_symbol_closed(const std::vector<int>& n);
// solves s(x) = target monomial by monomial over generators harvested from the words
std::optional<St2Sym> solve_st2_sym(const BarSym& target, int k);
std::optional<St2Sym> truncated_symbol(const LiSum& x);
// depth two only
BarSym goncharov_sigma(const LiGen& g);

// ---- GL_d(Q) action
struct PushedLi {
    Q coeff = 1;
    std::vector<Vec> cols; // d x d matrix by columns
    std::vector<int> n;    // first n.size() columns are the argument exponents
};
PushedLi pushed_standard(const std::vector<int>& n, int d);
PushedLi gl_act(const Mat& a, const PushedLi& x);
LiSum expand_pushed(const PushedLi& x);
// diagonal action on apartments and polynomial variables
St2Sym st2_sym_act(const Mat& a, const St2Sym& x);

struct IdentityTerm {
    bool product = false; // decomposable term, no contribution
    PushedLi li;
};
struct IdentityReport {
    bool ok = false;
    St2Sym residual;
};
IdentityReport verify_li_identity(const std::vector<IdentityTerm>& terms, int d, uint64_t seed = 1);

std::string to_string(const Monomial& m);
std::string to_string(const LiGen& g);
std::string to_string(const FormalII& x);
std::string to_string(const BarSym& x);
std::string to_string(const St2Sym& x);

} // namespace stq

#pragma once

#include "artifact/barcplx.hpp"
#include "artifact/sympoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stq {

using AptPair = std::pair<AptKey, AptKey>;
using St2Element = LinComb<AptPair>;
using St2Sym = std::map<Mono, St2Element>; // symmetric-power coordinates

St2Element make_pair_element(const std::vector<Vec>& a, const std::vector<Vec>& b);
St2Element st2_unit();
St2Element st2_normal_form(const St2Element& x);
bool is_zero_st2(const St2Element& x);
bool is_zero_st2(const St2Sym& x);

St2Element make_L(const std::vector<Vec>& v);
St2Element make_I(const std::vector<Vec>& v);
// v0, v1..vd with v0 = -(v1+..+vd)
St2Element make_corr(const std::vector<Vec>& v);
St2Element make_corr_colon(const std::vector<Vec>& u);

BarElement embed_s(const St2Element& x);
St2Element st2_product(const St2Element& a, const St2Element& b);

// slots are direct sum decompositions V = U (+) W
using St2Slot = std::pair<Subspace, Subspace>;
using St2TensorTerms = LinComb<std::pair<AptPair, AptPair>>;
using St2Tensor = std::map<St2Slot, St2TensorTerms>;
// components with |I| = k, or all of them when k < 0
St2Tensor st2_coproduct(const St2Element& x, int k = -1);

St2Element dualize(const St2Element& x);

BarElement symbol_L(const std::vector<Vec>& v);
BarElement symbol_I(const std::vector<Vec>& v);

// hyperplane functional with entries in 1..97, resampled until nonzero on the given lines
Vec choose_functional(int ambient, const std::vector<Point>& lines, uint64_t seed);
BarElement st_infty_form(const BarElement& s_image, const Vec& h);
bool is_zero_st_infty(const St2Element& x, uint64_t seed = 1);
bool is_zero_st_infty(const St2Sym& x, uint64_t seed = 1);

// cobracket of L[v] computed two ways, compared in St^inf (x) St^inf slot by slot
struct CobracketReport {
    bool equal = false;
    bool equal_negated = false;
    size_t lhs_terms = 0, rhs_terms = 0;
};
using WedgeForm = std::map<St2Slot, LinComb<std::pair<Word, Word>>>;
WedgeForm cobracket_from_coproduct(const std::vector<Vec>& v, const Vec& h);
WedgeForm cobracket_formula(const std::vector<Vec>& v, const Vec& h);
CobracketReport check_cobracket(const std::vector<Vec>& v, uint64_t seed);

// basis v with P_i = <v_1+..+v_i>, Q_i = <v_i>; throws with a diagnosis otherwise
std::vector<Vec> coxeter_to_basis(const std::vector<Vec>& p, const std::vector<Vec>& q);

template <class K>
std::optional<Vec> solve_in_span(const LinComb<K>& target, const std::vector<LinComb<K>>& family) {
    std::map<K, int> idx;
    auto index_of = [&](const K& k) {
        auto it = idx.find(k);
        if (it != idx.end()) return it->second;
        int n = (int)idx.size();
        idx.emplace(k, n);
        return n;
    };
    for (auto& [k, c] : target) index_of(k);
    for (auto& f : family)
        for (auto& [k, c] : f) index_of(k);
    Mat m(idx.size(), Vec(family.size()));
    Vec b(idx.size());
    for (size_t j = 0; j < family.size(); ++j)
        for (auto& [k, c] : family[j]) m[idx[k]][j] = c;
    for (auto& [k, c] : target) b[idx[k]] = c;
    if (idx.empty()) return Vec(family.size());
    return solve(m, b);
}

std::optional<Vec> span_solve(const St2Element& target, const std::vector<St2Element>& family);

std::string to_string(const St2Element& x);

} // namespace stq

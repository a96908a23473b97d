#pragma once

#include "artifact/qlinalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace stq {

using Point = IVec;
using AptKey = std::vector<Point>; // sorted canonical points

template <class K>
using LinComb = std::map<K, Q>;

template <class K>
void lc_add(LinComb<K>& m, const K& k, const Q& c) {
    if (c == 0) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

template <class K>
void lc_add(LinComb<K>& m, const LinComb<K>& o, const Q& c = 1) {
    for (auto& [k, v] : o) lc_add(m, k, v * c);
}

template <class K>
LinComb<K> lc_scaled(const LinComb<K>& m, const Q& c) {
    LinComb<K> r;
    if (c == 0) return r;
    for (auto& [k, v] : m) r.emplace(k, v * c);
    return r;
}

using StElement = LinComb<AptKey>;

int perm_sign(const std::vector<int>& p);
// sorts canonical points; sign 0 when the vectors are dependent
std::pair<int, AptKey> apartment_key(const std::vector<Vec>& vs);
StElement make_apartment(const std::vector<Vec>& vs);
std::vector<Vec> key_vectors(const AptKey& k);
Subspace key_span(const AptKey& k);

// expansion of one apartment in the basis attached to a complete flag of its ambient space
StElement flag_expand(const StElement& x, const Flag& f);
// per-term expansion in the echelon flag of the span of each apartment
StElement normal_form(const StElement& x);
bool is_zero(const StElement& x);

StElement st_multiply(const StElement& a, const StElement& b);

// quotient by <p> realized on the coordinates complementary to the first nonzero entry of p
StElement residue(const StElement& x, const Vec& p);

// ash-rudolph style reduction of integral apartments to unimodular ones
StElement ash_rudolph_reduce(const StElement& x);
StElement ash_rudolph_reduce(const AptKey& a);

std::string to_string(const AptKey& k);
std::string to_string(const StElement& x);

} // namespace stq

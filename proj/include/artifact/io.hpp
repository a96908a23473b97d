#pragma once

#include "artifact/cones.hpp"
#include "artifact/mpl.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stq {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// rationals are written as strings "p/q" and read from strings or integers
Q q_from_json(const json& j);
json q_to_json(const Q& q);
Vec vec_from_json(const json& j);
json vec_to_json(const Vec& v);
json ivec_to_json(const IVec& v);
std::vector<Vec> vectors_from_json(const json& j);

// {"terms": [{"coeff": "1", "vectors": [[..], ..]}, ..]}
StElement st_from_json(const json& j);
json st_to_json(const StElement& x);
json bar_to_json(const BarElement& x);
json barsym_to_json(const BarSym& x);
json st2sym_to_json(const St2Sym& x);

Monomial monomial_from_json(const json& j);
json monomial_to_json(const Monomial& m);

// {"dim": d, "terms": [{"coeff": c, "matrix": [columns], "exponents": [..]} | {"coeff": c, "product": true}]}
struct IdentityFile {
    int dim = 0;
    std::vector<IdentityTerm> terms;
};
IdentityFile identity_from_json(const json& j);
json identity_to_json(const IdentityFile& f);

// {"rays": [..], "u": [..], "n": [..]}
FourierSpec fourier_from_json(const json& j);

json read_json_file(const std::string& path);

} // namespace stq

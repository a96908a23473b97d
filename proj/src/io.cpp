#include "artifact/io.hpp"

#include <fstream>

namespace stq {

Q q_from_json(const json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Q(j.get<long>());
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad rational: ") + e.what());
    }
    throw ParseError("bad rational: " + j.dump());
}

json q_to_json(const Q& q) { return to_string(q); }

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a vector: " + j.dump());
    Vec v;
    for (auto& x : j) v.push_back(q_from_json(x));
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (auto& x : v) j.push_back(q_to_json(x));
    return j;
}

json ivec_to_json(const IVec& v) {
    json j = json::array();
    for (auto& x : v) j.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
    return j;
}

std::vector<Vec> vectors_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty list of vectors");
    std::vector<Vec> vs;
    for (auto& x : j) vs.push_back(vec_from_json(x));
    for (auto& v : vs)
        if (v.size() != vs[0].size()) throw ParseError("vectors of different lengths");
    return vs;
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Q coeff_of(const json& t) { return t.contains("coeff") ? q_from_json(t.at("coeff")) : Q(1); }

} // namespace

StElement st_from_json(const json& j) {
    StElement x;
    int d = -1;
    for (auto& t : field(j, "terms")) {
        auto vs = vectors_from_json(field(t, "vectors"));
        if (d < 0) d = (int)vs[0].size();
        if ((int)vs.size() != d || (int)vs[0].size() != d) throw ParseError("apartment is not square of the common dimension");
        lc_add(x, make_apartment(vs), coeff_of(t));
    }
    return x;
}

json st_to_json(const StElement& x) {
    json terms = json::array();
    for (auto& [k, c] : x) {
        json vs = json::array();
        for (auto& p : k) vs.push_back(ivec_to_json(p));
        terms.push_back({{"coeff", q_to_json(c)}, {"vectors", vs}});
    }
    return {{"terms", terms}};
}

json bar_to_json(const BarElement& x) {
    json terms = json::array();
    for (auto& [w, c] : x) {
        json word = json::array();
        for (auto& letter : w) {
            json l = json::array();
            for (auto& p : letter) l.push_back(ivec_to_json(p));
            word.push_back(letter.size() == 1 ? l[0] : l);
        }
        terms.push_back({{"coeff", q_to_json(c)}, {"word", word}});
    }
    return terms;
}

json barsym_to_json(const BarSym& x) {
    json out = json::array();
    for (auto& [m, b] : x) out.push_back({{"monomial", m}, {"terms", bar_to_json(b)}});
    return out;
}

json st2sym_to_json(const St2Sym& x) {
    json out = json::array();
    for (auto& [m, e] : x) {
        json terms = json::array();
        for (auto& [pr, c] : e) {
            json a = json::array(), b = json::array();
            for (auto& p : pr.first) a.push_back(ivec_to_json(p));
            for (auto& p : pr.second) b.push_back(ivec_to_json(p));
            terms.push_back({{"coeff", q_to_json(c)}, {"left", a}, {"right", b}});
        }
        out.push_back({{"monomial", m}, {"terms", terms}});
    }
    return out;
}

Monomial monomial_from_json(const json& j) {
    return make_monomial(j.contains("phase") ? q_from_json(j.at("phase")) : Q(0), vec_from_json(field(j, "exp")));
}

json monomial_to_json(const Monomial& m) { return {{"phase", q_to_json(m.phase)}, {"exp", vec_to_json(m.exp)}}; }

IdentityFile identity_from_json(const json& j) {
    IdentityFile f;
    f.dim = field(j, "dim").get<int>();
    if (f.dim < 1) throw ParseError("dim must be positive");
    for (auto& t : field(j, "terms")) {
        IdentityTerm it;
        it.product = t.value("product", false);
        it.li.coeff = coeff_of(t);
        if (!it.product) {
            it.li.cols = vectors_from_json(field(t, "matrix"));
            it.li.n = field(t, "exponents").get<std::vector<int>>();
            if ((int)it.li.cols.size() != f.dim || (int)it.li.cols[0].size() != f.dim)
                throw ParseError("matrix must be dim x dim");
            if (it.li.n.empty() || (int)it.li.n.size() > f.dim) throw ParseError("bad exponent tuple");
            for (int n : it.li.n)
                if (n < 1) throw ParseError("exponents must be positive");
        }
        f.terms.push_back(std::move(it));
    }
    return f;
}

json identity_to_json(const IdentityFile& f) {
    json terms = json::array();
    for (auto& t : f.terms) {
        if (t.product) {
            terms.push_back({{"coeff", q_to_json(t.li.coeff)}, {"product", true}});
            continue;
        }
        json cols = json::array();
        for (auto& c : t.li.cols) cols.push_back(vec_to_json(c));
        terms.push_back({{"coeff", q_to_json(t.li.coeff)}, {"matrix", cols}, {"exponents", t.li.n}});
    }
    return {{"dim", f.dim}, {"terms", terms}};
}

FourierSpec fourier_from_json(const json& j) {
    FourierSpec s;
    s.cone.rays = vectors_from_json(field(j, "rays"));
    s.u = vectors_from_json(field(j, "u"));
    s.n = field(j, "n").get<std::vector<int>>();
    if (s.n.size() != s.u.size()) throw ParseError("u and n differ in length");
    return s;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed json in ") + path + ": " + e.what());
    }
}

} // namespace stq

#include "doctest.h"

#include "artifact/io.hpp"

using namespace stq;

namespace {
std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
} // namespace

TEST_CASE("rationals and vectors") {
    CHECK(q_from_json(json("3/6")) == Q(1, 2));
    CHECK(q_from_json(json(-4)) == -4);
    CHECK(q_to_json(Q(-2, 4)) == json("-1/2"));
    CHECK_THROWS_AS(q_from_json(json("x/2")), ParseError);
    CHECK_THROWS_AS(q_from_json(json::array()), ParseError);
    CHECK(vec_from_json(json::parse(R"([1, "2/3", -1])")) == Vec{1, Q(2, 3), -1});
    CHECK(vec_from_json(vec_to_json({Q(5, 7), 0})) == Vec{Q(5, 7), 0});
    CHECK_THROWS_AS(vectors_from_json(json::parse("[[1, 0], [1]]")), ParseError);
    CHECK_THROWS_AS(vectors_from_json(json::array()), ParseError);
}

TEST_CASE("Steinberg elements") {
    json j = json::parse(R"({"terms": [{"coeff": "2", "vectors": [[1, 0], [1, 2]]}, {"vectors": [[0, 1], [1, 0]]}]})");
    StElement x = st_from_json(j);
    StElement want = lc_scaled(make_apartment({{1, 0}, {1, 2}}), 2);
    lc_add(want, make_apartment({{0, 1}, {1, 0}}));
    CHECK(x == want);
    CHECK(st_from_json(st_to_json(x)) == x);
    CHECK_THROWS_AS(st_from_json(json::parse(R"({"terms": [{"vectors": [[1, 0]]}]})")), ParseError);
    CHECK_THROWS_AS(st_from_json(json::parse(R"({"rows": []})")), ParseError);
}

TEST_CASE("monomials") {
    Monomial m = make_monomial(Q(5, 4), {2, -1});
    CHECK(m.phase == Q(1, 4));
    CHECK(monomial_from_json(monomial_to_json(m)) == m);
}

TEST_CASE("identity files") {
    IdentityFile f = identity_from_json(read_json_file(fixture("li22_identity.json")));
    CHECK(f.dim == 2);
    CHECK(f.terms.size() == 8);
    CHECK(verify_li_identity(f.terms, f.dim).ok);
    IdentityFile g = identity_from_json(identity_to_json(f));
    REQUIRE(g.terms.size() == f.terms.size());
    for (size_t i = 0; i < f.terms.size(); ++i) {
        CHECK(g.terms[i].product == f.terms[i].product);
        CHECK(g.terms[i].li.coeff == f.terms[i].li.coeff);
        CHECK(g.terms[i].li.cols == f.terms[i].li.cols);
        CHECK(g.terms[i].li.n == f.terms[i].li.n);
    }
    IdentityFile p = identity_from_json(read_json_file(fixture("li22_perturbed.json")));
    CHECK_FALSE(verify_li_identity(p.terms, p.dim).ok);
    IdentityFile e = identity_from_json(read_json_file(fixture("empty_identity.json")));
    CHECK(verify_li_identity(e.terms, e.dim).ok);

    CHECK_THROWS_AS(identity_from_json(json::parse(R"({"dim": 0, "terms": []})")), ParseError);
    CHECK_THROWS_AS(identity_from_json(json::parse(R"({"dim": 2, "terms": [{"matrix": [[1, 0]], "exponents": [1]}]})")), ParseError);
    CHECK_THROWS_AS(identity_from_json(json::parse(R"({"dim": 1, "terms": [{"matrix": [[1]], "exponents": [0]}]})")), ParseError);
}

TEST_CASE("files") {
    CHECK_THROWS_AS(read_json_file(fixture("malformed.json")), ParseError);
    CHECK_THROWS_AS(read_json_file(fixture("does_not_exist.json")), ParseError);
    FourierSpec s = fourier_from_json(read_json_file(fixture("fourier_li2.json")));
    CHECK(s.weight() >= 1);
    CHECK(s.u.size() == s.n.size());
    CHECK_THROWS_AS(fourier_from_json(json::parse(R"({"rays": [[1]], "u": [[1]], "n": [1, 2]})")), ParseError);
}

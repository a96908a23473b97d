#include "doctest.h"

#include "artifact/qlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace stq;

namespace {

Q det_by_permutations(const Mat& m) {
    int n = (int)m.size();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Q total = 0;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Q prod = inv % 2 ? -1 : 1;
        for (int i = 0; i < n; ++i) prod *= m[i][p[i]];
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

Mat random_mat(std::mt19937_64& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Mat m(r, Vec(c));
    for (auto& row : m)
        for (auto& x : row) x = dist(rng);
    return m;
}

} // namespace

TEST_CASE("det") {
    CHECK(det(identity(3)) == 1);
    CHECK(det(Mat{{1, 0}, {1, 2}}) == 2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Mat m = random_mat(rng, 4, 4, -5, 5);
        CHECK(det(m) == det_by_permutations(m));
        Mat a = random_mat(rng, 3, 3, -4, 4), b = random_mat(rng, 3, 3, -4, 4);
        CHECK(det(matmul(a, b)) == det(a) * det(b));
    }
    CHECK(det(Mat{{Q(1, 2), Q(1, 3)}, {Q(2, 5), 1}}) == Q(1, 2) - Q(2, 15));
}

TEST_CASE("dual basis") {
    auto d = dual_basis({{1, 0}, {1, 1}});
    CHECK(d == std::vector<Vec>{{1, -1}, {0, 1}});
    auto e = dual_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(e == identity(3));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        Mat m = random_mat(rng, 3, 3, -5, 5);
        if (det(m) == 0) continue;
        auto db = dual_basis(m);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(dot(db[i], m[j]) == (i == j ? 1 : 0));
        CHECK(det(Mat(db.begin(), db.end())) == 1 / det(m));
    }
}

TEST_CASE("subspaces") {
    Subspace u = span({{1, 0, 0}, {0, 1, 0}}, 3), w = span({{0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(intersect(u, w) == span({{0, 1, 0}}, 3));
    CHECK(intersect(u, u) == u);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        Mat a = random_mat(rng, 2, 4, -3, 3), b = random_mat(rng, 2, 4, -3, 3);
        Subspace sa = span(a, 4), sb = span(b, 4);
        CHECK(intersect(sa, sb).dim() + subspace_sum(sa, sb).dim() == sa.dim() + sb.dim());
        for (auto& v : intersect(sa, sb).basis) {
            CHECK(sa.contains(v));
            CHECK(sb.contains(v));
        }
    }
}

TEST_CASE("saturation and canonical points") {
    CHECK(saturation_index({{2, 0}, {0, 3}}) == 6);
    CHECK(saturation_index({{1, 0}}) == 1);
    CHECK(saturation_index({{2, 4}}) == 2);
    CHECK(saturation_index({{Q(1, 2), 0}}) == Q(1, 2));
    Mat uni = {{1, 1, 0}, {0, 1, 0}, {2, 3, 1}};
    Mat rows = {{2, 0, 1}, {0, 4, 2}};
    CHECK(saturation_index(matmul(rows, uni)) == saturation_index(rows));
    CHECK(canonical_point({Q(-2, 3), Q(4, 3)}) == IVec{1, -2});
    CHECK(canonical_point({0, 1}) == IVec{0, 1});
    CHECK(canonical_point({0, -5}) == IVec{0, 1});
    CHECK(canonical_point({Q(-7, 3), 14}) == canonical_point({1, -6}));
}

TEST_CASE("unimodular completion") {
    for (IVec v : {IVec{3, 5}, IVec{0, 1}, IVec{4, -6, 9}, IVec{2, 3, 5, 7}}) {
        auto cols = unimodular_completion(v);
        CHECK(cols[0] == v);
        std::vector<Vec> c;
        for (auto& x : cols) c.push_back(to_vec(x));
        CHECK(abs(det(from_columns(c))) == 1);
    }
}

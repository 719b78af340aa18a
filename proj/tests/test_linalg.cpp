#include <random>

#include "casw/error.hpp"
#include "casw/linalg.hpp"
#include "doctest.h"

using namespace casw;

namespace {

Mat from_ints(const Ring& R, int rows, int cols, const std::vector<int>& v) {
    Mat m(rows, cols);
    for (int i = 0; i < rows * cols; ++i) m.a[i] = R.from_int(v[i]);
    return m;
}

RElem random_elem(const Ring& R, std::mt19937_64& rng) {
    RElem x;
    for (int i = 0; i < R.h_trunc(); ++i) x.c[i] = static_cast<fq_t>(rng() % R.field().q());
    return x;
}

}  // namespace

TEST_CASE("identity solve returns b with empty nullspace") {
    Ring R(Field::prime(2));
    Mat I = Mat::identity(R, 3);
    std::vector<RElem> b = {R.from_int(1), R.from_int(0), R.from_int(1)};
    auto res = solve(R, I, b);
    CHECK(res.consistent);
    CHECK(res.x == b);
    CHECK(res.nullspace.empty());
}

TEST_CASE("zero 2x2 over F_2 with b = 0 has nullspace of dimension 2") {
    Ring R(Field::prime(2));
    Mat Z(2, 2);
    auto res = solve(R, Z, {R.zero(), R.zero()});
    CHECK(res.consistent);
    CHECK(res.nullspace.size() == 2);
}

TEST_CASE("[[1,1],[1,1]] x = (1,0) over F_2 is inconsistent") {
    Ring R(Field::prime(2));
    Mat M = from_ints(R, 2, 2, {1, 1, 1, 1});
    auto res = solve(R, M, {R.from_int(1), R.from_int(0)});
    CHECK(!res.consistent);
}

TEST_CASE("random solve round trips over several base rings") {
    std::mt19937_64 rng(42);
    std::vector<Ring> rings = {Ring(Field::prime(2)), Ring(Field(2, 2, {1, 1, 1})),
                               Ring(Field::prime(3)), Ring(Field::prime(2), 2),
                               Ring(Field(2, 2, {1, 1, 1}), 3)};
    for (const Ring& R : rings) {
        for (int it = 0; it < 1000; ++it) {
            int rows = 1 + static_cast<int>(rng() % 5);
            int cols = 1 + static_cast<int>(rng() % 5);
            Mat M(rows, cols);
            for (auto& e : M.a) e = random_elem(R, rng);
            // build a guaranteed-consistent rhs
            std::vector<RElem> x0(cols);
            for (auto& e : x0) e = random_elem(R, rng);
            std::vector<RElem> b = mat_vec(R, M, x0);
            auto res = solve(R, M, b);
            REQUIRE(res.consistent);
            CHECK(mat_vec(R, M, res.x) == b);
            for (auto& n : res.nullspace)
                CHECK(mat_vec(R, M, n) == std::vector<RElem>(rows, R.zero()));
        }
    }
}

TEST_CASE("rank + nullity = cols over a field") {
    std::mt19937_64 rng(1);
    Ring R(Field(2, 2, {1, 1, 1}));
    for (int it = 0; it < 200; ++it) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        Mat M(rows, cols);
        for (auto& e : M.a) e = random_elem(R, rng);
        CHECK(rank(R, M) + static_cast<int>(nullspace(R, M).size()) == cols);
    }
}

TEST_CASE("matrix inverse over field and truncated ring") {
    std::mt19937_64 rng(5);
    for (Ring R : {Ring(Field::prime(3)), Ring(Field::prime(2), 3)}) {
        for (int it = 0; it < 100; ++it) {
            int n = 1 + static_cast<int>(rng() % 4);
            Mat M(n, n);
            for (auto& e : M.a) e = random_elem(R, rng);
            bool invertible = true;
            Mat X;
            try {
                X = inverse(R, M);
            } catch (const VerifyError&) {
                invertible = false;
            }
            if (invertible) {
                CHECK(mat_mul(R, M, X) == Mat::identity(R, n));
                CHECK(mat_mul(R, X, M) == Mat::identity(R, n));
            }
        }
    }
}

TEST_CASE("rref is deterministic and idempotent") {
    Ring R(Field::prime(2));
    Mat M = from_ints(R, 3, 4, {1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1});
    std::vector<int> piv;
    Mat r1 = rref(R, M, &piv);
    CHECK(rref(R, r1) == r1);
    CHECK(piv == std::vector<int>{0, 2});
}

TEST_CASE("span utilities") {
    Ring R(Field::prime(2));
    Mat rows = from_ints(R, 2, 3, {1, 1, 0, 0, 1, 1});
    RowSpan S = row_span(R, rows);
    CHECK(S.basis.rows == 2);
    CHECK(span_contains(R, S, {R.from_int(1), R.from_int(0), R.from_int(1)}));
    CHECK(!span_contains(R, S, {R.from_int(1), R.from_int(0), R.from_int(0)}));
}

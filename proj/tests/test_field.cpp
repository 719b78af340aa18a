#include <random>

#include "casw/error.hpp"
#include "casw/field.hpp"
#include "casw/ring.hpp"
#include "doctest.h"

using namespace casw;

TEST_CASE("F_2 basics") {
    Field f = Field::prime(2);
    CHECK(f.q() == 2);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.mul(1, 1) == 1);
}

TEST_CASE("F_4 with modulus t^2+t+1: w*w = w+1") {
    Field f(2, 2, {1, 1, 1});
    fq_t w = 2;  // t
    CHECK(f.mul(w, w) == f.add(w, 1));
    CHECK(f.inv(w) == f.add(w, 1));   // w(w+1) = 1
    CHECK(f.frobenius(w) == f.mul(w, w));
}

TEST_CASE("reducible modulus rejected naming a factor") {
    CHECK_THROWS_WITH_AS(Field(2, 2, {1, 0, 1}), doctest::Contains("t+1"), MalformedError);
    CHECK_THROWS_AS(Field(4, 1, {0, 1}), MalformedError);  // non-prime p
}

TEST_CASE("default moduli are the lexicographically least irreducible") {
    CHECK(Field::with_default_modulus(2, 2).modulus() == std::vector<int>{1, 1, 1});
    CHECK(Field::with_default_modulus(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(Field::with_default_modulus(3, 2).modulus() == std::vector<int>{1, 0, 1});
}

static void exhaustive_axioms(const Field& f) {
    int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(static_cast<fq_t>(a), 0) == a);
        CHECK(f.mul(static_cast<fq_t>(a), 1) == a);
        CHECK(f.add(static_cast<fq_t>(a), f.neg(static_cast<fq_t>(a))) == 0);
        if (a != 0) CHECK(f.mul(static_cast<fq_t>(a), f.inv(static_cast<fq_t>(a))) == 1);
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            fq_t fa = static_cast<fq_t>(a), fb = static_cast<fq_t>(b);
            CHECK(f.add(fa, fb) == f.add(fb, fa));
            CHECK(f.mul(fa, fb) == f.mul(fb, fa));
            // frobenius is a ring homomorphism
            CHECK(f.frobenius(f.add(fa, fb)) == f.add(f.frobenius(fa), f.frobenius(fb)));
            CHECK(f.frobenius(f.mul(fa, fb)) == f.mul(f.frobenius(fa), f.frobenius(fb)));
            for (int c = 0; c < q; ++c) {
                fq_t fc = static_cast<fq_t>(c);
                CHECK(f.add(f.add(fa, fb), fc) == f.add(fa, f.add(fb, fc)));
                CHECK(f.mul(f.mul(fa, fb), fc) == f.mul(fa, f.mul(fb, fc)));
                CHECK(f.mul(fa, f.add(fb, fc)) == f.add(f.mul(fa, fb), f.mul(fa, fc)));
            }
        }
}

TEST_CASE("exhaustive field axioms for all q <= 64") {
    for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(m);
        exhaustive_axioms(Field::with_default_modulus(p, m));
    }
}

TEST_CASE("frobenius_inv is the p-th root") {
    Field f = Field::with_default_modulus(3, 2);
    for (int a = 0; a < f.q(); ++a) {
        fq_t r = f.frobenius_inv(static_cast<fq_t>(a));
        CHECK(f.frobenius(r) == a);
    }
}

TEST_CASE("ring F_2[h]/(h^3): inv(1+h) = 1+h+h^2 and h^3 = 0") {
    Ring R(Field::prime(2), 3);
    RElem x = R.add(R.one(), R.h());
    RElem want = R.add(R.one(), R.add(R.h(), R.mul(R.h(), R.h())));
    CHECK(R.inv(x) == want);
    CHECK(R.mul(x, R.inv(x)) == R.one());
    RElem h3 = R.mul(R.h(), R.mul(R.h(), R.h()));
    CHECK(R.is_zero(h3));
}

TEST_CASE("ring units are exactly the elements with nonzero h^0 part") {
    for (int t : {1, 2, 3}) {
        Ring R(Field(2, 2, {1, 1, 1}), t);
        int q = R.field().q();
        long long total = 1;
        for (int i = 0; i < t; ++i) total *= q;
        for (long long code = 0; code < total; ++code) {
            RElem x;
            long long c = code;
            for (int i = 0; i < t; ++i) {
                x.c[i] = static_cast<fq_t>(c % q);
                c /= q;
            }
            if (R.is_unit(x)) {
                CHECK(R.mul(x, R.inv(x)) == R.one());
            } else {
                CHECK_THROWS_AS(R.inv(x), VerifyError);
            }
        }
    }
}

TEST_CASE("ring frobenius is additive and multiplicative") {
    Ring R(Field(2, 2, {1, 1, 1}), 2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        RElem a, b;
        for (int i = 0; i < 2; ++i) {
            a.c[i] = static_cast<fq_t>(rng() % 4);
            b.c[i] = static_cast<fq_t>(rng() % 4);
        }
        CHECK(R.frobenius(R.add(a, b)) == R.add(R.frobenius(a), R.frobenius(b)));
        CHECK(R.frobenius(R.mul(a, b)) == R.mul(R.frobenius(a), R.frobenius(b)));
    }
}

#include <random>

#include "casw/error.hpp"
#include "casw/quasihopf.hpp"
#include "doctest.h"

using namespace casw;

namespace {

Ring f2() { return Ring(Field::prime(2)); }

Tensor random_normalized_twist(const QuasiHopf& H, std::mt19937_64& rng) {
    // 1 + (random tensor supported away from unit legs, in the counit-adapted
    // sense). For these local algebras basis index 0 is the unit and all the
    // other basis vectors already lie in ker(eps)... which holds for alpha2,
    // category_d, divided_power and biprimitive, but not group algebras;
    // there we use 1 + c*(g-1)(x)(g'-1) combinations instead.
    const Ring& R = H.ring;
    int q = R.field().q();
    Tensor J = unit_tensor(H, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Tensor cand = J;
        for (int i = 1; i < H.dim; ++i)
            for (int j = 1; j < H.dim; ++j) {
                RElem c = R.from_field(static_cast<fq_t>(rng() % q));
                if (R.is_zero(c)) continue;
                // (e_i - eps(e_i) 1) (x) (e_j - eps(e_j) 1) stays normalized
                std::vector<RElem> vi(H.dim), vj(H.dim);
                vi[i] = R.one();
                vi[0] = R.sub(vi[0], H.counit[i]);
                vj[j] = R.one();
                vj[0] = R.sub(vj[0], H.counit[j]);
                Tensor term = tensor_prod(R, vec_tensor(H, vi), vec_tensor(H, vj));
                cand = tensor_add(R, cand, tensor_scale(R, c, term));
            }
        try {
            hinv(H, cand);
            return cand;
        } catch (const VerifyError&) {
            continue;
        }
    }
    throw InternalError("test: could not sample an invertible normalized twist");
}

}  // namespace

TEST_CASE("category_d constructor matches the defining data") {
    QuasiHopf H = make_category_d(f2());
    CHECK(H.dim == 2);
    // Delta(d) = d(x)1 + 1(x)d
    Tensor want(2, 2);
    want.a[1 * 2 + 0] = H.ring.one();
    want.a[0 * 2 + 1] = H.ring.one();
    CHECK(H.delta[1] == want);
    // R = 1(x)1 + d(x)d
    CHECK(H.r.a[0] == H.ring.one());
    CHECK(H.r.a[3] == H.ring.one());
    CHECK(check_axioms(H).all_ok());
}

TEST_CASE("alpha2 has trivial R and passes all axioms") {
    QuasiHopf H = make_alpha2(f2());
    CHECK(H.r == unit_tensor(H, 2));
    CHECK(check_axioms(H).all_ok());
}

TEST_CASE("every constructor passes the axiom battery") {
    std::vector<QuasiHopf> all;
    all.push_back(make_group_algebra(f2(), AbelianPGroup::from_orders(2, {2})));
    all.push_back(make_group_algebra(f2(), AbelianPGroup::from_orders(2, {4})));
    all.push_back(make_group_algebra(f2(), AbelianPGroup::from_orders(2, {2, 2})));
    all.push_back(make_group_algebra(Ring(Field::prime(2)), AbelianPGroup::from_orders(3, {3})));
    all.push_back(make_function_algebra(f2(), AbelianPGroup::from_orders(2, {2})));
    all.push_back(make_function_algebra(f2(), AbelianPGroup::from_orders(2, {4})));
    all.push_back(make_alpha2(f2()));
    all.push_back(make_category_d(f2()));
    all.push_back(make_divided_power(1));
    all.push_back(make_divided_power(2));
    all.push_back(make_divided_power(3));
    all.push_back(make_biprimitive(f2()));
    all.push_back(make_deformed_d(2));
    for (auto& H : all) {
        CAPTURE(H.dim);
        AxiomReport rep = check_axioms(H);
        for (auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("deformed_d over h^3 fails only the pentagon, with residual h^2 d^(x)4") {
    QuasiHopf H = make_deformed_d(3);
    AxiomReport rep = check_axioms(H);
    for (auto& c : rep.checks) {
        CAPTURE(c.name);
        if (c.name == "pentagon")
            CHECK(!c.ok);
        else
            CHECK(c.ok);
    }
    Tensor want(4, 2);
    RElem h2 = H.ring.mul(H.ring.h(), H.ring.h());
    want.a[want.a.size() - 1] = h2;  // index (1,1,1,1)
    CHECK(rep.pentagon_residual == want);
}

TEST_CASE("hmul agrees with hand expansion on the biprimitive fixture") {
    QuasiHopf H = make_biprimitive(f2());
    const Ring& R = H.ring;
    // J = 1 + a(x)b; J^2 = 1; and R^J = 1 + a(x)a + a(x)b + b(x)a + ab(x)ab
    Tensor J = unit_tensor(H, 2);
    J.a[1 * 4 + 2] = R.one();
    CHECK(hmul(H, J, J) == unit_tensor(H, 2));
    QuasiHopf HJ = apply_twist(H, J);
    Tensor want = H.r;  // 1 + a(x)a
    want.a[1 * 4 + 2] = R.one();
    want.a[2 * 4 + 1] = R.one();
    want.a[3 * 4 + 3] = R.one();
    CHECK(HJ.r == want);
    // commutative algebra: twisting never changes Delta
    for (int i = 0; i < H.dim; ++i) CHECK(HJ.delta[i] == H.delta[i]);
}

TEST_CASE("hinv: series and solve paths") {
    QuasiHopf H = make_biprimitive(f2());
    const Ring& R = H.ring;
    Tensor J = unit_tensor(H, 2);
    J.a[1 * 4 + 2] = R.one();
    J.a[3 * 4 + 3] = R.one();
    Tensor Ji = hinv(H, J);
    CHECK(hmul(H, J, Ji) == unit_tensor(H, 2));
    // non-invertible: zero tensor
    CHECK_THROWS_AS(hinv(H, Tensor(2, 4)), VerifyError);
    // function algebra: unit is not a basis vector, series may not apply
    QuasiHopf F = make_function_algebra(f2(), AbelianPGroup::from_orders(2, {2}));
    Tensor u = unit_tensor(F, 2);
    CHECK(hmul(F, u, hinv(F, u)) == u);
}

TEST_CASE("apply_twist preserves the axiom battery (normalized twists)") {
    std::mt19937_64 rng(11);
    for (auto H : {make_category_d(f2()), make_divided_power(2), make_biprimitive(f2())}) {
        for (int it = 0; it < 10; ++it) {
            Tensor J = random_normalized_twist(H, rng);
            QuasiHopf HJ = apply_twist(H, J);
            AxiomReport rep = check_axioms(HJ);
            for (auto& c : rep.checks) {
                CAPTURE(c.name);
                CHECK(c.ok);
            }
        }
    }
}

TEST_CASE("twisting is an action and J then J^{-1} restores the datum") {
    std::mt19937_64 rng(23);
    QuasiHopf H = make_divided_power(2);
    for (int it = 0; it < 25; ++it) {
        Tensor J = random_normalized_twist(H, rng);
        Tensor K = random_normalized_twist(H, rng);
        QuasiHopf a = apply_twist(apply_twist(H, J), K);
        QuasiHopf b = apply_twist(H, hmul(H, K, J));
        CHECK(a == b);
        QuasiHopf back = apply_twist(apply_twist(H, J), hinv(H, J));
        CHECK(back == H);
    }
}

TEST_CASE("coboundary twists") {
    QuasiHopf H = make_category_d(f2());
    const Ring& R = H.ring;
    // x = 1: identity twist
    CHECK(coboundary_twist(H, H.unit) == unit_tensor(H, 2));
    // x = 1 + d: J is a twist and R is unchanged (d central)
    std::vector<RElem> x = H.unit;
    x[1] = R.one();
    Tensor J = coboundary_twist(H, x);
    CHECK(is_twist_normalized(H, J));
    QuasiHopf HJ = apply_twist(H, J);
    CHECK(HJ.r == H.r);
    // the 2-cocycle equation: (J(x)1)(Delta(x)id)(J) = (1(x)J)(id(x)Delta)(J)
    Tensor lhs = hmul(H, embed_12(H, J), delta_leg(H, J, 1));
    Tensor rhs = hmul(H, embed_23(H, J), delta_leg(H, J, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("coboundary twist on the biprimitive fixture, x = 1 + ab") {
    QuasiHopf H = make_biprimitive(f2());
    const Ring& R = H.ring;
    std::vector<RElem> x = H.unit;
    x[3] = R.one();  // 1 + ab
    Tensor J = coboundary_twist(H, x);
    QuasiHopf HJ = apply_twist(H, J);
    // a stays primitive (commutative, Delta unchanged) and replay is exact
    CHECK(HJ.delta[1] == H.delta[1]);
    QuasiHopf replay = apply_twist(H, J);
    CHECK(replay == HJ);
}

TEST_CASE("primitives") {
    auto P1 = primitives(make_alpha2(f2()));
    REQUIRE(P1.size() == 1);
    CHECK(!f2().is_zero(P1[0][1]));

    auto P2 = primitives(make_group_algebra(f2(), AbelianPGroup::from_orders(2, {2})));
    CHECK(P2.empty());

    auto P3 = primitives(make_biprimitive(f2()));
    CHECK(P3.size() == 2);
}

TEST_CASE("grouplikes") {
    QuasiHopf G = make_group_algebra(f2(), AbelianPGroup::from_orders(2, {2}));
    CHECK(grouplikes(G).size() == 2);  // 1 and g
    QuasiHopf A = make_alpha2(f2());
    CHECK(grouplikes(A).size() == 1);  // only 1
    QuasiHopf F = make_function_algebra(f2(), AbelianPGroup::from_orders(2, {2}));
    CHECK(grouplikes(F).size() == 1);  // no nontrivial characters of Z/2 over F_2
}

TEST_CASE("berkowitz charpoly sanity") {
    Ring R3(Field::prime(3));
    // [[1,2],[0,1]] over F_3: charpoly (t-1)^2 = t^2 + t + 1 mod 3
    Mat M(2, 2);
    M.at(0, 0) = R3.from_int(1);
    M.at(0, 1) = R3.from_int(2);
    M.at(1, 1) = R3.from_int(1);
    auto c = berkowitz_charpoly(R3, M);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == R3.from_int(1));
    CHECK(c[1] == R3.from_int(-2));  // -(trace)
    CHECK(c[2] == R3.from_int(1));   // det
    // Cayley-Hamilton on random 4x4 over F_4
    Ring R4(Field(2, 2, {1, 1, 1}));
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        Mat A(4, 4);
        for (auto& e : A.a) e = R4.from_field(static_cast<fq_t>(rng() % 4));
        auto cp = berkowitz_charpoly(R4, A);
        Mat acc(4, 4);  // evaluate sum c[j] A^{4-j}
        Mat power = Mat::identity(R4, 4);
        std::vector<Mat> powers = {power};
        for (int k = 1; k <= 4; ++k) {
            power = mat_mul(R4, power, A);
            powers.push_back(power);
        }
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i < 16; ++i)
                acc.a[i] = R4.add(acc.a[i], R4.mul(cp[j], powers[4 - j].a[i]));
        CHECK(acc == Mat(4, 4));
    }
}

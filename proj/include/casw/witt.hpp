#ifndef CASW_WITT_HPP
#define CASW_WITT_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "casw/field.hpp"

namespace casw {

// Multivariate polynomial over F_p in x_0..x_{n-1}, y_0..y_{n-1}; exponent
// keys are packed 8-bit digits (x first). Frozen form for evaluation.
struct WittPoly {
    struct Term {
        std::array<std::uint8_t, 8> exp;
        int coef;  // in [1, p)
    };
    std::vector<Term> terms;
};

// Structure polynomials of W_n over F_p, derived once per (p, n) by the
// ghost-component recursion over exact integers (every division by p^i is
// checked to be exact before reduction mod p).
class WittContext {
public:
    WittContext(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }

    const WittPoly& sum_poly(int i) const { return sum_[i]; }
    const WittPoly& prod_poly(int i) const { return prod_[i]; }
    const WittPoly& neg_poly(int i) const { return neg_[i]; }

    bool same(const WittContext& o) const { return p_ == o.p_ && n_ == o.n_; }

private:
    int p_, n_;
    std::vector<WittPoly> sum_, prod_, neg_;
};

// Length-n Witt vector with coordinates in F_q (field of characteristic p).
struct WittVector {
    std::vector<fq_t> coords;
    bool operator==(const WittVector&) const = default;
    bool operator<(const WittVector& o) const { return coords < o.coords; }
};

class WittRing {
public:
    WittRing(std::shared_ptr<const WittContext> ctx, Field field);

    const WittContext& ctx() const { return *ctx_; }
    const Field& field() const { return f_; }
    int n() const { return ctx_->n(); }

    WittVector zero() const;
    WittVector one() const;
    WittVector from_coords(std::vector<fq_t> c) const;

    WittVector add(const WittVector& x, const WittVector& y) const;
    WittVector mul(const WittVector& x, const WittVector& y) const;
    WittVector neg(const WittVector& x) const;
    WittVector frobenius(const WittVector& x) const;       // coordinatewise p-th power
    WittVector artin_schreier(const WittVector& x) const;  // F(x) - x

    WittVector scalar(long long k) const;  // k * (1,0,...,0)

    // All q^n vectors in lexicographic coordinate order.
    std::vector<WittVector> enumerate() const;

    std::string str(const WittVector& x) const;

private:
    std::shared_ptr<const WittContext> ctx_;
    Field f_;
};

std::shared_ptr<const WittContext> witt_structure_polynomials(int p, int n);

// Kernel and cokernel of the Artin-Schreier map P = F - id on W_n(F_q),
// by exhaustive enumeration (q^n <= 2^20).
struct CokerResult {
    std::vector<long long> invariant_factors;      // canonical, each divides the next
    std::vector<WittVector> coset_representatives; // lexicographically least per coset
    std::vector<WittVector> image;                 // Im P, sorted
};
struct KerResult {
    std::vector<long long> invariant_factors;
    std::vector<WittVector> elements;
};
CokerResult coker_P(const WittRing& W);
KerResult ker_P(const WittRing& W);

// Verifies 2*(x0,x1) = (0, x0^2) exhaustively in W_2(F_q); p = 2 only.
bool doubling_identity_check(const Field& f);

// Invariant factors of a finite abelian p-group from its element orders:
// orders[x] = additive order; canonical divisibility-sorted factors.
std::vector<long long> invariant_factors_from_orders(const std::vector<long long>& orders, int p);

}  // namespace casw

#endif

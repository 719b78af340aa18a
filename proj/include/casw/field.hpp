#ifndef CASW_FIELD_HPP
#define CASW_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace casw {

// Element of F_{p^m}, encoded as the little-endian base-p packing of its
// coefficient vector against the declared modulus: code = sum c_i * p^i.
using fq_t = std::uint16_t;

// F_{p^m} with an explicit monic irreducible modulus over F_p. The modulus
// is part of the field's identity (no implicit Conway convention); it is
// verified irreducible at construction by trial division. Arithmetic is
// table-driven, so q is capped (plenty for desk scale).
class Field {
public:
    Field(int p, int m, std::vector<int> modulus);

    static Field prime(int p);
    // Lexicographically least monic irreducible of degree m over F_p,
    // ordered by the coefficient tuple (c_0, ..., c_{m-1}).
    static Field with_default_modulus(int p, int m);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    fq_t add(fq_t a, fq_t b) const;
    fq_t sub(fq_t a, fq_t b) const;
    fq_t neg(fq_t a) const;
    fq_t mul(fq_t a, fq_t b) const { return tab_->mul[a * q_ + b]; }
    fq_t inv(fq_t a) const;
    fq_t pow(fq_t a, long long e) const;
    fq_t frobenius(fq_t a) const { return tab_->frob[a]; }      // a^p
    fq_t frobenius_inv(fq_t a) const { return tab_->frobinv[a]; }  // p-th root

    fq_t from_int(long long v) const;  // Z -> F_p subset of F_q
    std::vector<int> coeffs(fq_t a) const;
    fq_t from_coeffs(const std::vector<int>& c) const;

    std::string str(fq_t a) const;  // polynomial in t, e.g. "t+1"
    bool same(const Field& o) const;

private:
    struct Tables {
        std::vector<fq_t> mul, inv, frob, frobinv;
    };
    int p_, m_, q_;
    std::vector<int> modulus_;
    std::shared_ptr<const Tables> tab_;
};

}  // namespace casw

#endif

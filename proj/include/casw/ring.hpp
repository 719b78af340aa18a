#ifndef CASW_RING_HPP
#define CASW_RING_HPP

#include <array>
#include <string>

#include "casw/field.hpp"

namespace casw {

// h-truncation capacity; every base ring in the suite has h_trunc <= 3.
constexpr int kMaxHTrunc = 4;

// Element of F_q[h]/(h^t): c[i] is the h^i coefficient, entries at
// indices >= t are zero. Plain value type, compared coefficientwise.
struct RElem {
    std::array<fq_t, kMaxHTrunc> c{};
    bool operator==(const RElem&) const = default;
    bool operator<(const RElem& o) const { return c < o.c; }
};

// F_q[h]/(h^{h_trunc}); h_trunc = 1 is the plain field. An element is a
// unit iff its h^0 coefficient is nonzero.
class Ring {
public:
    explicit Ring(Field f, int h_trunc = 1);

    const Field& field() const { return f_; }
    int h_trunc() const { return t_; }
    bool is_field() const { return t_ == 1; }

    RElem zero() const { return RElem{}; }
    RElem one() const;
    RElem h() const;
    RElem from_field(fq_t a) const;
    RElem from_int(long long v) const { return from_field(f_.from_int(v)); }

    RElem add(RElem a, RElem b) const;
    RElem sub(RElem a, RElem b) const;
    RElem neg(RElem a) const;
    RElem mul(RElem a, RElem b) const;
    RElem inv(RElem a) const;  // throws VerifyError on a non-unit
    RElem pow(RElem a, long long e) const;
    RElem frobenius(RElem a) const { return pow(a, f_.p()); }

    bool is_zero(RElem a) const { return a == RElem{}; }
    bool is_unit(RElem a) const { return a.c[0] != 0; }

    std::string str(RElem a) const;
    bool same(const Ring& o) const { return t_ == o.t_ && f_.same(o.f_); }

private:
    Field f_;
    int t_;
};

}  // namespace casw

#endif

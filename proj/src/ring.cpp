#include "casw/ring.hpp"

#include "casw/error.hpp"

namespace casw {

Ring::Ring(Field f, int h_trunc) : f_(std::move(f)), t_(h_trunc) {
    if (t_ < 1) throw MalformedError("ring: h_trunc must be >= 1");
    if (t_ > kMaxHTrunc)
        throw CapacityError("ring: h_trunc > " + std::to_string(kMaxHTrunc) + " unsupported");
}

RElem Ring::one() const { return from_field(1); }

RElem Ring::h() const {
    if (t_ < 2) return zero();  // h = 0 in the plain field
    RElem r;
    r.c[1] = 1;
    return r;
}

RElem Ring::from_field(fq_t a) const {
    RElem r;
    r.c[0] = a;
    return r;
}

RElem Ring::add(RElem a, RElem b) const {
    RElem r;
    for (int i = 0; i < t_; ++i) r.c[i] = f_.add(a.c[i], b.c[i]);
    return r;
}

RElem Ring::sub(RElem a, RElem b) const {
    RElem r;
    for (int i = 0; i < t_; ++i) r.c[i] = f_.sub(a.c[i], b.c[i]);
    return r;
}

RElem Ring::neg(RElem a) const {
    RElem r;
    for (int i = 0; i < t_; ++i) r.c[i] = f_.neg(a.c[i]);
    return r;
}

RElem Ring::mul(RElem a, RElem b) const {
    RElem r;
    for (int i = 0; i < t_; ++i)
        for (int j = 0; i + j < t_; ++j)
            r.c[i + j] = f_.add(r.c[i + j], f_.mul(a.c[i], b.c[j]));
    return r;
}

RElem Ring::inv(RElem a) const {
    if (!is_unit(a))
        throw VerifyError("ring: element " + str(a) + " is not invertible (h^0 part is zero)");
    RElem r;
    r.c[0] = f_.inv(a.c[0]);
    // Series lift: r solves a*r = 1 layer by layer in powers of h.
    for (int k = 1; k < t_; ++k) {
        fq_t acc = 0;
        for (int i = 1; i <= k; ++i) acc = f_.add(acc, f_.mul(a.c[i], r.c[k - i]));
        r.c[k] = f_.neg(f_.mul(acc, r.c[0]));
    }
    return r;
}

RElem Ring::pow(RElem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    RElem r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Ring::str(RElem a) const {
    if (is_zero(a)) return "0";
    std::string s;
    for (int i = 0; i < t_; ++i) {
        if (a.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string coef = f_.str(a.c[i]);
        if (i == 0) {
            s += coef;
        } else {
            if (coef != "1") s += "(" + coef + ")*";
            s += "h";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace casw

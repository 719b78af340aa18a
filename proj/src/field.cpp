#include "casw/field.hpp"

#include <algorithm>
#include <random>

#include "casw/error.hpp"

namespace casw {

namespace {

constexpr int kMaxQ = 1024;  // table-driven arithmetic bound

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, little-endian, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return c;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    while (a.size() >= b.size()) {
        int lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            int& t = a[shift + i];
            t = ((t - lead * b[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

std::string poly_str(const Poly& a) {
    if (a.empty()) return "0";
    std::string s;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(a[i]);
        } else {
            if (a[i] != 1) s += std::to_string(a[i]) + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// A monic factor of degree <= deg(f)/2, or empty if none (f irreducible).
Poly find_factor(const Poly& f, int p) {
    int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return g;
        }
    }
    return {};
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw MalformedError("field: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw MalformedError("field: extension degree must be >= 1");
    if (static_cast<int>(modulus_.size()) != m + 1)
        throw MalformedError("field: modulus must have degree m = " + std::to_string(m));
    for (int& c : modulus_) c = ((c % p) + p) % p;
    if (modulus_[m] != 1) throw MalformedError("field: modulus must be monic");

    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw CapacityError("field: p^m exceeds table capacity " + std::to_string(kMaxQ));
    }
    q_ = static_cast<int>(q);

    Poly factor = find_factor(modulus_, p_);
    if (!factor.empty())
        throw MalformedError("field: reducible modulus " + poly_str(modulus_) + ": factor (" +
                             poly_str(factor) + ")");

    auto tab = std::make_shared<Tables>();
    tab->mul.assign(static_cast<size_t>(q_) * q_, 0);
    auto decode = [&](fq_t a) {
        Poly v(m_);
        int x = a;
        for (int i = 0; i < m_; ++i) {
            v[i] = x % p_;
            x /= p_;
        }
        trim(v);
        return v;
    };
    auto encode = [&](const Poly& v) {
        fq_t code = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            code = static_cast<fq_t>(code * p_ + v[i]);
        return code;
    };
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(static_cast<fq_t>(a));
        for (int b = a; b < q_; ++b) {
            fq_t c = encode(poly_mod(poly_mul(pa, decode(static_cast<fq_t>(b)), p_), modulus_, p_));
            tab->mul[static_cast<size_t>(a) * q_ + b] = c;
            tab->mul[static_cast<size_t>(b) * q_ + a] = c;
        }
    }

    tab->inv.assign(q_, 0);
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (tab->mul[static_cast<size_t>(a) * q_ + b] == 1) {
                tab->inv[a] = static_cast<fq_t>(b);
                break;
            }
        }
        if (tab->inv[a] == 0) throw InternalError("field: element with no inverse; modulus not irreducible?");
    }

    tab->frob.assign(q_, 0);
    tab->frobinv.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        fq_t f = static_cast<fq_t>(a);
        fq_t r = 1;
        // a^p by repeated multiplication (p is small)
        for (int i = 0; i < p_; ++i) r = tab->mul[static_cast<size_t>(r) * q_ + f];
        tab->frob[a] = r;
    }
    for (int a = 0; a < q_; ++a) tab->frobinv[tab->frob[a]] = static_cast<fq_t>(a);

    tab_ = tab;

    // Spot check: the multiplicative group has order q-1.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<unsigned long long>(p_) << 32) ^
                        (static_cast<unsigned long long>(m_) << 16) ^ q_);
    if (q_ > 1) {
        fq_t a = static_cast<fq_t>(1 + rng() % (q_ - 1));
        if (pow(a, q_ - 1) != 1) throw InternalError("field: multiplicative group order check failed");
    }
}

Field Field::prime(int p) { return Field(p, 1, {0, 1}); }

Field Field::with_default_modulus(int p, int m) {
    if (m == 1) return prime(p);
    if (!is_prime(p)) throw MalformedError("field: p = " + std::to_string(p) + " is not prime");
    long long count = 1;
    for (int i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxQ) throw CapacityError("field: p^m exceeds table capacity");
    }
    for (long long code = 0; code < count; ++code) {
        std::vector<int> mod(m + 1, 0);
        long long c = code;
        for (int i = 0; i < m; ++i) {
            mod[i] = static_cast<int>(c % p);
            c /= p;
        }
        mod[m] = 1;
        Poly f(mod.begin(), mod.end());
        if (find_factor(f, p).empty()) return Field(p, m, mod);
    }
    throw InternalError("field: no irreducible polynomial found");
}

fq_t Field::add(fq_t a, fq_t b) const {
    if (p_ == 2) return a ^ b;
    fq_t r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        int da = (a / mul) % p_, db = (b / mul) % p_;
        r = static_cast<fq_t>(r + ((da + db) % p_) * mul);
        mul = static_cast<fq_t>(mul * p_);
    }
    return r;
}

fq_t Field::neg(fq_t a) const {
    if (p_ == 2) return a;
    fq_t r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
        int da = (a / mul) % p_;
        r = static_cast<fq_t>(r + ((p_ - da) % p_) * mul);
        mul = static_cast<fq_t>(mul * p_);
    }
    return r;
}

fq_t Field::sub(fq_t a, fq_t b) const { return add(a, neg(b)); }

fq_t Field::inv(fq_t a) const {
    if (a == 0) throw VerifyError("field: inverse of zero");
    return tab_->inv[a];
}

fq_t Field::pow(fq_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    fq_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

fq_t Field::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return static_cast<fq_t>(r);
}

std::vector<int> Field::coeffs(fq_t a) const {
    std::vector<int> v(m_);
    int x = a;
    for (int i = 0; i < m_; ++i) {
        v[i] = x % p_;
        x /= p_;
    }
    return v;
}

fq_t Field::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > m_) throw MalformedError("field: coefficient vector longer than m");
    fq_t code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        int d = ((c[i] % p_) + p_) % p_;
        code = static_cast<fq_t>(code * p_ + d);
    }
    return code;
}

std::string Field::str(fq_t a) const {
    Poly v = coeffs(a);
    trim(v);
    return poly_str(v);
}

bool Field::same(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

}  // namespace casw

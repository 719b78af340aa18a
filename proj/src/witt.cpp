#include "casw/witt.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>

#include "casw/error.hpp"

namespace casw {

namespace {

using boost::multiprecision::cpp_int;
using ExpKey = std::array<std::uint8_t, 8>;

// Exact-integer multivariate polynomials used only while deriving the
// structure polynomials; frozen to mod-p form afterwards.
using ZPoly = std::map<ExpKey, cpp_int>;

constexpr size_t kTermCap = 2'000'000;

void zadd_term(ZPoly& a, const ExpKey& e, const cpp_int& c) {
    if (c == 0) return;
    auto it = a.find(e);
    if (it == a.end()) {
        a.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) a.erase(it);
    }
    if (a.size() > kTermCap) throw CapacityError("witt: structure polynomial too large");
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    for (auto& [e, c] : b) zadd_term(r, e, c);
    return r;
}

ZPoly zscale(const ZPoly& a, const cpp_int& s) {
    ZPoly r;
    if (s == 0) return r;
    for (auto& [e, c] : a) r.emplace(e, c * s);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            ExpKey e;
            for (int i = 0; i < 8; ++i) {
                int s = ea[i] + eb[i];
                if (s > 255) throw CapacityError("witt: exponent overflow");
                e[i] = static_cast<std::uint8_t>(s);
            }
            zadd_term(r, e, ca * cb);
        }
    return r;
}

ZPoly zpow(const ZPoly& a, long long e) {
    ZPoly r;
    r.emplace(ExpKey{}, 1);
    ZPoly base = a;
    while (e > 0) {
        if (e & 1) r = zmul(r, base);
        base = zmul(base, base);
        e >>= 1;
    }
    return r;
}

ZPoly zvar(int slot, long long exp) {
    ZPoly r;
    ExpKey e{};
    if (exp > 255) throw CapacityError("witt: exponent overflow");
    e[slot] = static_cast<std::uint8_t>(exp);
    r.emplace(e, 1);
    return r;
}

// Ghost component w_i = sum_{j<=i} p^j v_j^{p^{i-j}} over the given slots.
ZPoly ghost(int p, int i, const std::vector<int>& slots) {
    ZPoly w;
    cpp_int pj = 1;
    long long pow_p = 1;
    for (int k = 0; k < i; ++k) pow_p *= p;
    for (int j = 0; j <= i; ++j) {
        long long e = pow_p;
        for (int k = 0; k < j; ++k) e /= p;
        w = zadd(w, zscale(zvar(slots[j], e), pj));
        pj *= p;
    }
    return w;
}

WittPoly freeze(const ZPoly& z, int p) {
    WittPoly out;
    for (auto& [e, c] : z) {
        cpp_int r = c % p;
        if (r < 0) r += p;
        int coef = static_cast<int>(r);
        if (coef == 0) continue;
        out.terms.push_back({e, coef});
    }
    return out;
}

// Exact division by p^i with integrality verification.
ZPoly zdiv_exact(const ZPoly& a, const cpp_int& d) {
    ZPoly r;
    for (auto& [e, c] : a) {
        if (c % d != 0) throw InternalError("witt: ghost recursion produced a non-integral coefficient");
        r.emplace(e, c / d);
    }
    return r;
}

fq_t eval_poly(const WittPoly& poly, const Field& f, const std::array<fq_t, 8>& vals) {
    fq_t acc = 0;
    for (auto& t : poly.terms) {
        fq_t prod = f.from_int(t.coef);
        for (int s = 0; s < 8 && prod != 0; ++s)
            if (t.exp[s]) prod = f.mul(prod, f.pow(vals[s], t.exp[s]));
        acc = f.add(acc, prod);
    }
    return acc;
}

std::uint64_t key_of(const WittVector& v, int q) {
    std::uint64_t k = 0;
    for (fq_t c : v.coords) k = k * static_cast<std::uint64_t>(q) + c;
    return k;
}

}  // namespace

WittContext::WittContext(int p, int n) : p_(p), n_(n) {
    if (n < 1) throw MalformedError("witt: length must be >= 1");
    if (n > 4) throw CapacityError("witt: length n > 4 unsupported");

    std::vector<int> xs, ys;
    for (int j = 0; j < n; ++j) xs.push_back(j);
    for (int j = 0; j < n; ++j) ys.push_back(4 + j);

    std::vector<ZPoly> s, m, v;  // sum, product, negation over Z
    cpp_int pi = 1;
    for (int i = 0; i < n; ++i) {
        ZPoly gx = ghost(p, i, xs), gy = ghost(p, i, ys);

        ZPoly snum = zadd(gx, gy);
        ZPoly mnum = zmul(gx, gy);
        ZPoly vnum = zscale(gx, -1);
        cpp_int pj = 1;
        for (int j = 0; j < i; ++j) {
            long long e = 1;
            for (int k = 0; k < i - j; ++k) e *= p;
            snum = zadd(snum, zscale(zpow(s[j], e), -pj));
            mnum = zadd(mnum, zscale(zpow(m[j], e), -pj));
            vnum = zadd(vnum, zscale(zpow(v[j], e), -pj));
            pj *= p;
        }
        s.push_back(zdiv_exact(snum, pi));
        m.push_back(zdiv_exact(mnum, pi));
        v.push_back(zdiv_exact(vnum, pi));
        pi *= p;
    }
    for (int i = 0; i < n; ++i) {
        sum_.push_back(freeze(s[i], p));
        prod_.push_back(freeze(m[i], p));
        neg_.push_back(freeze(v[i], p));
    }
}

std::shared_ptr<const WittContext> witt_structure_polynomials(int p, int n) {
    return std::make_shared<const WittContext>(p, n);
}

WittRing::WittRing(std::shared_ptr<const WittContext> ctx, Field field)
    : ctx_(std::move(ctx)), f_(std::move(field)) {
    if (f_.p() != ctx_->p()) throw MalformedError("witt: field characteristic != context prime");
}

WittVector WittRing::zero() const { return WittVector{std::vector<fq_t>(n(), 0)}; }

WittVector WittRing::one() const {
    WittVector v = zero();
    v.coords[0] = 1;
    return v;
}

WittVector WittRing::from_coords(std::vector<fq_t> c) const {
    if (static_cast<int>(c.size()) != n()) throw MalformedError("witt: coordinate length != n");
    for (fq_t x : c)
        if (x >= f_.q()) throw MalformedError("witt: coordinate out of field range");
    return WittVector{std::move(c)};
}

WittVector WittRing::add(const WittVector& x, const WittVector& y) const {
    std::array<fq_t, 8> vals{};
    for (int j = 0; j < n(); ++j) {
        vals[j] = x.coords[j];
        vals[4 + j] = y.coords[j];
    }
    WittVector r = zero();
    for (int i = 0; i < n(); ++i) r.coords[i] = eval_poly(ctx_->sum_poly(i), f_, vals);
    return r;
}

WittVector WittRing::mul(const WittVector& x, const WittVector& y) const {
    std::array<fq_t, 8> vals{};
    for (int j = 0; j < n(); ++j) {
        vals[j] = x.coords[j];
        vals[4 + j] = y.coords[j];
    }
    WittVector r = zero();
    for (int i = 0; i < n(); ++i) r.coords[i] = eval_poly(ctx_->prod_poly(i), f_, vals);
    return r;
}

WittVector WittRing::neg(const WittVector& x) const {
    std::array<fq_t, 8> vals{};
    for (int j = 0; j < n(); ++j) vals[j] = x.coords[j];
    WittVector r = zero();
    for (int i = 0; i < n(); ++i) r.coords[i] = eval_poly(ctx_->neg_poly(i), f_, vals);
    return r;
}

WittVector WittRing::frobenius(const WittVector& x) const {
    WittVector r = x;
    for (auto& c : r.coords) c = f_.frobenius(c);
    return r;
}

WittVector WittRing::artin_schreier(const WittVector& x) const {
    return add(frobenius(x), neg(x));
}

WittVector WittRing::scalar(long long k) const {
    WittVector acc = zero();
    bool negate = k < 0;
    if (negate) k = -k;
    WittVector g = one();
    // double-and-add in the additive group
    while (k > 0) {
        if (k & 1) acc = add(acc, g);
        g = add(g, g);
        k >>= 1;
    }
    return negate ? neg(acc) : acc;
}

std::vector<WittVector> WittRing::enumerate() const {
    long long total = 1;
    for (int i = 0; i < n(); ++i) {
        total *= f_.q();
        if (total > (1LL << 20)) throw CapacityError("witt: q^n exceeds enumeration bound 2^20");
    }
    std::vector<WittVector> all;
    all.reserve(total);
    WittVector v = zero();
    for (long long k = 0; k < total; ++k) {
        long long t = k;
        for (int i = n() - 1; i >= 0; --i) {
            v.coords[i] = static_cast<fq_t>(t % f_.q());
            t /= f_.q();
        }
        all.push_back(v);
    }
    return all;
}

std::string WittRing::str(const WittVector& x) const {
    std::string s = "(";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(x.coords[i]);
    return s + ")";
}

std::vector<long long> invariant_factors_from_orders(const std::vector<long long>& orders, int p) {
    if (orders.empty()) throw MalformedError("invariant factors: empty order list");
    long long mx = *std::max_element(orders.begin(), orders.end());
    int rmax = 0;
    for (long long t = 1; t < mx; t *= p) ++rmax;
    // e_j = log_p #{x : p^j x = 0}; the partition conjugate gives exponents.
    std::vector<int> e(rmax + 1, 0);
    for (int j = 0; j <= rmax; ++j) {
        long long pj = 1;
        for (int k = 0; k < j; ++k) pj *= p;
        long long cnt = 0;
        for (long long o : orders)
            if (pj % o == 0) ++cnt;
        int lg = 0;
        long long t = cnt;
        while (t > 1) {
            if (t % p != 0) throw InternalError("invariant factors: group order not a p-power");
            t /= p;
            ++lg;
        }
        e[j] = lg;
    }
    std::vector<long long> factors;
    for (int j = 1; j <= rmax; ++j) {
        int count_ge_j = e[j] - e[j - 1];  // number of cyclic factors with exponent >= j
        int count_ge_j1 = (j + 1 <= rmax) ? e[j + 1] - e[j] : 0;
        int exactly_j = count_ge_j - count_ge_j1;
        long long pj = 1;
        for (int k = 0; k < j; ++k) pj *= p;
        for (int c = 0; c < exactly_j; ++c) factors.push_back(pj);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

CokerResult coker_P(const WittRing& W) {
    auto all = W.enumerate();
    int q = W.field().q();

    std::set<std::uint64_t> image_keys;
    std::vector<WittVector> image;
    for (auto& x : all) {
        WittVector px = W.artin_schreier(x);
        if (image_keys.insert(key_of(px, q)).second) image.push_back(px);
    }
    std::sort(image.begin(), image.end());

    // Canonical coset representative: lexicographically least coordinates.
    std::map<std::uint64_t, WittVector> rep_of;  // element key -> rep
    std::vector<WittVector> reps;
    for (auto& x : all) {
        if (rep_of.count(key_of(x, q))) continue;
        WittVector best = x;
        std::vector<WittVector> coset;
        for (auto& v : image) {
            WittVector y = W.add(x, v);
            coset.push_back(y);
            if (y < best) best = y;
        }
        for (auto& y : coset) rep_of.emplace(key_of(y, q), best);
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());

    std::vector<long long> orders;
    for (auto& r : reps) {
        WittVector acc = W.zero();
        long long k = 0;
        do {
            acc = W.add(acc, r);
            ++k;
        } while (!image_keys.count(key_of(acc, q)));
        orders.push_back(k);
    }

    CokerResult res;
    res.invariant_factors = invariant_factors_from_orders(orders, W.ctx().p());
    res.coset_representatives = std::move(reps);
    res.image = std::move(image);
    return res;
}

KerResult ker_P(const WittRing& W) {
    auto all = W.enumerate();
    int q = W.field().q();
    std::uint64_t zero_key = key_of(W.zero(), q);

    KerResult res;
    for (auto& x : all)
        if (key_of(W.artin_schreier(x), q) == zero_key) res.elements.push_back(x);

    std::vector<long long> orders;
    for (auto& x : res.elements) {
        WittVector acc = W.zero();
        long long k = 0;
        do {
            acc = W.add(acc, x);
            ++k;
        } while (key_of(acc, q) != zero_key);
        orders.push_back(k);
    }
    res.invariant_factors = invariant_factors_from_orders(orders, W.ctx().p());
    return res;
}

bool doubling_identity_check(const Field& f) {
    if (f.p() != 2) throw MalformedError("doubling check: characteristic 2 required");
    WittRing W(witt_structure_polynomials(2, 2), f);
    for (auto& x : W.enumerate()) {
        WittVector dbl = W.add(x, x);
        if (dbl.coords[0] != 0 || dbl.coords[1] != f.mul(x.coords[0], x.coords[0])) return false;
    }
    return true;
}

}  // namespace casw

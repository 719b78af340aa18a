#include "casw/quasihopf.hpp"

#include <algorithm>
#include <functional>

#include "casw/error.hpp"

namespace casw {

namespace {

std::vector<RElem> zero_vec(const QuasiHopf& H) { return std::vector<RElem>(H.dim, RElem{}); }

bool vec_is_zero(const Ring& R, const std::vector<RElem>& v) {
    for (auto& e : v)
        if (!R.is_zero(e)) return false;
    return true;
}

}  // namespace

bool QuasiHopf::operator==(const QuasiHopf& o) const {
    return ring.same(o.ring) && dim == o.dim && mul == o.mul && unit == o.unit &&
           counit == o.counit && delta == o.delta && phi == o.phi && r == o.r;
}

void QuasiHopf::finish(bool strict) {
    const Ring& R = ring;
    if (static_cast<int>(mul.size()) != dim * dim || static_cast<int>(unit.size()) != dim ||
        static_cast<int>(counit.size()) != dim || static_cast<int>(delta.size()) != dim)
        throw MalformedError("hopf: table sizes inconsistent with dim");
    for (auto& d : delta)
        if (d.arity != 2 || d.dim != dim) throw MalformedError("hopf: delta shape");
    if (phi.arity != 3 || phi.dim != dim || r.arity != 2 || r.dim != dim)
        throw MalformedError("hopf: phi/r shape");
    if (names.empty()) {
        for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    }
    if (!strict) return;

    // unit laws
    for (int i = 0; i < dim; ++i) {
        std::vector<RElem> e(dim);
        e[i] = R.one();
        if (mul_vec(unit, e) != e || mul_vec(e, unit) != e)
            throw MalformedError("hopf: unit law fails at basis element " + std::to_string(i));
    }
    // counit is an algebra map with eps(1) = 1
    if (counit_of(unit) != R.one()) throw MalformedError("hopf: counit(unit) != 1");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            RElem lhs = R.zero();
            for (auto& [k, c] : mul[i * dim + j]) lhs = R.add(lhs, R.mul(c, counit[k]));
            if (lhs != R.mul(counit[i], counit[j]))
                throw MalformedError("hopf: counit is not multiplicative");
        }
    // counit laws for Delta
    for (int i = 0; i < dim; ++i) {
        std::vector<RElem> e(dim);
        e[i] = R.one();
        Tensor d = delta[i];
        Tensor l = counit_leg(*this, d, 1), rr = counit_leg(*this, d, 2);
        if (l.a != e || rr.a != e)
            throw MalformedError("hopf: counit law for Delta fails at basis element " +
                                 std::to_string(i));
    }
    // associativity
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<RElem> ij(dim);
            for (auto& [k, c] : mul[i * dim + j]) ij[k] = R.add(ij[k], c);
            for (int k = 0; k < dim; ++k) {
                std::vector<RElem> ek(dim);
                ek[k] = R.one();
                std::vector<RElem> jk(dim);
                for (auto& [l, c] : mul[j * dim + k]) jk[l] = R.add(jk[l], c);
                std::vector<RElem> ei(dim);
                ei[i] = R.one();
                if (mul_vec(ij, ek) != mul_vec(ei, jk))
                    throw MalformedError("hopf: associativity fails at (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    // Delta multiplicative
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<RElem> ij(dim);
            for (auto& [k, c] : mul[i * dim + j]) ij[k] = R.add(ij[k], c);
            if (delta_of(ij) != hmul(*this, delta[i], delta[j]))
                throw MalformedError("hopf: Delta is not multiplicative at (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
        }
}

std::vector<RElem> QuasiHopf::mul_vec(const std::vector<RElem>& a,
                                      const std::vector<RElem>& b) const {
    std::vector<RElem> out(dim);
    for (int i = 0; i < dim; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (ring.is_zero(b[j])) continue;
            RElem ab = ring.mul(a[i], b[j]);
            for (auto& [k, c] : mul[i * dim + j]) out[k] = ring.add(out[k], ring.mul(ab, c));
        }
    }
    return out;
}

RElem QuasiHopf::counit_of(const std::vector<RElem>& a) const {
    RElem s = ring.zero();
    for (int i = 0; i < dim; ++i) s = ring.add(s, ring.mul(a[i], counit[i]));
    return s;
}

Tensor QuasiHopf::delta_of(const std::vector<RElem>& a) const {
    Tensor t(2, dim);
    for (int i = 0; i < dim; ++i) {
        if (ring.is_zero(a[i])) continue;
        for (size_t f = 0; f < delta[i].a.size(); ++f)
            t.a[f] = ring.add(t.a[f], ring.mul(a[i], delta[i].a[f]));
    }
    return t;
}

bool QuasiHopf::is_commutative() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            std::vector<RElem> ei(dim), ej(dim);
            ei[i] = ring.one();
            ej[j] = ring.one();
            if (mul_vec(ei, ej) != mul_vec(ej, ei)) return false;
        }
    return true;
}

// --- tensor algebra -------------------------------------------------------

Tensor unit_tensor(const QuasiHopf& H, int arity) {
    Tensor t = vec_tensor(H, H.unit);
    Tensor out = t;
    for (int i = 1; i < arity; ++i) out = tensor_prod(H.ring, out, t);
    if (arity == 0) {
        out = Tensor(0, H.dim);
        out.a[0] = H.ring.one();
    }
    return out;
}

Tensor vec_tensor(const QuasiHopf& H, const std::vector<RElem>& v) {
    Tensor t(1, H.dim);
    t.a = v;
    return t;
}

Tensor hmul(const QuasiHopf& H, const Tensor& x, const Tensor& y) {
    if (x.arity != y.arity || x.dim != y.dim) throw MalformedError("hmul: shape mismatch");
    const Ring& R = H.ring;
    int a = x.arity, d = x.dim;
    Tensor out(a, d);
    std::vector<int> xi(a), yi(a), ki(a);
    for (size_t fx = 0; fx < x.a.size(); ++fx) {
        if (R.is_zero(x.a[fx])) continue;
        {
            size_t t = fx;
            for (int l = a - 1; l >= 0; --l) {
                xi[l] = static_cast<int>(t % d);
                t /= d;
            }
        }
        for (size_t fy = 0; fy < y.a.size(); ++fy) {
            if (R.is_zero(y.a[fy])) continue;
            {
                size_t t = fy;
                for (int l = a - 1; l >= 0; --l) {
                    yi[l] = static_cast<int>(t % d);
                    t /= d;
                }
            }
            RElem base = R.mul(x.a[fx], y.a[fy]);
            // expand the per-leg structure constants recursively
            std::function<void(int, RElem)> rec = [&](int leg, RElem acc) {
                if (leg == a) {
                    size_t f = 0;
                    for (int l = 0; l < a; ++l) f = f * d + static_cast<size_t>(ki[l]);
                    out.a[f] = R.add(out.a[f], acc);
                    return;
                }
                for (auto& [k, c] : H.mul[xi[leg] * d + yi[leg]]) {
                    ki[leg] = k;
                    rec(leg + 1, R.mul(acc, c));
                }
            };
            rec(0, base);
        }
    }
    return out;
}

Tensor hinv(const QuasiHopf& H, const Tensor& x) {
    const Ring& R = H.ring;
    Tensor one = unit_tensor(H, x.arity);
    // series attempt: x = s(1 - u) with s the total-counit scalar
    RElem s = x.a.empty() ? R.zero() : R.zero();
    {
        Tensor t = x;
        for (int leg = x.arity; leg >= 1; --leg) t = counit_leg(H, t, leg);
        s = t.a[0];
    }
    if (R.is_unit(s)) {
        RElem sinv = R.inv(s);
        Tensor u = tensor_sub(R, one, tensor_scale(R, sinv, x));
        Tensor acc = one, term = u;
        bool done = tensor_is_zero(R, u);
        for (size_t k = 0; !done && k < x.a.size() + 2; ++k) {
            acc = tensor_add(R, acc, term);
            term = hmul(H, term, u);
            if (tensor_is_zero(R, term)) done = true;
        }
        if (done) {
            Tensor inv = tensor_scale(R, sinv, acc);
            if (hmul(H, x, inv) == one && hmul(H, inv, x) == one) return inv;
        }
    }
    // linear solve in the regular representation of H^{(x)arity}
    size_t n = x.a.size();
    if (n > 512) throw CapacityError("hinv: tensor too large for the solve fallback");
    Mat L(static_cast<int>(n), static_cast<int>(n));
    for (size_t j = 0; j < n; ++j) {
        Tensor e(x.arity, x.dim);
        e.a[j] = R.one();
        Tensor col = hmul(H, x, e);
        for (size_t i = 0; i < n; ++i) L.at(static_cast<int>(i), static_cast<int>(j)) = col.a[i];
    }
    auto res = solve(R, L, one.a);
    if (!res.consistent) throw VerifyError("hinv: tensor is not invertible");
    Tensor inv(x.arity, x.dim);
    inv.a = res.x;
    if (!(hmul(H, inv, x) == one)) throw VerifyError("hinv: one-sided inverse only");
    return inv;
}

Tensor delta_leg(const QuasiHopf& H, const Tensor& x, int leg) {
    const Ring& R = H.ring;
    int a = x.arity, d = x.dim;
    if (leg < 1 || leg > a) throw MalformedError("delta_leg: leg out of range");
    Tensor out(a + 1, d);
    std::vector<int> idx(a);
    for (size_t f = 0; f < x.a.size(); ++f) {
        if (R.is_zero(x.a[f])) continue;
        {
            size_t t = f;
            for (int l = a - 1; l >= 0; --l) {
                idx[l] = static_cast<int>(t % d);
                t /= d;
            }
        }
        const Tensor& dt = H.delta[idx[leg - 1]];
        for (int s = 0; s < d; ++s)
            for (int t2 = 0; t2 < d; ++t2) {
                RElem c = dt.a[static_cast<size_t>(s) * d + t2];
                if (R.is_zero(c)) continue;
                size_t g = 0;
                for (int l = 0; l < a + 1; ++l) {
                    int comp;
                    if (l < leg - 1)
                        comp = idx[l];
                    else if (l == leg - 1)
                        comp = s;
                    else if (l == leg)
                        comp = t2;
                    else
                        comp = idx[l - 1];
                    g = g * d + static_cast<size_t>(comp);
                }
                out.a[g] = R.add(out.a[g], R.mul(x.a[f], c));
            }
    }
    return out;
}

Tensor counit_leg(const QuasiHopf& H, const Tensor& x, int leg) {
    const Ring& R = H.ring;
    int a = x.arity, d = x.dim;
    if (leg < 1 || leg > a) throw MalformedError("counit_leg: leg out of range");
    Tensor out(a - 1, d);
    std::vector<int> idx(a);
    for (size_t f = 0; f < x.a.size(); ++f) {
        if (R.is_zero(x.a[f])) continue;
        {
            size_t t = f;
            for (int l = a - 1; l >= 0; --l) {
                idx[l] = static_cast<int>(t % d);
                t /= d;
            }
        }
        size_t g = 0;
        for (int l = 0; l < a; ++l)
            if (l != leg - 1) g = g * d + static_cast<size_t>(idx[l]);
        out.a[g] = R.add(out.a[g], R.mul(x.a[f], H.counit[idx[leg - 1]]));
    }
    return out;
}

bool counit_normalized(const QuasiHopf& H, const Tensor& x) {
    for (int leg = 1; leg <= x.arity; ++leg)
        if (!tensor_is_zero(H.ring, counit_leg(H, x, leg))) return false;
    return true;
}

Tensor embed_12(const QuasiHopf& H, const Tensor& x2) {
    return tensor_prod(H.ring, x2, vec_tensor(H, H.unit));
}
Tensor embed_23(const QuasiHopf& H, const Tensor& x2) {
    return tensor_prod(H.ring, vec_tensor(H, H.unit), x2);
}
Tensor embed_13(const QuasiHopf& H, const Tensor& x2) {
    return permute_legs(embed_12(H, x2), {1, 3, 2});
}

// --- constructors ----------------------------------------------------------

namespace {

QuasiHopf blank(const Ring& R, int d) {
    QuasiHopf H(R, d);
    H.mul.assign(static_cast<size_t>(d) * d, {});
    H.unit.assign(d, RElem{});
    H.counit.assign(d, RElem{});
    H.delta.assign(d, Tensor(2, d));
    H.phi = Tensor(3, d);
    H.r = Tensor(2, d);
    return H;
}

void set_identity_phi_r(QuasiHopf& H) {
    H.phi = unit_tensor(H, 3);
    H.r = unit_tensor(H, 2);
}

std::string tuple_name(const std::vector<int>& x) {
    std::string s = "g(";
    for (size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

}  // namespace

QuasiHopf make_group_algebra(const Ring& R, const AbelianPGroup& A) {
    int d = static_cast<int>(A.order());
    QuasiHopf H = blank(R, d);
    auto elems = A.elements();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            H.mul[i * d + j] = {{A.index_of(A.add(elems[i], elems[j])), R.one()}};
        H.counit[i] = R.one();
        H.delta[i].a[static_cast<size_t>(i) * d + i] = R.one();
        H.names.push_back(A.exponents.size() == 1 ? (i == 0 ? "1" : "g^" + std::to_string(i))
                                                  : tuple_name(elems[i]));
    }
    H.unit[0] = R.one();
    set_identity_phi_r(H);
    H.finish(true);
    return H;
}

QuasiHopf make_function_algebra(const Ring& R, const AbelianPGroup& A) {
    int d = static_cast<int>(A.order());
    QuasiHopf H = blank(R, d);
    auto elems = A.elements();
    for (int i = 0; i < d; ++i) {
        H.mul[i * d + i] = {{i, R.one()}};
        H.unit[i] = R.one();
        H.counit[i] = (i == A.index_of(std::vector<int>(A.exponents.size(), 0))) ? R.one()
                                                                                 : R.zero();
        H.names.push_back("e" + tuple_name(elems[i]).substr(1));
    }
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a) {
            int b = A.index_of(A.add(elems[c], A.neg(elems[a])));
            H.delta[c].a[static_cast<size_t>(a) * d + b] = R.one();
        }
    set_identity_phi_r(H);
    H.finish(true);
    return H;
}

QuasiHopf make_alpha2(const Ring& R) {
    if (R.field().p() != 2) throw MalformedError("alpha2: characteristic 2 required");
    QuasiHopf H = blank(R, 2);
    // basis {1, d} with d^2 = 0, d primitive
    H.mul[0 * 2 + 0] = {{0, R.one()}};
    H.mul[0 * 2 + 1] = {{1, R.one()}};
    H.mul[1 * 2 + 0] = {{1, R.one()}};
    H.mul[1 * 2 + 1] = {};
    H.unit[0] = R.one();
    H.counit[0] = R.one();
    H.delta[0].a[0 * 2 + 0] = R.one();
    H.delta[1].a[1 * 2 + 0] = R.one();
    H.delta[1].a[0 * 2 + 1] = R.one();
    H.names = {"1", "d"};
    set_identity_phi_r(H);
    H.finish(true);
    return H;
}

QuasiHopf make_category_d(const Ring& R) {
    QuasiHopf H = make_alpha2(R);
    // R-matrix 1(x)1 + d(x)d
    H.r.a[1 * 2 + 1] = R.add(H.r.a[1 * 2 + 1], R.one());
    return H;
}

QuasiHopf make_divided_power(int r) {
    if (r < 1 || r > 4) throw MalformedError("divided_power: r must be in 1..4");
    Ring R(Field::prime(2));
    int d = 1 << r;
    QuasiHopf H = blank(R, d);
    auto binom_odd = [](int n, int k) { return (k & n) == k; };  // Lucas mod 2
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b)
            if (a + b < d && binom_odd(a + b, a)) H.mul[a * d + b] = {{a + b, R.one()}};
        H.counit[a] = (a == 0) ? R.one() : R.zero();
        for (int i = 0; i <= a; ++i) H.delta[a].a[static_cast<size_t>(i) * d + (a - i)] = R.one();
        H.names.push_back(a == 0 ? "1" : (a == 1 ? "y" : "y^(" + std::to_string(a) + ")"));
    }
    H.unit[0] = R.one();
    set_identity_phi_r(H);
    H.finish(true);
    return H;
}

QuasiHopf make_deformed_d(int h_trunc) {
    if (h_trunc < 2) throw MalformedError("deformed_d: h_trunc must be >= 2");
    Ring R(Field::prime(2), h_trunc);
    QuasiHopf H = make_category_d(R);
    // Delta(d) = d(x)1 + 1(x)d + h d(x)d, Phi = 1 + h d(x)d(x)d
    H.delta[1].a[1 * 2 + 1] = R.h();
    H.phi.a[(1 * 2 + 1) * 2 + 1] = R.h();
    H.finish(true);
    return H;
}

QuasiHopf make_biprimitive(const Ring& R) {
    if (R.field().p() != 2) throw MalformedError("biprimitive: characteristic 2 required");
    int d = 4;  // basis {1, a, b, ab}
    QuasiHopf H = blank(R, d);
    auto idx = [](int ea, int eb) { return ea + 2 * eb; };
    for (int ea = 0; ea < 2; ++ea)
        for (int eb = 0; eb < 2; ++eb)
            for (int fa = 0; fa < 2; ++fa)
                for (int fb = 0; fb < 2; ++fb) {
                    if (ea + fa < 2 && eb + fb < 2)
                        H.mul[idx(ea, eb) * d + idx(fa, fb)] = {{idx(ea + fa, eb + fb), R.one()}};
                    else
                        H.mul[idx(ea, eb) * d + idx(fa, fb)] = {};
                }
    H.unit[0] = R.one();
    H.counit[0] = R.one();
    // a, b primitive; Delta(a^ea b^eb) expands over splittings of exponents
    for (int ea = 0; ea < 2; ++ea)
        for (int eb = 0; eb < 2; ++eb) {
            Tensor acc(2, d);
            // sum over splittings of the a- and b-exponents across the legs
            for (int sa = 0; sa <= ea; ++sa)
                for (int sb = 0; sb <= eb; ++sb) {
                    size_t f = static_cast<size_t>(idx(sa, sb)) * d + idx(ea - sa, eb - sb);
                    acc.a[f] = R.add(acc.a[f], R.one());
                }
            H.delta[idx(ea, eb)] = acc;
        }
    H.names = {"1", "a", "b", "ab"};
    set_identity_phi_r(H);
    // R = 1 + a(x)a
    H.r.a[static_cast<size_t>(idx(1, 0)) * d + idx(1, 0)] = R.one();
    H.finish(true);
    return H;
}

// --- axiom checks -----------------------------------------------------------

bool AxiomReport::all_ok() const {
    for (auto& c : checks)
        if (!c.ok) return false;
    return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

AxiomReport check_axioms(const QuasiHopf& H) {
    const Ring& R = H.ring;
    AxiomReport rep;
    auto push = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };

    // structural laws, reported rather than thrown
    {
        bool ok = true;
        std::string detail;
        try {
            QuasiHopf copy = H;
            copy.finish(true);
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        push("algebra-and-counit-laws", ok, detail);
    }

    // quasi-coassociativity: (id(x)Delta)Delta(h) * Phi = Phi * (Delta(x)id)Delta(h)
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < H.dim && ok; ++i) {
            Tensor lhs = hmul(H, delta_leg(H, H.delta[i], 2), H.phi);
            Tensor rhs = hmul(H, H.phi, delta_leg(H, H.delta[i], 1));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "fails at basis element " + H.names[i];
            }
        }
        push("quasi-coassociativity", ok, detail);
    }

    // Phi invertible + counit-normalized
    bool phi_invertible = true;
    try {
        hinv(H, H.phi);
    } catch (const Error&) {
        phi_invertible = false;
    }
    push("phi-invertible", phi_invertible);
    {
        Tensor u2 = unit_tensor(H, 2);
        bool ok = counit_leg(H, H.phi, 1) == u2 && counit_leg(H, H.phi, 2) == u2 &&
                  counit_leg(H, H.phi, 3) == u2;
        push("phi-counit-normalized", ok);
    }

    // pentagon
    {
        Tensor lhs = hmul(H, delta_leg(H, H.phi, 3), delta_leg(H, H.phi, 1));
        Tensor rhs = hmul(H, tensor_prod(R, vec_tensor(H, H.unit), H.phi),
                          hmul(H, delta_leg(H, H.phi, 2),
                               tensor_prod(R, H.phi, vec_tensor(H, H.unit))));
        rep.pentagon_residual = tensor_sub(R, lhs, rhs);
        push("pentagon", tensor_is_zero(R, rep.pentagon_residual));
    }

    // hexagons
    if (phi_invertible) {
        Tensor phi_inv = hinv(H, H.phi);
        Tensor r13 = embed_13(H, H.r), r12 = embed_12(H, H.r), r23 = embed_23(H, H.r);
        {
            Tensor rhs = hmul(H, permute_legs(H.phi, {3, 1, 2}),
                              hmul(H, r13,
                                   hmul(H, permute_legs(phi_inv, {1, 3, 2}),
                                        hmul(H, r23, H.phi))));
            rep.hex1_residual = tensor_sub(R, delta_leg(H, H.r, 1), rhs);
            push("hexagon-1", tensor_is_zero(R, rep.hex1_residual));
        }
        {
            Tensor rhs = hmul(H, permute_legs(phi_inv, {2, 3, 1}),
                              hmul(H, r13,
                                   hmul(H, permute_legs(H.phi, {2, 1, 3}),
                                        hmul(H, r12, phi_inv))));
            rep.hex2_residual = tensor_sub(R, delta_leg(H, H.r, 2), rhs);
            push("hexagon-2", tensor_is_zero(R, rep.hex2_residual));
        }
    } else {
        push("hexagon-1", false, "phi not invertible");
        push("hexagon-2", false, "phi not invertible");
    }

    // triangularity R21 R = 1(x)1
    {
        rep.triangular_residual =
            tensor_sub(R, hmul(H, permute_legs(H.r, {2, 1}), H.r), unit_tensor(H, 2));
        push("triangularity", tensor_is_zero(R, rep.triangular_residual));
    }

    // R counit normalization
    {
        Tensor u1 = vec_tensor(H, H.unit);
        bool ok = counit_leg(H, H.r, 1) == u1 && counit_leg(H, H.r, 2) == u1;
        push("r-counit-normalized", ok);
    }

    return rep;
}

// --- Hopf-theoretic operations ----------------------------------------------

std::vector<std::vector<RElem>> primitives(const QuasiHopf& H) {
    const Ring& R = H.ring;
    int d = H.dim;
    Mat M(d * d, d);
    for (int i = 0; i < d; ++i) {
        std::vector<RElem> e(d);
        e[i] = R.one();
        Tensor t = H.delta[i];
        Tensor prim = tensor_add(R, tensor_prod(R, vec_tensor(H, e), vec_tensor(H, H.unit)),
                                 tensor_prod(R, vec_tensor(H, H.unit), vec_tensor(H, e)));
        Tensor diff = tensor_sub(R, t, prim);
        for (int f = 0; f < d * d; ++f) M.at(f, i) = diff.a[f];
    }
    return nullspace(R, M);
}

std::vector<std::vector<RElem>> grouplikes(const QuasiHopf& H) {
    const Ring& R = H.ring;
    if (!R.is_field()) throw MalformedError("grouplikes: field base ring required");
    long long total = 1;
    for (int i = 0; i < H.dim; ++i) {
        total *= R.field().q();
        if (total > (1 << 16)) throw CapacityError("grouplikes: q^dim exceeds 2^16");
    }
    std::vector<std::vector<RElem>> out;
    for (long long code = 0; code < total; ++code) {
        std::vector<RElem> x(H.dim);
        long long c = code;
        for (int i = 0; i < H.dim; ++i) {
            x[i] = R.from_field(static_cast<fq_t>(c % R.field().q()));
            c /= R.field().q();
        }
        if (H.counit_of(x) != R.one()) continue;
        Tensor dx = H.delta_of(x);
        Tensor xx = tensor_prod(R, vec_tensor(H, x), vec_tensor(H, x));
        if (dx == xx) out.push_back(x);
    }
    return out;
}

bool is_twist_normalized(const QuasiHopf& H, const Tensor& J) {
    Tensor u1 = vec_tensor(H, H.unit);
    return counit_leg(H, J, 1) == u1 && counit_leg(H, J, 2) == u1;
}

QuasiHopf apply_twist(const QuasiHopf& H, const Tensor& J) {
    const Ring& R = H.ring;
    if (J.arity != 2 || J.dim != H.dim) throw MalformedError("apply_twist: J must be a 2-tensor");
    Tensor Jinv = hinv(H, J);  // throws if not invertible
    QuasiHopf out = H;
    for (int i = 0; i < H.dim; ++i) out.delta[i] = hmul(H, J, hmul(H, H.delta[i], Jinv));
    Tensor d2J = delta_leg(H, J, 2), d1Jinv = delta_leg(H, Jinv, 1);
    out.phi = hmul(H, tensor_prod(R, vec_tensor(H, H.unit), J),
                   hmul(H, d2J,
                        hmul(H, H.phi,
                             hmul(H, d1Jinv, tensor_prod(R, Jinv, vec_tensor(H, H.unit))))));
    out.r = hmul(H, permute_legs(J, {2, 1}), hmul(H, H.r, Jinv));
    out.finish(false);
    return out;
}

Tensor coboundary_twist(const QuasiHopf& H, const std::vector<RElem>& x) {
    const Ring& R = H.ring;
    if (H.counit_of(x) != R.one()) throw MalformedError("coboundary_twist: eps(x) != 1");
    Tensor dx_inv = hinv(H, H.delta_of(x));
    return hmul(H, tensor_prod(R, vec_tensor(H, x), vec_tensor(H, x)), dx_inv);
}

}  // namespace casw

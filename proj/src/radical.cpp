#include <algorithm>

#include "casw/error.hpp"
#include "casw/quasihopf.hpp"

namespace casw {

namespace {

std::vector<RElem> basis_vec(const QuasiHopf& H, int i) {
    std::vector<RElem> e(H.dim);
    e[i] = H.ring.one();
    return e;
}

Mat rows_from(const Ring& R, const std::vector<std::vector<RElem>>& vs, int cols) {
    Mat m(static_cast<int>(vs.size()), cols);
    for (size_t i = 0; i < vs.size(); ++i)
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(i), c) = vs[i][c];
    return m;
}

// Left-multiplication matrix of the element v in the regular representation.
Mat left_mult(const QuasiHopf& H, const std::vector<RElem>& v) {
    Mat L(H.dim, H.dim);
    for (int j = 0; j < H.dim; ++j) {
        auto col = H.mul_vec(v, basis_vec(H, j));
        for (int i = 0; i < H.dim; ++i) L.at(i, j) = col[i];
    }
    return L;
}

// x^{p^s} = 0 cuts out the radical of a commutative algebra; the map is
// F_p-linear, so solve over the prime field and re-span over F_q.
Mat radical_commutative(const QuasiHopf& H) {
    const Ring& R = H.ring;
    const Field& F = R.field();
    int d = H.dim, p = F.p(), m = F.m();
    int ps = 1;
    while (ps < d) ps *= p;

    auto pow_ps = [&](std::vector<RElem> x) {
        // x^{ps} by repeated p-th power via square-and-multiply
        std::vector<RElem> acc = H.unit;
        std::vector<RElem> base = std::move(x);
        int e = ps;
        while (e > 0) {
            if (e & 1) acc = H.mul_vec(acc, base);
            base = H.mul_vec(base, base);
            e >>= 1;
        }
        return acc;
    };

    // F_p coordinates: basis e_i * t^j, i < d, j < m
    Ring Fp(Field::prime(p));
    Mat M(d * m, d * m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < m; ++j) {
            std::vector<RElem> x(d);
            std::vector<int> c(m, 0);
            c[j] = 1;
            x[i] = R.from_field(F.from_coeffs(c));
            auto y = pow_ps(x);
            for (int i2 = 0; i2 < d; ++i2) {
                auto coeffs = F.coeffs(y[i2].c[0]);
                for (int j2 = 0; j2 < m; ++j2)
                    M.at(i2 * m + j2, i * m + j) = Fp.from_int(coeffs[j2]);
            }
        }
    auto null_fp = nullspace(Fp, M);
    // collapse F_p kernel vectors to F_q vectors, then take an F_q row span
    std::vector<std::vector<RElem>> vecs;
    for (auto& n : null_fp) {
        std::vector<RElem> v(d);
        for (int i = 0; i < d; ++i) {
            std::vector<int> c(m);
            for (int j = 0; j < m; ++j) c[j] = n[i * m + j].c[0];
            v[i] = R.from_field(F.from_coeffs(c));
        }
        vecs.push_back(std::move(v));
    }
    return row_span(R, rows_from(R, vecs, d)).basis;
}

// Chain of characteristic-polynomial coefficient kernels (char p): starting
// from the whole algebra, refine by c_{p^k}(xy) = 0 for y over the current
// ideal; after floor(log_p dim)+1 steps the chain stabilizes at the radical.
Mat radical_charpoly_chain(const QuasiHopf& H) {
    const Ring& R = H.ring;
    const Field& F = R.field();
    int d = H.dim, p = F.p(), m = F.m();

    // current ideal as rows (start: identity)
    Mat I = Mat::identity(R, d);
    int pk = 1;
    for (int step = 0; pk <= d; ++step, pk *= p) {
        int k = I.rows;
        if (k == 0) break;
        // unknowns eta_i = xi_i^{pk}; equations indexed by basis y of I
        Mat M(k, k);
        for (int yi = 0; yi < k; ++yi) {
            std::vector<RElem> y(d);
            for (int c = 0; c < d; ++c) y[c] = I.at(yi, c);
            for (int xi = 0; xi < k; ++xi) {
                std::vector<RElem> x(d);
                for (int c = 0; c < d; ++c) x[c] = I.at(xi, c);
                auto xy = H.mul_vec(x, y);
                auto cp = berkowitz_charpoly(R, left_mult(H, xy));
                M.at(yi, xi) = cp[pk];
            }
        }
        auto etas = nullspace(R, M);
        // xi = eta^{p^{-k}}: invert Frobenius^k on each coordinate (Frob^m = id)
        int kfrob = 0;
        for (int t = 1; t < pk; t *= p) ++kfrob;
        kfrob %= m;
        std::vector<std::vector<RElem>> new_rows;
        for (auto& eta : etas) {
            std::vector<RElem> xi(eta.size());
            for (size_t i = 0; i < eta.size(); ++i) {
                fq_t v = eta[i].c[0];
                for (int t = 0; t < kfrob; ++t) v = F.frobenius_inv(v);
                xi[i] = R.from_field(v);
            }
            std::vector<RElem> vec(d);
            for (int c = 0; c < d; ++c) {
                RElem acc = R.zero();
                for (int i = 0; i < k; ++i) acc = R.add(acc, R.mul(xi[i], I.at(i, c)));
                vec[c] = acc;
            }
            new_rows.push_back(std::move(vec));
        }
        I = row_span(R, rows_from(R, new_rows, d)).basis;
    }
    return I;
}

bool is_nilpotent_ideal(const QuasiHopf& H, const Mat& N) {
    const Ring& R = H.ring;
    int d = H.dim;
    // ideal: closed under left/right multiplication by basis elements
    for (int r = 0; r < N.rows; ++r) {
        std::vector<RElem> v(d);
        for (int c = 0; c < d; ++c) v[c] = N.at(r, c);
        RowSpan S = row_span(R, N);
        for (int i = 0; i < d; ++i) {
            if (!span_contains(R, S, H.mul_vec(v, basis_vec(H, i)))) return false;
            if (!span_contains(R, S, H.mul_vec(basis_vec(H, i), v))) return false;
        }
    }
    // nilpotent: powers of the span shrink to zero
    Mat cur = N;
    for (int it = 0; it <= d && cur.rows > 0; ++it) {
        std::vector<std::vector<RElem>> prods;
        for (int r1 = 0; r1 < cur.rows; ++r1)
            for (int r2 = 0; r2 < N.rows; ++r2) {
                std::vector<RElem> a(d), b(d);
                for (int c = 0; c < d; ++c) {
                    a[c] = cur.at(r1, c);
                    b[c] = N.at(r2, c);
                }
                prods.push_back(H.mul_vec(a, b));
            }
        cur = row_span(R, rows_from(R, prods, d)).basis;
        if (cur.rows == 0) return true;
    }
    return cur.rows == 0;
}

}  // namespace

std::vector<RElem> berkowitz_charpoly(const Ring& R, const Mat& M) {
    if (M.rows != M.cols) throw MalformedError("charpoly: square matrix required");
    int n = M.rows;
    std::vector<RElem> c = {R.one()};
    for (int r = 1; r <= n; ++r) {
        // sequence t_0 = 1, t_1 = -M[r-1][r-1], t_k = -Row * A^{k-2} * Col
        std::vector<RElem> t(r + 1, R.zero());
        t[0] = R.one();
        t[1] = R.neg(M.at(r - 1, r - 1));
        std::vector<RElem> w(r - 1);
        for (int i = 0; i < r - 1; ++i) w[i] = M.at(i, r - 1);
        for (int k = 2; k <= r; ++k) {
            RElem dot = R.zero();
            for (int i = 0; i < r - 1; ++i) dot = R.add(dot, R.mul(M.at(r - 1, i), w[i]));
            t[k] = R.neg(dot);
            if (k < r) {
                std::vector<RElem> w2(r - 1, R.zero());
                for (int i = 0; i < r - 1; ++i)
                    for (int j = 0; j < r - 1; ++j) w2[i] = R.add(w2[i], R.mul(M.at(i, j), w[j]));
                w = std::move(w2);
            }
        }
        std::vector<RElem> cn(r + 1, R.zero());
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < static_cast<int>(c.size()); ++j) {
                int k = i - j;
                if (k < 0 || k > r) continue;
                cn[i] = R.add(cn[i], R.mul(t[k], c[j]));
            }
        c = std::move(cn);
    }
    return c;
}

Mat jacobson_radical_basis(const QuasiHopf& H) {
    const Ring& R = H.ring;
    if (!R.is_field())
        throw MalformedError("radical basis: field base ring required (use radical_generators)");
    Mat chain = radical_charpoly_chain(H);
    if (H.is_commutative()) {
        Mat frob = radical_commutative(H);
        if (!(chain == frob))
            throw InternalError("radical: commutative Frobenius kernel disagrees with the charpoly chain");
    }
    if (!is_nilpotent_ideal(H, chain))
        throw InternalError("radical: computed subspace is not a nilpotent ideal");
    return chain;
}

std::vector<std::vector<RElem>> radical_generators(const QuasiHopf& H) {
    const Ring& R = H.ring;
    if (R.is_field()) {
        Mat b = jacobson_radical_basis(H);
        std::vector<std::vector<RElem>> out;
        for (int r = 0; r < b.rows; ++r) {
            std::vector<RElem> v(H.dim);
            for (int c = 0; c < H.dim; ++c) v[c] = b.at(r, c);
            out.push_back(std::move(v));
        }
        return out;
    }
    // fiber at h = 0, lifted, plus h * basis
    Ring F(R.field(), 1);
    QuasiHopf fiber(F, H.dim);
    fiber.mul.assign(static_cast<size_t>(H.dim) * H.dim, {});
    auto truncate = [&](RElem x) { return F.from_field(x.c[0]); };
    for (size_t i = 0; i < H.mul.size(); ++i)
        for (auto& [k, c] : H.mul[i])
            if (!F.is_zero(truncate(c))) fiber.mul[i].push_back({k, truncate(c)});
    for (int i = 0; i < H.dim; ++i) {
        fiber.unit.push_back(truncate(H.unit[i]));
        fiber.counit.push_back(truncate(H.counit[i]));
        Tensor d(2, H.dim);
        for (size_t f = 0; f < d.a.size(); ++f) d.a[f] = truncate(H.delta[i].a[f]);
        fiber.delta.push_back(d);
    }
    fiber.phi = Tensor(3, H.dim);
    fiber.r = Tensor(2, H.dim);
    for (size_t f = 0; f < fiber.phi.a.size(); ++f) fiber.phi.a[f] = truncate(H.phi.a[f]);
    for (size_t f = 0; f < fiber.r.a.size(); ++f) fiber.r.a[f] = truncate(H.r.a[f]);
    fiber.names = H.names;
    fiber.finish(false);

    Mat fb = jacobson_radical_basis(fiber);
    std::vector<std::vector<RElem>> out;
    for (int r = 0; r < fb.rows; ++r) {
        std::vector<RElem> v(H.dim);
        for (int c = 0; c < H.dim; ++c) v[c] = R.from_field(fb.at(r, c).c[0]);
        out.push_back(std::move(v));
    }
    for (int i = 0; i < H.dim; ++i) {
        std::vector<RElem> v(H.dim);
        v[i] = R.h();
        out.push_back(std::move(v));
    }
    return out;
}

Filtration radical_filtration(const QuasiHopf& H) {
    const Ring& R = H.ring;
    int d = H.dim;
    Filtration F;
    Mat rad = jacobson_radical_basis(H);

    // powers
    F.rad_pow.clear();
    Mat cur = rad;
    while (cur.rows > 0) {
        F.rad_pow.push_back(cur);
        std::vector<std::vector<RElem>> prods;
        for (int r1 = 0; r1 < cur.rows; ++r1)
            for (int r2 = 0; r2 < rad.rows; ++r2) {
                std::vector<RElem> a(d), b(d);
                for (int c = 0; c < d; ++c) {
                    a[c] = cur.at(r1, c);
                    b[c] = rad.at(r2, c);
                }
                prods.push_back(H.mul_vec(a, b));
            }
        cur = row_span(R, rows_from(R, prods, d)).basis;
    }
    F.nilpotency = static_cast<int>(F.rad_pow.size()) + 1;

    // adapted basis, built from the top layer down, then reversed so the
    // unit sits at index 0 and degrees increase along the list
    std::vector<std::vector<RElem>> desc;
    std::vector<int> desc_deg;
    Mat accum(0, d);
    auto try_add = [&](const std::vector<RElem>& v, int deg) {
        std::vector<std::vector<RElem>> rows;
        for (int r = 0; r < accum.rows; ++r) {
            std::vector<RElem> w(d);
            for (int c = 0; c < d; ++c) w[c] = accum.at(r, c);
            rows.push_back(std::move(w));
        }
        rows.push_back(v);
        Mat next = row_span(R, rows_from(R, rows, d)).basis;
        if (next.rows > accum.rows) {
            accum = next;
            desc.push_back(v);
            desc_deg.push_back(deg);
        }
    };
    for (int k = F.nilpotency - 2; k >= 0; --k) {
        const Mat& layer = F.rad_pow[k];
        for (int r = 0; r < layer.rows; ++r) {
            std::vector<RElem> v(d);
            for (int c = 0; c < d; ++c) v[c] = layer.at(r, c);
            try_add(v, k + 1);
        }
    }
    // degree-0 completion inside ker(eps), then the unit
    {
        Mat eps(1, d);
        for (int c = 0; c < d; ++c) eps.at(0, c) = H.counit[c];
        for (auto& v : nullspace(R, eps)) try_add(v, 0);
        try_add(H.unit, 0);
    }
    if (static_cast<int>(desc.size()) != d)
        throw InternalError("filtration: adapted basis construction failed to span");

    F.degree.assign(d, 0);
    F.P = Mat(d, d);
    for (int j = 0; j < d; ++j) {
        int src = d - 1 - j;  // reversed order
        F.degree[j] = desc_deg[src];
        for (int i = 0; i < d; ++i) F.P.at(i, j) = desc[src][i];
    }
    F.Pinv = inverse(R, F.P);
    F.unit_index = 0;

    F.gr_dims.assign(F.nilpotency, 0);
    for (int j = 0; j < d; ++j) F.gr_dims[F.degree[j]]++;
    return F;
}

int vec_degree(const QuasiHopf& H, const Filtration& F, const std::vector<RElem>& v) {
    const Ring& R = H.ring;
    auto av = mat_vec(R, F.Pinv, v);
    int deg = kInfiniteDegree;
    for (int i = 0; i < H.dim; ++i)
        if (!R.is_zero(av[i])) deg = std::min(deg, F.degree[i]);
    return deg;
}

int tensor_degree(const QuasiHopf& H, const Filtration& F, const Tensor& x) {
    const Ring& R = H.ring;
    Tensor ax = apply_leg_matrix(R, x, F.Pinv);
    int deg = kInfiniteDegree;
    for (size_t f = 0; f < ax.a.size(); ++f) {
        if (R.is_zero(ax.a[f])) continue;
        auto idx = tensor_multi_index(ax, f);
        int s = 0;
        for (int l : idx) s += F.degree[l];
        deg = std::min(deg, s);
    }
    return deg;
}

std::pair<int, Tensor> leading_part(const QuasiHopf& H, const Filtration& F, const Tensor& x) {
    const Ring& R = H.ring;
    Tensor ax = apply_leg_matrix(R, x, F.Pinv);
    int deg = kInfiniteDegree;
    for (size_t f = 0; f < ax.a.size(); ++f) {
        if (R.is_zero(ax.a[f])) continue;
        auto idx = tensor_multi_index(ax, f);
        int s = 0;
        for (int l : idx) s += F.degree[l];
        deg = std::min(deg, s);
    }
    Tensor lead(x.arity, x.dim);
    if (deg == kInfiniteDegree) return {deg, lead};
    for (size_t f = 0; f < ax.a.size(); ++f) {
        if (R.is_zero(ax.a[f])) continue;
        auto idx = tensor_multi_index(ax, f);
        int s = 0;
        for (int l : idx) s += F.degree[l];
        if (s == deg) lead.a[f] = ax.a[f];
    }
    return {deg, apply_leg_matrix(R, lead, F.P)};
}

std::pair<int, std::vector<RElem>> leading_part_vec(const QuasiHopf& H, const Filtration& F,
                                                    const std::vector<RElem>& v) {
    const Ring& R = H.ring;
    auto av = mat_vec(R, F.Pinv, v);
    int deg = kInfiniteDegree;
    for (int i = 0; i < H.dim; ++i)
        if (!R.is_zero(av[i])) deg = std::min(deg, F.degree[i]);
    std::vector<RElem> lead(H.dim);
    if (deg == kInfiniteDegree) return {deg, lead};
    for (int i = 0; i < H.dim; ++i)
        if (!R.is_zero(av[i]) && F.degree[i] == deg) lead[i] = av[i];
    return {deg, mat_vec(R, F.P, lead)};
}

QuasiHopf change_basis(const QuasiHopf& H, const Mat& P, const Mat& Pinv) {
    const Ring& R = H.ring;
    int d = H.dim;
    QuasiHopf out(R, d);
    out.mul.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<RElem> pi(d), pj(d);
            for (int c = 0; c < d; ++c) {
                pi[c] = P.at(c, i);
                pj[c] = P.at(c, j);
            }
            auto prod = mat_vec(R, Pinv, H.mul_vec(pi, pj));
            for (int k = 0; k < d; ++k)
                if (!R.is_zero(prod[k])) out.mul[i * d + j].push_back({k, prod[k]});
        }
    out.unit = mat_vec(R, Pinv, H.unit);
    out.counit.assign(d, RElem{});
    for (int j = 0; j < d; ++j) {
        std::vector<RElem> pj(d);
        for (int c = 0; c < d; ++c) pj[c] = P.at(c, j);
        out.counit[j] = H.counit_of(pj);
    }
    out.delta.clear();
    for (int j = 0; j < d; ++j) {
        std::vector<RElem> pj(d);
        for (int c = 0; c < d; ++c) pj[c] = P.at(c, j);
        out.delta.push_back(apply_leg_matrix(R, H.delta_of(pj), Pinv));
    }
    out.phi = apply_leg_matrix(R, H.phi, Pinv);
    out.r = apply_leg_matrix(R, H.r, Pinv);
    out.names.clear();
    for (int j = 0; j < d; ++j) out.names.push_back("b" + std::to_string(j));
    out.finish(false);
    return out;
}

}  // namespace casw

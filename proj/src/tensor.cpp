#include "casw/tensor.hpp"

#include "casw/error.hpp"

namespace casw {

Tensor::Tensor(int ar, int d) : arity(ar), dim(d) {
    size_t n = 1;
    for (int i = 0; i < ar; ++i) {
        n *= static_cast<size_t>(d);
        if (n > (1u << 26)) throw CapacityError("tensor: dim^arity too large");
    }
    a.assign(n, RElem{});
}

size_t tensor_index(const Tensor& t, const std::vector<int>& idx) {
    size_t f = 0;
    for (int j = 0; j < t.arity; ++j) f = f * t.dim + static_cast<size_t>(idx[j]);
    return f;
}

std::vector<int> tensor_multi_index(const Tensor& t, size_t flat) {
    std::vector<int> idx(t.arity);
    for (int j = t.arity - 1; j >= 0; --j) {
        idx[j] = static_cast<int>(flat % t.dim);
        flat /= t.dim;
    }
    return idx;
}

Tensor tensor_add(const Ring& R, const Tensor& x, const Tensor& y) {
    if (x.arity != y.arity || x.dim != y.dim) throw MalformedError("tensor_add: shape mismatch");
    Tensor z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = R.add(z.a[i], y.a[i]);
    return z;
}

Tensor tensor_sub(const Ring& R, const Tensor& x, const Tensor& y) {
    if (x.arity != y.arity || x.dim != y.dim) throw MalformedError("tensor_sub: shape mismatch");
    Tensor z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = R.sub(z.a[i], y.a[i]);
    return z;
}

Tensor tensor_scale(const Ring& R, RElem c, const Tensor& x) {
    Tensor z = x;
    for (auto& e : z.a) e = R.mul(c, e);
    return z;
}

bool tensor_is_zero(const Ring& R, const Tensor& x) {
    for (auto& e : x.a)
        if (!R.is_zero(e)) return false;
    return true;
}

Tensor permute_legs(const Tensor& x, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != x.arity)
        throw MalformedError("permute_legs: permutation size != arity");
    std::vector<bool> seen(x.arity, false);
    for (int s : sigma) {
        if (s < 1 || s > x.arity || seen[s - 1]) throw MalformedError("permute_legs: not a permutation");
        seen[s - 1] = true;
    }
    Tensor y(x.arity, x.dim);
    std::vector<int> src(x.arity);
    for (size_t f = 0; f < y.a.size(); ++f) {
        std::vector<int> j = tensor_multi_index(y, f);
        // slot t of y holds leg sigma[t] of x
        for (int t = 0; t < x.arity; ++t) src[sigma[t] - 1] = j[t];
        y.a[f] = x.a[tensor_index(x, src)];
    }
    return y;
}

Tensor tensor_prod(const Ring& R, const Tensor& x, const Tensor& y) {
    if (x.dim != y.dim) throw MalformedError("tensor_prod: dim mismatch");
    Tensor z(x.arity + y.arity, x.dim);
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (R.is_zero(x.a[i])) continue;
        for (size_t j = 0; j < y.a.size(); ++j) {
            if (R.is_zero(y.a[j])) continue;
            z.a[i * y.a.size() + j] = R.mul(x.a[i], y.a[j]);
        }
    }
    return z;
}

Tensor apply_leg_matrix_one(const Ring& R, const Tensor& x, const Mat& P, int leg) {
    if (P.rows != x.dim || P.cols != x.dim) throw MalformedError("apply_leg_matrix: shape mismatch");
    // stride of the chosen leg in the flat layout
    size_t stride = 1;
    for (int t = x.arity; t > leg; --t) stride *= static_cast<size_t>(x.dim);
    size_t block = stride * static_cast<size_t>(x.dim);
    Tensor y(x.arity, x.dim);
    for (size_t base = 0; base < x.a.size(); base += block)
        for (size_t off = 0; off < stride; ++off)
            for (int i = 0; i < x.dim; ++i) {
                RElem xi = x.a[base + static_cast<size_t>(i) * stride + off];
                if (R.is_zero(xi)) continue;
                for (int k = 0; k < x.dim; ++k) {
                    RElem p = P.at(k, i);
                    if (R.is_zero(p)) continue;
                    size_t idx = base + static_cast<size_t>(k) * stride + off;
                    y.a[idx] = R.add(y.a[idx], R.mul(p, xi));
                }
            }
    return y;
}

Tensor apply_leg_matrix(const Ring& R, const Tensor& x, const Mat& P) {
    Tensor y = x;
    for (int leg = 1; leg <= x.arity; ++leg) y = apply_leg_matrix_one(R, y, P, leg);
    return y;
}

Tensor alt3(const Ring& R, const Tensor& x) {
    if (x.arity != 3) throw MalformedError("alt3: arity 3 required");
    static const std::vector<std::vector<int>> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                        {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    Tensor z(3, x.dim);
    for (auto& s : perms) z = tensor_add(R, z, permute_legs(x, s));
    return z;
}

Tensor cyc3(const Ring& R, const Tensor& x) {
    if (x.arity != 3) throw MalformedError("cyc3: arity 3 required");
    Tensor z = x;
    z = tensor_add(R, z, permute_legs(x, {3, 1, 2}));
    z = tensor_add(R, z, permute_legs(x, {2, 3, 1}));
    return z;
}

SymDecomp sym_decompose(const Ring& R, int dim) {
    if (R.field().p() != 2) throw MalformedError("sym_decompose: characteristic 2 required");
    SymDecomp sd;
    sd.dim = dim;
    int n = dim;
    sd.wedge_basis = Mat(n * (n - 1) / 2, n * n);
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            sd.wedge_basis.at(row, i * n + j) = R.one();
            sd.wedge_basis.at(row, j * n + i) = R.one();
            ++row;
        }
    sd.gamma_basis = Mat(n * (n + 1) / 2, n * n);
    row = 0;
    for (int i = 0; i < n; ++i) {
        sd.gamma_basis.at(row, i * n + i) = R.one();
        ++row;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            sd.gamma_basis.at(row, i * n + j) = R.one();
            sd.gamma_basis.at(row, j * n + i) = R.one();
            ++row;
        }
    return sd;
}

namespace {

void require_symmetric_12(const Ring& R, const Tensor& x) {
    std::vector<int> flip(x.arity);
    flip[0] = 2;
    flip[1] = 1;
    for (int t = 2; t < x.arity; ++t) flip[t] = t + 1;
    Tensor res = tensor_add(R, x, permute_legs(x, flip));  // (id+tau) on legs 1,2
    if (!tensor_is_zero(R, res)) {
        // name a nonzero residual coordinate
        for (size_t f = 0; f < res.a.size(); ++f)
            if (!R.is_zero(res.a[f])) {
                auto idx = tensor_multi_index(res, f);
                std::string s = "(";
                for (size_t k = 0; k < idx.size(); ++k)
                    s += (k ? "," : "") + std::to_string(idx[k]);
                s += ")";
                throw VerifyError("pi: input not in Gamma^2, residual (id+tau)(x) nonzero at " + s);
            }
    }
}

}  // namespace

std::vector<RElem> pi_apply(const Ring& R, const Tensor& x) {
    if (x.arity != 2) throw MalformedError("pi: arity 2 required");
    require_symmetric_12(R, x);
    std::vector<RElem> v(x.dim);
    for (int i = 0; i < x.dim; ++i) v[i] = x.a[static_cast<size_t>(i) * x.dim + i];
    return v;
}

std::vector<RElem> pi_section(const Ring& R, const Tensor& x) {
    if (!R.is_field()) throw MalformedError("pi_section: field base ring required");
    std::vector<RElem> v = pi_apply(R, x);
    const Field& F = R.field();
    for (auto& e : v) e = R.from_field(F.frobenius_inv(e.c[0]));
    return v;
}

Tensor psi_apply(const Ring& R, const Tensor& x) {
    if (x.arity != 3) throw MalformedError("psi: arity 3 required");
    require_symmetric_12(R, x);
    Tensor y(2, x.dim);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k)
            y.a[static_cast<size_t>(i) * x.dim + k] =
                x.a[(static_cast<size_t>(i) * x.dim + i) * x.dim + k];
    return y;
}

}  // namespace casw

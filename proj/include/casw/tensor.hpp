#ifndef CASW_TENSOR_HPP
#define CASW_TENSOR_HPP

#include <vector>

#include "casw/linalg.hpp"
#include "casw/ring.hpp"

namespace casw {

// Dense element of H^{\otimes arity} over a BaseRing: coefficient array of
// length dim^arity, row-major with leg 1 slowest.
struct Tensor {
    int arity = 0;
    int dim = 0;
    std::vector<RElem> a;

    Tensor() = default;
    Tensor(int ar, int d);

    size_t size() const { return a.size(); }
    bool operator==(const Tensor&) const = default;
};

size_t tensor_index(const Tensor& t, const std::vector<int>& idx);
std::vector<int> tensor_multi_index(const Tensor& t, size_t flat);

Tensor tensor_add(const Ring& R, const Tensor& x, const Tensor& y);
Tensor tensor_sub(const Ring& R, const Tensor& x, const Tensor& y);
Tensor tensor_scale(const Ring& R, RElem c, const Tensor& x);
bool tensor_is_zero(const Ring& R, const Tensor& x);

// Places leg sigma[j] of x into slot j (1-based), so (a(x)b(x)c, {3,1,2})
// is c(x)a(x)b and {2,1} is the flip x_21.
Tensor permute_legs(const Tensor& x, const std::vector<int>& sigma);

Tensor tensor_prod(const Ring& R, const Tensor& x, const Tensor& y);  // arity adds

// Per-leg basis change y = (P (x) ... (x) P) x, and the single-leg variant.
Tensor apply_leg_matrix(const Ring& R, const Tensor& x, const Mat& P);
Tensor apply_leg_matrix_one(const Ring& R, const Tensor& x, const Mat& P, int leg);

// Unsigned sums over all six / the three cyclic leg permutations.
Tensor alt3(const Ring& R, const Tensor& x);
Tensor cyc3(const Ring& R, const Tensor& x);

// Char-2 divided-square decomposition of V(x)V: wedge^2 = Im(id+tau) is
// the symmetric tensors with zero diagonal, Gamma^2 = Ker(id+tau) the
// symmetric ones, and the Frobenius twist V^(1) = Gamma^2/wedge^2 has the
// classes [e_i (x) e_i] as basis, so pi is diagonal extraction.
struct SymDecomp {
    int dim;
    Mat wedge_basis;  // rows span wedge^2, dim n(n-1)/2
    Mat gamma_basis;  // rows span Gamma^2, dim n(n+1)/2
};
SymDecomp sym_decompose(const Ring& R, int dim);

// Quotient coordinates of x in the [e_i (x) e_i] basis. Rejects x not in
// Gamma^2, reporting the residual (id+tau)(x).
std::vector<RElem> pi_apply(const Ring& R, const Tensor& x);

// v with v(x)v = x mod wedge^2: the Frobenius preimage of the diagonal.
std::vector<RElem> pi_section(const Ring& R, const Tensor& x);

// pi (x) id on Gamma^2 V (x) V: legs 1,2 must be symmetric; output 2-tensor
// y[i,k] = x[i,i,k] in the class basis.
Tensor psi_apply(const Ring& R, const Tensor& x);

}  // namespace casw

#endif

#ifndef CASW_QUASIHOPF_HPP
#define CASW_QUASIHOPF_HPP

#include <string>
#include <utility>
#include <vector>

#include "casw/abelian.hpp"
#include "casw/tensor.hpp"

namespace casw {

// Finite (quasi-)Hopf datum over an exact base ring: multiplication table,
// unit, counit, comultiplication, associator Phi and R-matrix. The antipode
// is not modeled; every algorithm here works on (m, Delta, eps, Phi, R).
class QuasiHopf {
public:
    Ring ring;
    int dim = 0;
    // mul[i*dim+j]: sparse expansion of e_i * e_j as {(k, coeff)}
    std::vector<std::vector<std::pair<int, RElem>>> mul;
    std::vector<RElem> unit;
    std::vector<RElem> counit;
    std::vector<Tensor> delta;  // delta[i] = Delta(e_i), arity 2
    Tensor phi;                 // arity 3
    Tensor r;                   // arity 2
    std::vector<std::string> names;

    QuasiHopf(Ring R, int d) : ring(std::move(R)), dim(d) {}

    // strict: reject data violating unit/counit laws, associativity or
    // multiplicativity of Delta. Loaders use strict = false so that
    // `check` can report instead.
    void finish(bool strict);

    std::vector<RElem> mul_vec(const std::vector<RElem>& a, const std::vector<RElem>& b) const;
    RElem counit_of(const std::vector<RElem>& a) const;
    Tensor delta_of(const std::vector<RElem>& a) const;
    bool is_commutative() const;

    bool operator==(const QuasiHopf& o) const;
};

// --- tensor algebra over the datum -------------------------------------

Tensor unit_tensor(const QuasiHopf& H, int arity);
Tensor vec_tensor(const QuasiHopf& H, const std::vector<RElem>& v);  // arity 1
Tensor hmul(const QuasiHopf& H, const Tensor& x, const Tensor& y);
Tensor hinv(const QuasiHopf& H, const Tensor& x);  // throws VerifyError if singular
Tensor delta_leg(const QuasiHopf& H, const Tensor& x, int leg);   // arity + 1
Tensor counit_leg(const QuasiHopf& H, const Tensor& x, int leg);  // arity - 1
bool counit_normalized(const QuasiHopf& H, const Tensor& x);  // eps on every leg gives 0
// 2-tensor into chosen legs of an arity-3 tensor, unit elsewhere (R_13 etc.)
Tensor embed_13(const QuasiHopf& H, const Tensor& x2);
Tensor embed_12(const QuasiHopf& H, const Tensor& x2);
Tensor embed_23(const QuasiHopf& H, const Tensor& x2);

// --- constructors -------------------------------------------------------

QuasiHopf make_group_algebra(const Ring& R, const AbelianPGroup& A);
QuasiHopf make_function_algebra(const Ring& R, const AbelianPGroup& A);
QuasiHopf make_alpha2(const Ring& R);
QuasiHopf make_category_d(const Ring& R);
QuasiHopf make_divided_power(int r);       // over F_2, dual of F_2[x]/(x^{2^r})
QuasiHopf make_deformed_d(int h_trunc);    // over F_2[h]/(h^{h_trunc}), h_trunc >= 2
// F_2[a,b]/(a^2,b^2), a and b primitive, R = 1 + a(x)a: the scrambling fixture.
QuasiHopf make_biprimitive(const Ring& R);

// --- axioms -------------------------------------------------------------

struct AxiomCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    Tensor pentagon_residual;  // arity 4
    Tensor hex1_residual, hex2_residual;  // arity 3
    Tensor triangular_residual;           // arity 2
    bool all_ok() const;
    const AxiomCheck* find(const std::string& name) const;
};

// Computes exact residuals for every axiom; reports, never throws.
// Conventions: pentagon residual (id,id,Delta)(Phi)*(Delta,id,id)(Phi)
//   - (1(x)Phi)*(id,Delta,id)(Phi)*(Phi(x)1);
// hexagons (Delta(x)id)R = Phi_312 R13 Phi_132^{-1} R23 Phi_123 and
//   (id(x)Delta)R = Phi_231^{-1} R13 Phi_213 R12 Phi_123^{-1}.
AxiomReport check_axioms(const QuasiHopf& H);

// --- Hopf-theoretic operations ------------------------------------------

std::vector<std::vector<RElem>> primitives(const QuasiHopf& H);
// Group-like elements (Delta x = x(x)x, eps x = 1) by exhaustive search;
// capacity-limited to q^dim <= 2^16.
std::vector<std::vector<RElem>> grouplikes(const QuasiHopf& H);

bool is_twist_normalized(const QuasiHopf& H, const Tensor& J);
QuasiHopf apply_twist(const QuasiHopf& H, const Tensor& J);
Tensor coboundary_twist(const QuasiHopf& H, const std::vector<RElem>& x);

// --- radical and filtration ----------------------------------------------

struct Filtration {
    int nilpotency = 1;        // smallest N with Rad^N = 0
    std::vector<int> degree;   // adapted index -> filtration degree
    int unit_index = 0;        // adapted index of the unit (always 0)
    Mat P, Pinv;               // adapted basis -> original coords and back
    std::vector<Mat> rad_pow;  // rad_pow[k] rows span Rad^{k+1}, original coords
    std::vector<int> gr_dims;  // gr dimensions per degree
};

// Jacobson radical as a row basis (field base rings). Commutative inputs
// use the Frobenius-power kernel; the general case runs the char-p
// chain of characteristic-polynomial coefficient kernels; on commutative
// inputs both are computed and must agree.
Mat jacobson_radical_basis(const QuasiHopf& H);

// Radical generators over F_q[h]/(h^t): lifted fiber radical plus h*basis.
std::vector<std::vector<RElem>> radical_generators(const QuasiHopf& H);

Filtration radical_filtration(const QuasiHopf& H);

// Degree of a tensor under the induced filtration; 0-tensor reports a
// degree beyond any attainable one (kInfiniteDegree).
constexpr int kInfiniteDegree = 1 << 20;
int tensor_degree(const QuasiHopf& H, const Filtration& F, const Tensor& x);
int vec_degree(const QuasiHopf& H, const Filtration& F, const std::vector<RElem>& v);
// (degree, homogeneous leading part in original coords)
std::pair<int, Tensor> leading_part(const QuasiHopf& H, const Filtration& F, const Tensor& x);
std::pair<int, std::vector<RElem>> leading_part_vec(const QuasiHopf& H, const Filtration& F,
                                                    const std::vector<RElem>& v);

// Conjugate the whole datum into a new basis (columns of P are the new
// basis vectors in old coordinates).
QuasiHopf change_basis(const QuasiHopf& H, const Mat& P, const Mat& Pinv);

// charpoly coefficients c[0..n] of an n x n matrix, det(tI - M) =
// sum c[j] t^{n-j}, by the division-free Berkowitz scheme.
std::vector<RElem> berkowitz_charpoly(const Ring& R, const Mat& M);

}  // namespace casw

#endif

#ifndef CASW_ABELIAN_HPP
#define CASW_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "casw/field.hpp"

namespace casw {

// Finite abelian p-group as a non-increasing exponent list r_1 >= ... >= r_k,
// encoding the direct sum of Z/p^{r_i}. Empty list = trivial group.
struct AbelianPGroup {
    int p = 2;
    std::vector<int> exponents;

    // orders must each be a power of p; normalized to non-increasing.
    static AbelianPGroup from_orders(int p, const std::vector<long long>& orders);

    long long order() const;
    int exponent_log() const;  // r_1, or 0 for the trivial group
    std::vector<long long> cyclic_orders() const;

    // Elements as mixed-radix tuples, lexicographic enumeration.
    std::vector<std::vector<int>> elements() const;
    std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) const;
    std::vector<int> neg(const std::vector<int>& x) const;
    int index_of(const std::vector<int>& x) const;
    std::vector<int> element_at(int index) const;

    bool operator==(const AbelianPGroup&) const = default;
};

// Output currency for cohomology groups: canonical invariant factors,
// ascending, each dividing the next; empty = trivial group.
struct GroupPresentation {
    std::vector<long long> invariant_factors;
    bool operator==(const GroupPresentation&) const = default;
    long long order() const;
    std::string str() const;  // "Z/2 x Z/4", "0" for trivial
};

GroupPresentation presentation_of(const AbelianPGroup& A);

// Hom(A, Z/p^n Z) = A whenever p^n annihilates A.
AbelianPGroup dual_group(const AbelianPGroup& A, int n);

// Hom(+Z/p^a, +Z/p^b) by the min-exponent rule, canonical form.
GroupPresentation hom_group(const AbelianPGroup& A, const GroupPresentation& B);

// Hom(A^dual, W_n(K)/P(W_n(K))) with n = r_1 unless overridden.
GroupPresentation h2_inv_formula(const AbelianPGroup& A, const Field& K,
                                 std::optional<int> n_override = std::nullopt);

// H^1 = A, H^2 = h2_inv_formula, H^i = 0 for i >= 3.
std::vector<GroupPresentation> sweedler_dims_formula(const AbelianPGroup& A, const Field& K,
                                                     int i_max);

}  // namespace casw

#endif

#include "casw/abelian.hpp"

#include <algorithm>

#include "casw/error.hpp"
#include "casw/witt.hpp"

namespace casw {

AbelianPGroup AbelianPGroup::from_orders(int p, const std::vector<long long>& orders) {
    AbelianPGroup A;
    A.p = p;
    for (long long o : orders) {
        if (o < 1) throw MalformedError("group: cyclic order must be >= 1");
        if (o == 1) continue;
        int r = 0;
        long long t = o;
        while (t > 1) {
            if (t % p != 0)
                throw MalformedError("group: order " + std::to_string(o) + " is not a power of " +
                                     std::to_string(p));
            t /= p;
            ++r;
        }
        A.exponents.push_back(r);
    }
    std::sort(A.exponents.rbegin(), A.exponents.rend());
    return A;
}

long long AbelianPGroup::order() const {
    long long n = 1;
    for (int r : exponents)
        for (int i = 0; i < r; ++i) n *= p;
    return n;
}

int AbelianPGroup::exponent_log() const { return exponents.empty() ? 0 : exponents.front(); }

std::vector<long long> AbelianPGroup::cyclic_orders() const {
    std::vector<long long> v;
    for (int r : exponents) {
        long long o = 1;
        for (int i = 0; i < r; ++i) o *= p;
        v.push_back(o);
    }
    return v;
}

std::vector<std::vector<int>> AbelianPGroup::elements() const {
    std::vector<std::vector<int>> all;
    long long n = order();
    for (long long k = 0; k < n; ++k) all.push_back(element_at(static_cast<int>(k)));
    return all;
}

std::vector<int> AbelianPGroup::add(const std::vector<int>& x, const std::vector<int>& y) const {
    auto ords = cyclic_orders();
    std::vector<int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = static_cast<int>((x[i] + y[i]) % ords[i]);
    return z;
}

std::vector<int> AbelianPGroup::neg(const std::vector<int>& x) const {
    auto ords = cyclic_orders();
    std::vector<int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = static_cast<int>((ords[i] - x[i]) % ords[i]);
    return z;
}

int AbelianPGroup::index_of(const std::vector<int>& x) const {
    auto ords = cyclic_orders();
    long long idx = 0;
    for (size_t i = 0; i < x.size(); ++i) idx = idx * ords[i] + x[i];
    return static_cast<int>(idx);
}

std::vector<int> AbelianPGroup::element_at(int index) const {
    auto ords = cyclic_orders();
    std::vector<int> x(ords.size());
    long long t = index;
    for (int i = static_cast<int>(ords.size()) - 1; i >= 0; --i) {
        x[i] = static_cast<int>(t % ords[i]);
        t /= ords[i];
    }
    return x;
}

long long GroupPresentation::order() const {
    long long n = 1;
    for (long long f : invariant_factors) n *= f;
    return n;
}

std::string GroupPresentation::str() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(invariant_factors[i]);
    }
    return s;
}

GroupPresentation presentation_of(const AbelianPGroup& A) {
    GroupPresentation g;
    g.invariant_factors = A.cyclic_orders();
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    return g;
}

AbelianPGroup dual_group(const AbelianPGroup& A, int n) {
    if (n < A.exponent_log())
        throw MalformedError("dual_group: p^n does not annihilate the group (n < r_1)");
    return A;  // Hom(A, Z/p^n) has the same exponents, returned canonically
}

GroupPresentation hom_group(const AbelianPGroup& A, const GroupPresentation& B) {
    std::vector<int> b_exps;
    for (long long f : B.invariant_factors) {
        int r = 0;
        long long t = f;
        while (t > 1) {
            if (t % A.p != 0)
                throw MalformedError("hom_group: presentation factor " + std::to_string(f) +
                                     " is not a power of p = " + std::to_string(A.p));
            t /= A.p;
            ++r;
        }
        b_exps.push_back(r);
    }
    GroupPresentation g;
    for (int a : A.exponents)
        for (int b : b_exps) {
            long long f = 1;
            for (int i = 0; i < std::min(a, b); ++i) f *= A.p;
            g.invariant_factors.push_back(f);
        }
    std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
    return g;
}

GroupPresentation h2_inv_formula(const AbelianPGroup& A, const Field& K,
                                 std::optional<int> n_override) {
    if (K.p() != A.p) throw MalformedError("h2_inv: field characteristic != group prime");
    if (A.exponents.empty()) return GroupPresentation{};
    int n = n_override.value_or(A.exponent_log());
    AbelianPGroup dual = dual_group(A, n);
    WittRing W(witt_structure_polynomials(A.p, n), K);
    CokerResult coker = coker_P(W);
    GroupPresentation cw;
    cw.invariant_factors = coker.invariant_factors;
    return hom_group(dual, cw);
}

std::vector<GroupPresentation> sweedler_dims_formula(const AbelianPGroup& A, const Field& K,
                                                     int i_max) {
    std::vector<GroupPresentation> out;
    if (i_max < 1) return out;
    out.push_back(presentation_of(A));  // H^1 = A
    if (i_max >= 2) out.push_back(h2_inv_formula(A, K));
    for (int i = 3; i <= i_max; ++i) out.push_back(GroupPresentation{});
    return out;
}

}  // namespace casw

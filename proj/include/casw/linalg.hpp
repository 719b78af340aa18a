#ifndef CASW_LINALG_HPP
#define CASW_LINALG_HPP

#include <optional>
#include <vector>

#include "casw/ring.hpp"

namespace casw {

// Dense exact matrix over a BaseRing, row-major.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<RElem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static Mat identity(const Ring& R, int n);

    RElem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const RElem& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const Mat&) const = default;
};

Mat mat_mul(const Ring& R, const Mat& A, const Mat& B);
std::vector<RElem> mat_vec(const Ring& R, const Mat& A, const std::vector<RElem>& v);
Mat transpose(const Mat& A);

struct SolveResult {
    bool consistent = false;
    std::vector<RElem> x;                       // a particular solution
    std::vector<std::vector<RElem>> nullspace;  // F_q-basis of ker M
};

// Reduced row echelon form under the fixed pivot rule (leftmost pivot
// column, lowest remaining row index). Field base rings only.
Mat rref(const Ring& R, Mat m, std::vector<int>* pivot_cols = nullptr);

int rank(const Ring& R, const Mat& m);

// Solves M x = b exactly. Over F_q[h]/(h^t) the system is expanded into
// h-layers and solved as one F_q block system. Inconsistency is a result,
// not an exception: callers branch on it.
SolveResult solve(const Ring& R, const Mat& M, const std::vector<RElem>& b);

std::vector<std::vector<RElem>> nullspace(const Ring& R, const Mat& M);

Mat inverse(const Ring& R, const Mat& M);  // throws VerifyError if singular

// Span utilities over a field: rows of basis are reduced (RREF) rows.
struct RowSpan {
    Mat basis;                    // RREF, zero rows dropped
    std::vector<int> pivot_cols;  // one per basis row
};
RowSpan row_span(const Ring& R, const Mat& rows);
// Residue of v modulo the span (eliminate pivot coordinates).
std::vector<RElem> span_reduce(const Ring& R, const RowSpan& S, std::vector<RElem> v);
bool span_contains(const Ring& R, const RowSpan& S, const std::vector<RElem>& v);

}  // namespace casw

#endif

#include "casw/linalg.hpp"

#include "casw/error.hpp"

namespace casw {

Mat Mat::identity(const Ring& R, int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R.one();
    return m;
}

Mat mat_mul(const Ring& R, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw MalformedError("mat_mul: shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            RElem aik = A.at(i, k);
            if (R.is_zero(aik)) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = R.add(C.at(i, j), R.mul(aik, B.at(k, j)));
        }
    return C;
}

std::vector<RElem> mat_vec(const Ring& R, const Mat& A, const std::vector<RElem>& v) {
    if (A.cols != static_cast<int>(v.size())) throw MalformedError("mat_vec: shape mismatch");
    std::vector<RElem> r(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) r[i] = R.add(r[i], R.mul(A.at(i, j), v[j]));
    return r;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

namespace {

// Forward+back elimination in place; returns pivot columns. Field only.
std::vector<int> eliminate(const Ring& R, Mat& m) {
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < m.cols && prow < m.rows; ++col) {
        int sel = -1;
        for (int r = prow; r < m.rows; ++r)
            if (!R.is_zero(m.at(r, col))) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(prow, c));
        RElem piv_inv = R.inv(m.at(prow, col));
        for (int c = col; c < m.cols; ++c) m.at(prow, c) = R.mul(m.at(prow, c), piv_inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == prow) continue;
            RElem f = m.at(r, col);
            if (R.is_zero(f)) continue;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = R.sub(m.at(r, c), R.mul(f, m.at(prow, c)));
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

// Expand an F_q[h]/(h^t) system into one F_q block system; multiplication
// by an element is lower-triangular Toeplitz across h-layers.
Mat expand_mat(const Ring& R, const Mat& M) {
    int t = R.h_trunc();
    Ring F(R.field(), 1);
    Mat E(M.rows * t, M.cols * t);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) {
            RElem v = M.at(r, c);
            for (int j = 0; j < t; ++j)
                for (int i = 0; i <= j; ++i) E.at(r * t + j, c * t + i) = F.from_field(v.c[j - i]);
        }
    return E;
}

std::vector<RElem> expand_vec(const Ring& R, const std::vector<RElem>& b) {
    int t = R.h_trunc();
    Ring F(R.field(), 1);
    std::vector<RElem> e(b.size() * t);
    for (size_t r = 0; r < b.size(); ++r)
        for (int j = 0; j < t; ++j) e[r * t + j] = F.from_field(b[r].c[j]);
    return e;
}

std::vector<RElem> collapse_vec(const Ring& R, const std::vector<RElem>& e) {
    int t = R.h_trunc();
    std::vector<RElem> v(e.size() / t);
    for (size_t c = 0; c < v.size(); ++c)
        for (int i = 0; i < t; ++i) v[c].c[i] = e[c * t + i].c[0];
    return v;
}

}  // namespace

Mat rref(const Ring& R, Mat m, std::vector<int>* pivot_cols) {
    if (!R.is_field()) throw MalformedError("rref: field base ring required");
    auto p = eliminate(R, m);
    if (pivot_cols) *pivot_cols = std::move(p);
    return m;
}

int rank(const Ring& R, const Mat& m) {
    if (!R.is_field()) {
        Ring F(R.field(), 1);
        return rank(F, expand_mat(R, m));
    }
    Mat c = m;
    return static_cast<int>(eliminate(R, c).size());
}

SolveResult solve(const Ring& R, const Mat& M, const std::vector<RElem>& b) {
    if (M.rows != static_cast<int>(b.size())) throw MalformedError("solve: rhs size mismatch");
    if (!R.is_field()) {
        Ring F(R.field(), 1);
        SolveResult er = solve(F, expand_mat(R, M), expand_vec(R, b));
        SolveResult out;
        out.consistent = er.consistent;
        if (er.consistent) out.x = collapse_vec(R, er.x);
        for (auto& n : er.nullspace) out.nullspace.push_back(collapse_vec(R, n));
        return out;
    }

    Mat aug(M.rows, M.cols + 1);
    for (int r = 0; r < M.rows; ++r) {
        for (int c = 0; c < M.cols; ++c) aug.at(r, c) = M.at(r, c);
        aug.at(r, M.cols) = b[r];
    }
    auto pivots = eliminate(R, aug);

    SolveResult res;
    res.consistent = true;
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == M.cols) res.consistent = false;  // pivot in rhs column

    std::vector<int> pivot_of_col(M.cols, -1);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] < M.cols) pivot_of_col[pivots[i]] = static_cast<int>(i);

    if (res.consistent) {
        res.x.assign(M.cols, R.zero());
        for (int c = 0; c < M.cols; ++c)
            if (pivot_of_col[c] >= 0) res.x[c] = aug.at(pivot_of_col[c], M.cols);
    }

    for (int c = 0; c < M.cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<RElem> v(M.cols, R.zero());
        v[c] = R.one();
        for (int pc = 0; pc < M.cols; ++pc)
            if (pivot_of_col[pc] >= 0) v[pc] = R.neg(aug.at(pivot_of_col[pc], c));
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

std::vector<std::vector<RElem>> nullspace(const Ring& R, const Mat& M) {
    return solve(R, M, std::vector<RElem>(M.rows, R.zero())).nullspace;
}

Mat inverse(const Ring& R, const Mat& M) {
    if (M.rows != M.cols) throw MalformedError("inverse: square matrix required");
    if (!R.is_field()) {
        // Invert layerwise: M = M0 + (higher h); X = M0^{-1} lift via
        // Newton steps X <- X(2 - MX) until exact.
        Ring F(R.field(), 1);
        Mat M0(M.rows, M.cols);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < M.cols; ++c) M0.at(r, c) = F.from_field(M.at(r, c).c[0]);
        Mat X0 = inverse(F, M0);
        Mat X(M.rows, M.cols);
        for (int r = 0; r < M.rows; ++r)
            for (int c = 0; c < M.cols; ++c) X.at(r, c) = RElem{X0.at(r, c)};
        Mat I = Mat::identity(R, M.rows);
        for (int it = 0; it < R.h_trunc(); ++it) {
            Mat E = mat_mul(R, M, X);
            bool ok = (E == I);
            if (ok) return X;
            Mat two_minus(M.rows, M.cols);
            for (int r = 0; r < M.rows; ++r)
                for (int c = 0; c < M.cols; ++c) {
                    RElem v = R.neg(E.at(r, c));
                    if (r == c) v = R.add(v, R.add(R.one(), R.one()));
                    two_minus.at(r, c) = v;
                }
            X = mat_mul(R, X, two_minus);
        }
        if (mat_mul(R, M, X) == I) return X;
        throw VerifyError("inverse: matrix not invertible over the truncated ring");
    }
    Mat aug(M.rows, 2 * M.cols);
    for (int r = 0; r < M.rows; ++r) {
        for (int c = 0; c < M.cols; ++c) aug.at(r, c) = M.at(r, c);
        aug.at(r, M.cols + r) = R.one();
    }
    auto pivots = eliminate(R, aug);
    if (static_cast<int>(pivots.size()) != M.cols || (!pivots.empty() && pivots.back() >= M.cols))
        throw VerifyError("inverse: singular matrix");
    Mat X(M.rows, M.cols);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) X.at(r, c) = aug.at(r, M.cols + c);
    return X;
}

RowSpan row_span(const Ring& R, const Mat& rows) {
    RowSpan s;
    std::vector<int> piv;
    Mat m = rref(R, rows, &piv);
    s.basis = Mat(static_cast<int>(piv.size()), rows.cols);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int c = 0; c < rows.cols; ++c) s.basis.at(static_cast<int>(i), c) = m.at(static_cast<int>(i), c);
    s.pivot_cols = std::move(piv);
    return s;
}

std::vector<RElem> span_reduce(const Ring& R, const RowSpan& S, std::vector<RElem> v) {
    for (int i = 0; i < S.basis.rows; ++i) {
        RElem f = v[S.pivot_cols[i]];
        if (R.is_zero(f)) continue;
        for (int c = 0; c < S.basis.cols; ++c) v[c] = R.sub(v[c], R.mul(f, S.basis.at(i, c)));
    }
    return v;
}

bool span_contains(const Ring& R, const RowSpan& S, const std::vector<RElem>& v) {
    auto r = span_reduce(R, S, v);
    for (auto& e : r)
        if (!R.is_zero(e)) return false;
    return true;
}

}  // namespace casw

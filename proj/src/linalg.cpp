#include "linalg.hpp"

#include <algorithm>
#include <cassert>

namespace infdex {

QVec qvec_zero(int dim) { return QVec(static_cast<size_t>(dim), Rat(0)); }

bool qvec_is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rat dot(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec add(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVec sub(const QVec& a, const QVec& b) {
    assert(a.size() == b.size());
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVec scale(const QVec& v, const Rat& s) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

QVec primitive_oriented(const QVec& v) {
    mpz_class den_lcm(1);
    for (const auto& x : v) {
        mpz_class d = x.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        Rat scaled = x * Rat(den_lcm);
        scaled.canonicalize();
        ints.push_back(scaled.get_num());
    }
    mpz_class g(0);
    for (const auto& z : ints) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    QVec out(v.size(), Rat(0));
    if (g == 0) return out;  // zero vector
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
    return out;
}

QVec primitive(const QVec& v) {
    QVec out = primitive_oriented(v);
    for (const auto& x : out) {
        if (x > 0) return out;
        if (x < 0) return scale(out, Rat(-1));
    }
    return out;
}

bool operator_lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols_in) {
    if (cols_in.empty()) return QMat(0, 0);
    QMat m(static_cast<int>(cols_in[0].size()), static_cast<int>(cols_in.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols_in[c][r];
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows_in) {
    if (rows_in.empty()) return QMat(0, 0);
    QMat m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows_in[r][c];
    return m;
}

QVec QMat::column(int c) const {
    QVec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

QVec QMat::row(int r) const {
    QVec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

std::vector<QVec> QMat::columns() const {
    std::vector<QVec> out;
    out.reserve(cols);
    for (int c = 0; c < cols; ++c) out.push_back(column(c));
    return out;
}

QMat QMat::transpose() const {
    QMat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMat QMat::mul(const QMat& other) const {
    assert(cols == other.rows);
    QMat out(rows, other.cols);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < other.cols; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

QVec QMat::apply(const QVec& v) const {
    assert(static_cast<int>(v.size()) == cols);
    QVec out(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out[r] += at(r, c) * v[c];
    return out;
}

namespace {

// Row echelon reduction in place; returns pivot column per pivot row.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const QMat& m) {
    QMat copy = m;
    return static_cast<int>(echelon(copy).size());
}

Rat determinant(const QMat& m) {
    assert(m.rows == m.cols);
    QMat w = m;
    Rat det(1);
    for (int c = 0; c < w.cols; ++c) {
        int piv = -1;
        for (int i = c; i < w.rows; ++i)
            if (w.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(piv, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        Rat inv = Rat(1) / w.at(c, c);
        for (int i = c + 1; i < w.rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Rat f = w.at(i, c) * inv;
            for (int j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return det;
}

std::optional<QVec> solve_square(const QMat& A, const QVec& b) {
    assert(A.rows == A.cols);
    return solve_consistent(A, b);
}

std::optional<QVec> solve_consistent(const QMat& A, const QVec& b) {
    assert(static_cast<int>(b.size()) == A.rows);
    QMat aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    std::vector<int> pivots = echelon(aug);
    // Inconsistent iff a pivot landed in the augmented column.
    for (int c : pivots)
        if (c == A.cols) return std::nullopt;
    QVec x(A.cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), A.cols);
    return x;
}

std::vector<QVec> kernel_basis(const QMat& A) {
    QMat w = A;
    std::vector<int> pivots = echelon(w);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < A.cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(A.cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMat> inverse(const QMat& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<int> pivots = echelon(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
    QMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::optional<QMat> left_inverse(const QMat& B) {
    QMat gram = B.transpose().mul(B);
    auto gi = inverse(gram);
    if (!gi) return std::nullopt;
    return gi->mul(B.transpose());
}

}  // namespace infdex

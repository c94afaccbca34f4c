// Exact rational vectors and dense matrices, sized for desk-scale polyhedral
// work (dimensions <= 4, a handful of rows). Plain Gaussian elimination over
// mpq is exact and entirely adequate here.

#ifndef INFDEX_LINALG_HPP
#define INFDEX_LINALG_HPP

#include "rational.hpp"

#include <optional>
#include <vector>

namespace infdex {

using QVec = std::vector<Rat>;

QVec qvec_zero(int dim);
bool qvec_is_zero(const QVec& v);
Rat dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const QVec& v, const Rat& s);

/// Clear denominators, divide by the content and flip so the first nonzero
/// coordinate is positive. Used to deduplicate wall normals and rays.
QVec primitive(const QVec& v);

/// Same normalization but preserving the direction (no sign flip).
QVec primitive_oriented(const QVec& v);

bool operator_lex_less(const QVec& a, const QVec& b);

/// Dense rational matrix, row-major.
struct QMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static QMat identity(int n);
    static QMat from_columns(const std::vector<QVec>& cols_in);
    static QMat from_rows(const std::vector<QVec>& rows_in);

    QVec column(int c) const;
    QVec row(int r) const;
    std::vector<QVec> columns() const;

    QMat transpose() const;
    QMat mul(const QMat& other) const;
    QVec apply(const QVec& v) const;  // this * v
};

int rank(const QMat& m);

/// Determinant of a square matrix.
Rat determinant(const QMat& m);

/// Solve A x = b for square invertible A; nullopt when singular.
std::optional<QVec> solve_square(const QMat& A, const QVec& b);

/// Solve A x = b in the least-restrictive sense: returns some exact solution
/// when the system is consistent (A may be rectangular), nullopt otherwise.
std::optional<QVec> solve_consistent(const QMat& A, const QVec& b);

/// Basis of the null space {x : A x = 0}.
std::vector<QVec> kernel_basis(const QMat& A);

/// Inverse of a square invertible matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& m);

/// Exact left inverse L with L*B = I for injective B (rows >= cols, full
/// column rank): L = (B^T B)^{-1} B^T.
std::optional<QMat> left_inverse(const QMat& B);

}  // namespace infdex

#endif

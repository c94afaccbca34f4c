// Exact polyhedral machinery for weight lists: pointedness certificates via
// Fourier-Motzkin, wall enumeration, chamber decomposition of cone(X) with
// sign vectors, interior points and stellar triangulation into simplicial
// cones. Everything is exact over the rationals; scale is a handful of
// weights in dimension <= 4.

#ifndef INFDEX_GEOMETRY_HPP
#define INFDEX_GEOMETRY_HPP

#include "polynomial.hpp"

#include <optional>
#include <vector>

namespace infdex {

/// One linear constraint <normal, x> >= rhs.
struct LinIneq {
    QVec normal;
    Rat rhs;
};

/// Feasibility of a system of weak linear inequalities by Fourier-Motzkin
/// elimination; returns a witness point when feasible.
std::optional<QVec> fm_feasible(std::vector<LinIneq> system, int dim);

/// True iff no nonzero nonnegative combination of X vanishes. The witness,
/// when present, is a functional phi with <a_i, phi> >= 1 for all i.
std::optional<QVec> pointedness_witness(const std::vector<QVec>& X, int dim);
bool pointedness_check(const std::vector<QVec>& X, int dim);

/// Distinct hyperplanes spanned by rank-(dim-1) subsets of X, as primitive
/// normals with positive leading coordinate, lex sorted. Requires X of full
/// rank dim (callers pass carrier coordinates).
std::vector<QVec> enumerate_walls(const std::vector<QVec>& X, int dim);

struct Chamber {
    std::vector<int> signs;             // +1/-1 per wall, aligned with walls order
    std::vector<QVec> rays;             // extreme rays, primitive, lex sorted
    QVec interior;                      // strictly inside, off every wall
    std::vector<std::vector<QVec>> simplices;  // stellar triangulation, dim rays each
};

struct ChamberComplex {
    int dim = 0;
    std::vector<QVec> walls;
    std::vector<Chamber> chambers;  // sorted lexicographically by sign vector
};

/// Chamber decomposition of cone(X) cut by all walls. X must be nonzero,
/// full rank dim and pointed ("unbounded support" otherwise).
ChamberComplex enumerate_chambers(const std::vector<QVec>& X, int dim);

/// Index of the chamber whose interior contains xi; -1 when xi is outside
/// cone(X). Throws precondition_error when xi lies on a wall.
int locate_chamber(const ChamberComplex& cc, const QVec& xi);

/// A rational point strictly inside the cone spanned by the rays and off
/// every wall of the ambient complex.
QVec interior_point(const Chamber& chamber, const std::vector<QVec>& walls);

}  // namespace infdex

#endif

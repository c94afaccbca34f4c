// Multivariate polynomials with exact rational coefficients, stored as a
// sparse exponent -> coefficient map. Exponent keys use std::map's
// lexicographic vector order, which keeps every iteration deterministic.

#ifndef INFDEX_POLYNOMIAL_HPP
#define INFDEX_POLYNOMIAL_HPP

#include "linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace infdex {

struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> coef;  // no zero coefficients stored

    MultiPoly() = default;
    explicit MultiPoly(int n) : nvars(n) {}

    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly monomial(int nvars, const std::vector<int>& exp, const Rat& c);
    /// The coordinate polynomial x_i.
    static MultiPoly variable(int nvars, int i);

    bool is_zero() const { return coef.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    bool is_homogeneous(int deg) const;

    void add_term(const std::vector<int>& exp, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& s) const;

    Rat eval(const QVec& x) const;
    double eval_d(const std::vector<double>& x) const;

    MultiPoly partial(int var) const;
    MultiPoly derivative(const std::vector<int>& beta) const;

    /// Substitute x = M u (M has nvars rows); the result is a polynomial in
    /// M.cols variables u. Used for q(Bu) cone parametrizations and for
    /// composing densities with projections.
    MultiPoly compose_linear(const QMat& M) const;

    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && coef == o.coef; }
};

/// Exact quotient p / ell for a linear form ell (no constant term); nullopt
/// when ell does not divide p. Used to measure the order of agreement of
/// spline pieces across a wall.
std::optional<MultiPoly> divide_by_linear(const MultiPoly& p, const QVec& ell);

/// Largest k with ell^k dividing p (p nonzero); order of vanishing of p on
/// the hyperplane ell = 0.
int vanishing_order(const MultiPoly& p, const QVec& ell, int cap);

/// All exponent vectors of total degree <= deg in nvars variables, graded
/// lexicographic, deterministic.
std::vector<std::vector<int>> monomials_up_to_degree(int nvars, int deg);

/// Unique interpolating polynomial of total degree <= degreeBound through the
/// given samples; the sample count must equal the dimension of that space.
/// Throws precondition_error on a singular sample configuration.
MultiPoly poly_interpolate(const std::vector<std::pair<QVec, Rat>>& samples, int degreeBound,
                           int nvars);

}  // namespace infdex

#endif

// The algebra of invariant distributions on g* produced by the torus
// infinitesimal index: rational multiples of (2 pi)^p i^q times sums of conic
// polynomial densities and derivatives of delta_0, with tensor product,
// convolution, pushforward along a surjection of tori, and induction from a
// subtorus.

#ifndef INFDEX_DISTRIBUTION_HPP
#define INFDEX_DISTRIBUTION_HPP

#include "spline.hpp"
#include "testfn.hpp"

#include <complex>
#include <map>
#include <optional>

namespace infdex {

/// Exact scalar r * (2 pi)^twoPiPow * i^iPow. Canonical form folds i^2 = -1
/// into the sign of r, leaving iPow in {0, 1}.
struct Prefactor {
    Rat r = Rat(1);
    int twoPiPow = 0;
    int iPow = 0;

    void normalize();
    static Prefactor one() { return {}; }
    static Prefactor of(const Rat& r, int twoPiPow, int iPow);
    Prefactor times(const Prefactor& o) const;
    std::complex<double> value() const;
    bool operator==(const Prefactor& o) const;
};

/// Conic polynomial density: pairing <term, f> = int_{u>=0} q(Bu) f(Bu) du.
struct ConeTerm {
    QMat B;       // ambientDim x d, injective
    MultiPoly q;  // ambient coordinates
};

/// Distribution supported at the origin: <term, f> = sum_beta c_beta (-1)^{|beta|} (d^beta f)(0).
struct PointTerm {
    std::map<std::vector<int>, Rat> c;
};

struct Distribution {
    int dim = 0;
    Prefactor pf;
    std::vector<ConeTerm> cones;
    std::vector<PointTerm> points;
    std::optional<WeightList> splineTag;  // set when the density part equals T_X

    bool pure_point() const { return cones.empty(); }
};

Distribution delta0(int n);
/// Lebesgue measure on R^n as 2^n orthant cones.
Distribution lebesgue(int n);
/// The density part of prefactor * T_X, spline-tagged.
Distribution distribution_from_spline(const SplineForm& S, const Prefactor& pf);
Distribution distribution_from_weights(const WeightList& X, const Prefactor& pf);

/// Fourier transform of a polynomial on g as a derivative-of-delta
/// distribution on g*; monomial x^gamma pairs as (-i)^{|gamma|} (d^gamma f)(0).
/// All monomials must share degree parity (a single global i-power cannot
/// carry mixed parity).
Distribution fourier_of_polynomial(const MultiPoly& P);

Distribution tensor(const Distribution& a, const Distribution& b);
Distribution convolve(const Distribution& a, const Distribution& b);
Distribution pushforward(const Distribution& d, const QMat& p);

/// <Ind V, f> = <V, p_* f> for a surjection p with right inverse `splitting`.
/// Density terms lift by composing with p and extending by +-(ker p) orthants.
/// `withIndexPrefactor` additionally applies the i^{dim G - dim L} factor of
/// the induced-index formula.
Distribution induce(const Distribution& v, const QMat& p, const QMat& splitting,
                    bool withIndexPrefactor);

/// a*d1 + b*d2 for distributions sharing the transcendental part of their
/// prefactors; the rational parts are folded into the terms.
Distribution linear_combination(const Rat& a, const Distribution& d1, const Rat& b,
                                const Distribution& d2);

struct DensityValue {
    Rat coeff;     // exact rational part
    Prefactor pf;  // transcendental part
    std::complex<double> value() const { return pf.value() * rat_d(coeff); }
};

/// prefactor * sum q(xi)/|det B| over full-dimensional cones containing xi.
DensityValue eval_density(const Distribution& d, const QVec& xi);

/// Pairing against a test function: point terms symbolically, cone terms by
/// stratified Monte Carlo. The error estimate covers the quadrature terms.
ComplexEstimate pair_distribution(const Distribution& d, const TestFunction& f,
                                  const QuadratureConfig& cfg);

}  // namespace infdex

#endif

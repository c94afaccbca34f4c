// Test functions on g* (polynomial x Gaussian, polynomial x bump) with
// symbolic derivatives, plus the numerical pairing machinery: seeded
// stratified Monte Carlo over cone parametrizations and deterministic 1-D
// Gauss-Legendre quadrature for the one-dimensional oracle paths.

#ifndef INFDEX_TESTFN_HPP
#define INFDEX_TESTFN_HPP

#include "polynomial.hpp"

#include <complex>
#include <cstdint>
#include <functional>

namespace infdex {

struct TestFunction {
    enum class Kind { PolyGaussian, PolyBump };

    Kind kind = Kind::PolyGaussian;
    int dim = 0;
    MultiPoly poly;  // rational-coefficient factor; defaults to 1
    QVec center;     // Gaussian center (bump supports an off-origin center too)
    Rat sigma = Rat(1);   // Gaussian width, > 0
    Rat radius = Rat(1);  // bump radius, > 0

    static TestFunction gaussian(int dim, const Rat& sigma, const QVec& center,
                                 const MultiPoly& poly);
    static TestFunction bump(int dim, const Rat& radius, const QVec& center,
                             const MultiPoly& poly);

    double eval(const std::vector<double>& x) const;
    bool compactly_supported() const { return kind == Kind::PolyBump; }

    /// Radius beyond which the function (times a polynomial of the given
    /// extra degree) is numerically negligible; exact for bumps.
    double effective_radius(int extraDegree) const;
};

/// d^beta f at a rational point. Gaussians are differentiated symbolically
/// (exact polynomial factor, one final exp). Bumps use 4th-order central
/// finite differences; |beta| > 6 is refused as noise.
double derivative_at(const TestFunction& f, const std::vector<int>& beta, const QVec& point);

/// The exact polynomial p_beta with d^beta (q e^{-|x-c|^2/2s^2}) = p_beta e^{...}.
MultiPoly gaussian_derivative_poly(const TestFunction& f, const std::vector<int>& beta);

struct QuadratureConfig {
    uint64_t samples = 100000;
    uint64_t seed = 0;
    int strataDepth = 0;  // stratum count; 0 chooses from the sample budget
};

struct Estimate {
    double value = 0.0;
    double err = 0.0;  // standard-error style estimate
};

struct ComplexEstimate {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
};

/// Stratified Monte Carlo over an axis box, deterministic for a fixed seed:
/// each stratum draws from its own counter-seeded generator and strata are
/// summed in index order.
Estimate mc_integrate_box(int dim, const std::vector<double>& lo, const std::vector<double>& hi,
                          const std::function<double(const double*)>& f,
                          const QuadratureConfig& cfg);

ComplexEstimate mc_integrate_box_complex(
    int dim, const std::vector<double>& lo, const std::vector<double>& hi,
    const std::function<std::complex<double>(const double*)>& f, const QuadratureConfig& cfg);

/// Monte Carlo over the solid simplex {u >= 0, sum c_i u_i <= C}, stratified
/// into equal-volume radial shells. Decaying integrands on cones concentrate
/// along the radial direction, so the shells soak up most of the variance and
/// the per-shell estimates stay honest.
Estimate mc_integrate_simplex(const std::vector<double>& c, double C,
                              const std::function<double(const double*)>& f,
                              const QuadratureConfig& cfg);

ComplexEstimate mc_integrate_simplex_complex(
    const std::vector<double>& c, double C,
    const std::function<std::complex<double>(const double*)>& f, const QuadratureConfig& cfg);

/// int_{u>=0} q(Bu) f(Bu) du for an injective generator matrix B. Sampling
/// runs over the simplex cut out by a dual certificate of B's cone, clipped
/// to the test function's effective support.
Estimate pair_cone_term_numeric(const QMat& B, const MultiPoly& q, const TestFunction& f,
                                const QuadratureConfig& cfg);

/// Deterministic composite 16-point Gauss-Legendre with refinement-based
/// error estimate.
Estimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                      int min_panels = 32);
ComplexEstimate integrate_1d_complex(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, int min_panels = 32);

}  // namespace infdex

#endif

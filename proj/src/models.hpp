// Catalog of worked torus action models with their closed-form indices, and
// finite-s oracles computing the defining stabilized pairing directly by
// quadrature. The two routes are kept independent: expected_infdex goes
// through the distribution machinery, finite_s_pairing integrates the moment
// map parametrization with an explicit cutoff.

#ifndef INFDEX_MODELS_HPP
#define INFDEX_MODELS_HPP

#include "distribution.hpp"

#include <memory>
#include <vector>

namespace infdex {

/// Smooth radial cutoff: identically 1 on the ball of radius R0/2, supported
/// in the ball of radius R0.
struct CutoffSpec {
    double R0 = 1.0;
    double chi(double radius) const;
};

struct ModelDescriptor {
    enum class Kind {
        Point,            // trivial moment map on Q^n
        CircleCotangent,  // T*S^1, rotation; theta in [0, 2 pi)
        PlaneRotation,    // R^2 rotation, mu = |v|^2/2
        LinearTorus,      // C^m with weights X
        CotangentTorus,   // T*T^n with the left/right double torus
        Product,          // two models, product group
        Diagonal          // two models over the same torus, diagonal subgroup
    };

    Kind kind = Kind::Point;
    int n = 1;                          // Point dim / CotangentTorus n
    WeightList X;                       // LinearTorus weights
    std::shared_ptr<ModelDescriptor> a, b;  // Product / Diagonal children
    MultiPoly alpha;                    // optional polynomial class on g (Point)

    int ambient_dim() const;
    bool has_alpha() const { return !alpha.coef.empty() && alpha.degree() > 0; }
};

ModelDescriptor model_point(int n);
ModelDescriptor model_point_poly(int n, const MultiPoly& alpha);
ModelDescriptor model_circle();
ModelDescriptor model_plane_rotation();
ModelDescriptor model_linear_torus(const WeightList& X);
ModelDescriptor model_cotangent_torus(int n);
ModelDescriptor model_product(ModelDescriptor a, ModelDescriptor b);
ModelDescriptor model_diagonal(ModelDescriptor a, ModelDescriptor b);

/// Closed-form infinitesimal index of the class 1 (or of alpha at a point).
Distribution expected_infdex(const ModelDescriptor& model);

/// The finite-s pairing <infdex(s, alpha, sigma), f> reduced through Fourier
/// inversion to an explicit cutoff integral; P is an optional polynomial
/// coefficient class (P(-i d) applied to f).
ComplexEstimate finite_s_pairing(const ModelDescriptor& model, const TestFunction& f, double s,
                                 const CutoffSpec& cutoff, const MultiPoly* P,
                                 const QuadratureConfig& cfg);

/// Conservative s beyond which the pairing is exactly cutoff-saturated.
double stabilization_s0(const ModelDescriptor& model, const TestFunction& f,
                        const CutoffSpec& cutoff);

std::vector<ComplexEstimate> stabilization_scan(const ModelDescriptor& model,
                                                const TestFunction& f,
                                                const std::vector<double>& sList,
                                                const CutoffSpec& cutoff,
                                                const QuadratureConfig& cfg);

std::vector<ComplexEstimate> cutoff_independence_scan(const ModelDescriptor& model,
                                                      const TestFunction& f,
                                                      const std::vector<CutoffSpec>& cutoffs,
                                                      const QuadratureConfig& cfg);

/// Direct quadrature of int_{t>=0} f(sum t_i a_i) dt over the orthant; the
/// independent oracle for spline values and pairings.
Estimate brute_force_spline_pairing(const WeightList& X, const TestFunction& f,
                                    const QuadratureConfig& cfg);

/// Pairing of a polynomial class at the point model by genuine 1-D
/// oscillatory quadrature of int P(x) fhat(x) dx; calibrates the Fourier
/// convention. Gaussian test functions only.
ComplexEstimate point_pairing_oscillatory(const MultiPoly& P, const TestFunction& f);

}  // namespace infdex

#endif

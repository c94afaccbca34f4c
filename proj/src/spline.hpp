// The multivariate spline T_X attached to a list of nonzero weights spanning
// a pointed cone: <T_X, f> = int_{t >= 0} f(sum t_i a_i) dt. This module
// builds T_X as an exact piecewise polynomial over the chamber complex of
// cone(X), evaluates it pointwise by the one-variable-at-a-time recursive
// integral, and checks itself against the closed-form Laplace transform
// prod_j 1/<a_j, z>.

#ifndef INFDEX_SPLINE_HPP
#define INFDEX_SPLINE_HPP

#include "geometry.hpp"

#include <optional>

namespace infdex {

struct WeightList {
    int dim = 0;
    std::vector<QVec> weights;

    int count() const { return static_cast<int>(weights.size()); }
};

/// Throws precondition_error naming the violated requirement (zero weight /
/// non-pointed cone).
void validate_weights(const WeightList& X);
std::optional<QVec> weight_pointedness_witness(const WeightList& X);

/// Basis of span(X) picked greedily from X itself, with an exact left
/// inverse. Full-rank lists get the identity carrier.
struct Carrier {
    int ambient = 0;
    int rank = 0;
    QMat basis;     // ambient x rank, columns from X
    QMat leftInv;   // rank x ambient, leftInv * basis = I
    bool full() const { return ambient == rank; }

    /// Carrier coordinates of an ambient point; nullopt when off span(X).
    std::optional<QVec> to_carrier(const QVec& xi) const;
    QVec to_ambient(const QVec& eta) const { return basis.apply(eta); }
};

Carrier compute_carrier(const WeightList& X);

/// Exact evaluation of the T_X density (carrier Lebesgue normalization) by
/// recursive unfolding. Precomputes the weight chain and the per-level wall
/// sets once, so repeated evaluations are cheap.
class RecursiveEvaluator {
public:
    explicit RecursiveEvaluator(const WeightList& X);

    /// Density at an ambient point off every wall. Throws on walls.
    Rat eval_ambient(const QVec& xi) const;
    /// Density at a carrier-coordinate point off every wall.
    Rat eval_carrier(const QVec& eta) const;

    const Carrier& carrier() const { return car_; }
    const std::vector<QVec>& top_walls() const { return walls_[0]; }

private:
    Rat eval_level(size_t level, const QVec& eta) const;

    Carrier car_;
    QVec witness_;                         // phi with <a_i, phi> >= 1, carrier coords
    std::vector<std::vector<QVec>> lists_; // weight chain, carrier coords
    std::vector<std::vector<QVec>> walls_; // walls per chain entry
    std::vector<int> removed_;             // index removed from lists_[j] to form lists_[j+1]
};

struct SplineForm {
    WeightList X;
    Carrier car;
    ChamberComplex cc;              // carrier coordinates
    std::vector<MultiPoly> pieces;  // one per chamber, carrier coordinates

    int piece_degree() const { return X.count() - car.rank; }
};

/// Exact density value of T_X at an off-wall ambient point.
Rat eval_point_recursive(const WeightList& X, const QVec& xi);

SplineForm build_spline(const WeightList& X);

/// Value of the chamber piece containing xi; 0 outside cone(X) or off the
/// carrier. Throws on walls.
Rat eval_spline_form(const SplineForm& S, const QVec& xi);

/// Exact int T_X(xi) e^{-<xi,z>} d xi for z strictly dual-positive; equals
/// prod_j 1/<a_j, z>.
Rat laplace_transform(const SplineForm& S, const QVec& z);
Rat laplace_closed_form(const WeightList& X, const QVec& z);

/// Minimal order of agreement of adjacent pieces across walls (including the
/// zero piece beyond the cone's facets): pieces agree to order k when their
/// difference is divisible by the wall form to the k+1st power. Returns -1
/// for a jump discontinuity; `cap` bounds the search.
int wall_agreement_order(const SplineForm& S, int cap);

}  // namespace infdex

#endif

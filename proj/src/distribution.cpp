#include "distribution.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace infdex {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void Prefactor::normalize() {
    int q = ((iPow % 4) + 4) % 4;
    if (q >= 2) {
        r = -r;
        q -= 2;
    }
    iPow = q;
    if (r == 0) {
        twoPiPow = 0;
        iPow = 0;
    }
}

Prefactor Prefactor::of(const Rat& r, int twoPiPow, int iPow) {
    Prefactor p{r, twoPiPow, iPow};
    p.normalize();
    return p;
}

Prefactor Prefactor::times(const Prefactor& o) const {
    return Prefactor::of(r * o.r, twoPiPow + o.twoPiPow, iPow + o.iPow);
}

std::complex<double> Prefactor::value() const {
    double mag = rat_d(r) * std::pow(kTwoPi, twoPiPow);
    return iPow == 1 ? std::complex<double>(0.0, mag) : std::complex<double>(mag, 0.0);
}

bool Prefactor::operator==(const Prefactor& o) const {
    return r == o.r && twoPiPow == o.twoPiPow && iPow == o.iPow;
}

Distribution delta0(int n) {
    Distribution d;
    d.dim = n;
    PointTerm t;
    t.c[std::vector<int>(n, 0)] = Rat(1);
    d.points.push_back(std::move(t));
    return d;
}

Distribution lebesgue(int n) {
    Distribution d;
    d.dim = n;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<QVec> cols;
        for (int i = 0; i < n; ++i) {
            QVec e = qvec_zero(n);
            e[i] = (mask >> i) & 1 ? Rat(-1) : Rat(1);
            cols.push_back(std::move(e));
        }
        d.cones.push_back({QMat::from_columns(cols), MultiPoly::constant(n, Rat(1))});
    }
    return d;
}

Distribution distribution_from_spline(const SplineForm& S, const Prefactor& pf) {
    Distribution d;
    d.dim = S.X.dim;
    d.pf = pf;
    d.pf.normalize();
    d.splineTag = S.X;
    for (size_t ci = 0; ci < S.cc.chambers.size(); ++ci) {
        // Ambient-coordinate density polynomial of this chamber.
        MultiPoly amb = S.pieces[ci].compose_linear(S.car.leftInv);
        for (const auto& simplex : S.cc.chambers[ci].simplices) {
            QMat Bc = QMat::from_columns(simplex);
            QMat Bamb = S.car.basis.mul(Bc);
            Rat det = rat_abs(determinant(Bc));
            d.cones.push_back({Bamb, amb.scaled(det)});
        }
    }
    return d;
}

Distribution distribution_from_weights(const WeightList& X, const Prefactor& pf) {
    return distribution_from_spline(build_spline(X), pf);
}

Distribution fourier_of_polynomial(const MultiPoly& P) {
    Distribution d;
    d.dim = P.nvars;
    if (P.is_zero()) {
        d.pf = Prefactor::of(Rat(0), 0, 0);
        return d;
    }
    int parity = -1;
    PointTerm t;
    for (const auto& [e, c] : P.coef) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (parity < 0) parity = deg % 2;
        if (deg % 2 != parity)
            throw precondition_error(
                "mixed-parity polynomial: no single-prefactor delta-derivative form");
        // target pairing coeff * (-i)^deg * d^e f(0); with the term convention
        // <d^e delta, f> = (-1)^deg d^e f(0) and global prefactor i^parity this
        // needs c_e = coeff * (-1)^{floor(deg/2)}.
        Rat ce = (deg / 2) % 2 == 0 ? c : -c;
        t.c[e] = ce;
    }
    d.pf = Prefactor::of(Rat(1), 0, parity);
    d.points.push_back(std::move(t));
    return d;
}

namespace {

std::vector<int> concat_exp(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> e = a;
    e.insert(e.end(), b.begin(), b.end());
    return e;
}

MultiPoly embed_poly(const MultiPoly& p, int total, int offset) {
    MultiPoly out(total);
    for (const auto& [e, c] : p.coef) {
        std::vector<int> ne(total, 0);
        for (size_t i = 0; i < e.size(); ++i) ne[offset + static_cast<int>(i)] = e[i];
        out.coef[ne] = c;
    }
    return out;
}

bool point_term_is_pure_delta(const PointTerm& t) {
    for (const auto& [e, c] : t.c)
        for (int x : e)
            if (x != 0) return false;
    return true;
}

// Zero-pad B into a space of `total` dimensions starting at row `offset`.
QMat embed_matrix(const QMat& B, int total, int offset) {
    QMat out(total, B.cols);
    for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c) out.at(offset + r, c) = B.at(r, c);
    return out;
}

QMat blockdiag(const QMat& A, const QMat& B) {
    QMat out(A.rows + B.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) out.at(r, c) = A.at(r, c);
    for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c) out.at(A.rows + r, A.cols + c) = B.at(r, c);
    return out;
}

Rat pure_delta_mass(const Distribution& d) {
    Rat total(0);
    for (const auto& t : d.points) {
        auto it = t.c.find(std::vector<int>(d.dim, 0));
        if (it != t.c.end()) total += it->second;
    }
    return total;
}

}  // namespace

Distribution tensor(const Distribution& a, const Distribution& b) {
    Distribution out;
    out.dim = a.dim + b.dim;
    out.pf = a.pf.times(b.pf);
    if (a.splineTag && b.splineTag) {
        WeightList X;
        X.dim = out.dim;
        for (const auto& w : a.splineTag->weights) {
            QVec e = w;
            e.resize(out.dim, Rat(0));
            X.weights.push_back(std::move(e));
        }
        for (const auto& w : b.splineTag->weights) {
            QVec e = qvec_zero(a.dim);
            e.insert(e.end(), w.begin(), w.end());
            X.weights.push_back(std::move(e));
        }
        out.splineTag = std::move(X);
    }
    // cone x cone
    for (const auto& ca : a.cones)
        for (const auto& cb : b.cones)
            out.cones.push_back({blockdiag(ca.B, cb.B),
                                 embed_poly(ca.q, out.dim, 0) * embed_poly(cb.q, out.dim, a.dim)});
    // cone x point and point x cone: only a pure delta factor stays in the
    // closed term class (a transverse delta derivative cannot ride on a
    // conic density term).
    auto mixed = [&](const std::vector<ConeTerm>& cones, const std::vector<PointTerm>& pts,
                     int cone_offset, int total) {
        std::vector<ConeTerm> res;
        for (const auto& pt : pts) {
            if (pt.c.empty()) continue;
            if (!point_term_is_pure_delta(pt))
                throw precondition_error(
                    "tensor with transverse delta derivatives leaves the closed term class");
            Rat mass(0);
            for (const auto& [e, c] : pt.c) mass += c;
            for (const auto& ct : cones)
                res.push_back({embed_matrix(ct.B, total, cone_offset),
                               embed_poly(ct.q, total, cone_offset).scaled(mass)});
        }
        return res;
    };
    for (auto& t : mixed(a.cones, b.points, 0, out.dim)) out.cones.push_back(std::move(t));
    for (auto& t : mixed(b.cones, a.points, a.dim, out.dim)) out.cones.push_back(std::move(t));
    // point x point
    for (const auto& pa : a.points)
        for (const auto& pb : b.points) {
            PointTerm t;
            for (const auto& [ea, ca] : pa.c)
                for (const auto& [eb, cb] : pb.c) t.c[concat_exp(ea, eb)] = ca * cb;
            out.points.push_back(std::move(t));
        }
    // delta_0 (x) T_X is still the spline of the zero-padded weight list.
    auto embed_tag = [&](const WeightList& w, int offset) {
        WeightList X;
        X.dim = out.dim;
        for (const auto& a_ : w.weights) {
            QVec e = qvec_zero(out.dim);
            for (size_t i = 0; i < a_.size(); ++i) e[offset + static_cast<int>(i)] = a_[i];
            X.weights.push_back(std::move(e));
        }
        return X;
    };
    if (!out.splineTag) {
        bool a_delta = a.cones.empty() && pure_delta_mass(a) == 1 &&
                       std::all_of(a.points.begin(), a.points.end(), point_term_is_pure_delta);
        bool b_delta = b.cones.empty() && pure_delta_mass(b) == 1 &&
                       std::all_of(b.points.begin(), b.points.end(), point_term_is_pure_delta);
        if (a_delta && b.splineTag && b.points.empty())
            out.splineTag = embed_tag(*b.splineTag, a.dim);
        else if (b_delta && a.splineTag && a.points.empty())
            out.splineTag = embed_tag(*a.splineTag, 0);
    }
    return out;
}

Distribution convolve(const Distribution& a, const Distribution& b) {
    if (a.dim != b.dim) throw input_error("convolution operands live on different spaces");
    // spline (*) spline: concatenate weight lists and rebuild.
    if (a.splineTag && b.splineTag && a.points.empty() && b.points.empty()) {
        WeightList X;
        X.dim = a.dim;
        X.weights = a.splineTag->weights;
        X.weights.insert(X.weights.end(), b.splineTag->weights.begin(),
                         b.splineTag->weights.end());
        Distribution out = distribution_from_weights(X, a.pf.times(b.pf));
        return out;
    }
    const Distribution* pt = nullptr;
    const Distribution* other = nullptr;
    if (a.pure_point()) {
        pt = &a;
        other = &b;
    } else if (b.pure_point()) {
        pt = &b;
        other = &a;
    }
    if (!pt) throw precondition_error("convolution not in closed class");

    // Merge the point-side terms into one coefficient map.
    std::map<std::vector<int>, Rat> coeffs;
    for (const auto& t : pt->points)
        for (const auto& [e, c] : t.c) {
            coeffs[e] += c;
            if (coeffs[e] == 0) coeffs.erase(e);
        }
    int maxOrder = 0;
    for (const auto& [e, c] : coeffs)
        maxOrder = std::max(maxOrder, std::accumulate(e.begin(), e.end(), 0));

    Distribution out;
    out.dim = a.dim;
    out.pf = a.pf.times(b.pf);

    // Point (*) point part: multi-index convolution of coefficients.
    for (const auto& t : other->points) {
        PointTerm nt;
        for (const auto& [ea, ca] : coeffs)
            for (const auto& [eb, cb] : t.c) {
                std::vector<int> e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                nt.c[e] += ca * cb;
                if (nt.c[e] == 0) nt.c.erase(e);
            }
        if (!nt.c.empty()) out.points.push_back(std::move(nt));
    }

    if (other->cones.empty()) return out;

    if (maxOrder == 0) {
        // Pure multiples of delta_0 act as the identity times the mass.
        Rat mass(0);
        for (const auto& [e, c] : coeffs) mass += c;
        for (const auto& ct : other->cones) out.cones.push_back({ct.B, ct.q.scaled(mass)});
        out.splineTag = mass == 1 ? other->splineTag : std::nullopt;
        return out;
    }

    // Derivative convolution: differentiate the density chamber-wise. Valid
    // when the pieces agree across every wall to at least the derivative
    // order, which we verify exactly on the spline form.
    if (!other->splineTag)
        throw precondition_error("convolution not in closed class");
    SplineForm S = build_spline(*other->splineTag);
    if (!S.car.full())
        throw precondition_error(
            "insufficient smoothness for derivative convolution: density is not "
            "full-dimensional");
    int order = wall_agreement_order(S, maxOrder + 1);
    if (order < maxOrder)
        throw precondition_error("insufficient smoothness for derivative convolution");
    // The spline-side rational scale sits in its cone polynomials already
    // (distribution_from_weights), so rebuild matching terms with derivatives.
    for (size_t ci = 0; ci < S.cc.chambers.size(); ++ci) {
        MultiPoly amb = S.pieces[ci].compose_linear(S.car.leftInv);
        MultiPoly der(S.X.dim);
        for (const auto& [e, c] : coeffs) der = der + amb.derivative(e).scaled(c);
        for (const auto& simplex : S.cc.chambers[ci].simplices) {
            QMat Bc = QMat::from_columns(simplex);
            Rat det = rat_abs(determinant(Bc));
            out.cones.push_back({S.car.basis.mul(Bc), der.scaled(det)});
        }
    }
    return out;
}

Distribution pushforward(const Distribution& d, const QMat& p) {
    if (p.cols != d.dim) throw input_error("projection domain dimension mismatch");
    Distribution out;
    out.dim = p.rows;
    out.pf = d.pf;

    // Point terms always push forward: substitute the formal derivative
    // variables through the transpose of p.
    QMat pt = p.transpose();
    for (const auto& t : d.points) {
        MultiPoly Q(d.dim);
        for (const auto& [e, c] : t.c) Q.coef[e] = c;
        MultiPoly Qp = Q.compose_linear(pt);
        PointTerm nt;
        for (const auto& [e, c] : Qp.coef) nt.c[e] = c;
        out.points.push_back(std::move(nt));
    }

    if (d.splineTag) {
        WeightList PX;
        PX.dim = p.rows;
        for (const auto& a : d.splineTag->weights) {
            QVec pa = p.apply(a);
            if (qvec_is_zero(pa))
                throw precondition_error(
                    "not compactly supported along fibers: a weight maps to zero");
            PX.weights.push_back(std::move(pa));
        }
        if (!pointedness_check(PX.weights, PX.dim))
            throw precondition_error(
                "not compactly supported along fibers: projected weights are not pointed");
        Distribution pushed = distribution_from_weights(PX, Prefactor::one());
        out.splineTag = std::move(PX);
        out.cones = std::move(pushed.cones);
        return out;
    }

    for (const auto& ct : d.cones) {
        QMat Bp = p.mul(ct.B);
        if (rank(Bp) < Bp.cols)
            throw precondition_error(
                "not compactly supported along fibers: a cone collapses under the projection");
        auto li = left_inverse(Bp);
        assert(li);
        MultiPoly q = ct.q.compose_linear(ct.B.mul(*li));
        out.cones.push_back({std::move(Bp), std::move(q)});
    }
    return out;
}

Distribution induce(const Distribution& v, const QMat& p, const QMat& splitting,
                    bool withIndexPrefactor) {
    const int n = p.cols;
    const int l = p.rows;
    if (v.dim != l) throw input_error("induction operand does not live on the target of p");
    if (rank(p) != l) throw precondition_error("induction requires a surjective projection");
    if (splitting.rows != n || splitting.cols != l)
        throw input_error("splitting has the wrong shape");
    QMat comp = p.mul(splitting);
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c)
            if (comp.at(r, c) != Rat(r == c ? 1 : 0))
                throw input_error("splitting is not a right inverse of the projection");

    auto K = kernel_basis(p);  // n - l vectors
    const int k = static_cast<int>(K.size());
    // |det [S K]| relates the product measure of the split coordinates to the
    // ambient Lebesgue measure.
    std::vector<QVec> cols = splitting.columns();
    for (const auto& kv : K) cols.push_back(kv);
    Rat detF = rat_abs(determinant(QMat::from_columns(cols)));
    assert(detF != 0);

    Distribution out;
    out.dim = n;
    out.pf = v.pf;
    if (withIndexPrefactor) out.pf = out.pf.times(Prefactor::of(Rat(1), 0, k));

    auto kernel_block = [&](uint64_t mask) {
        std::vector<QVec> kc;
        for (int i = 0; i < k; ++i)
            kc.push_back((mask >> i) & 1 ? scale(K[i], Rat(-1)) : K[i]);
        return kc;
    };

    for (const auto& t : v.points) {
        if (!point_term_is_pure_delta(t))
            throw precondition_error(
                "induction of delta derivatives leaves the closed term class");
        Rat mass(0);
        for (const auto& [e, c] : t.c) mass += c;
        if (mass == 0) continue;
        if (k == 0) {
            PointTerm nt;
            nt.c[std::vector<int>(n, 0)] = mass;
            out.points.push_back(std::move(nt));
            continue;
        }
        for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
            QMat B = QMat::from_columns(kernel_block(mask));
            out.cones.push_back({std::move(B), MultiPoly::constant(n, mass * detF)});
        }
    }

    for (const auto& ct : v.cones) {
        MultiPoly q = ct.q.compose_linear(p).scaled(detF);
        QMat SB = splitting.mul(ct.B);
        if (k == 0) {
            out.cones.push_back({std::move(SB), std::move(q)});
            continue;
        }
        for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
            std::vector<QVec> cols2 = SB.columns();
            for (const auto& kcol : kernel_block(mask)) cols2.push_back(kcol);
            out.cones.push_back({QMat::from_columns(cols2), q});
        }
    }
    return out;
}

Distribution linear_combination(const Rat& a, const Distribution& d1, const Rat& b,
                                const Distribution& d2) {
    if (d1.dim != d2.dim) throw input_error("linear combination dimension mismatch");
    if (d1.pf.twoPiPow != d2.pf.twoPiPow || d1.pf.iPow != d2.pf.iPow)
        throw precondition_error(
            "linear combination requires matching transcendental prefactors");
    Distribution out;
    out.dim = d1.dim;
    out.pf = Prefactor::of(Rat(1), d1.pf.twoPiPow, d1.pf.iPow);
    auto push = [&](const Distribution& d, const Rat& s) {
        Rat factor = s * d.pf.r;
        if (factor == 0) return;
        for (const auto& ct : d.cones) out.cones.push_back({ct.B, ct.q.scaled(factor)});
        for (const auto& t : d.points) {
            PointTerm nt;
            for (const auto& [e, c] : t.c) nt.c[e] = c * factor;
            out.points.push_back(std::move(nt));
        }
    };
    push(d1, a);
    push(d2, b);
    return out;
}

DensityValue eval_density(const Distribution& d, const QVec& xi) {
    if (!d.points.empty())
        throw precondition_error("density evaluation undefined for point terms");
    if (static_cast<int>(xi.size()) != d.dim) throw input_error("point dimension mismatch");
    Rat total(0);
    for (const auto& ct : d.cones) {
        if (ct.B.cols != d.dim)
            throw precondition_error("density evaluation requires full-dimensional cones");
        auto u = solve_square(ct.B, xi);
        if (!u) throw precondition_error("cone generator matrix is singular");
        bool inside = true;
        for (const auto& ui : *u) {
            if (ui == 0) throw precondition_error("on-wall evaluation undefined");
            if (ui < 0) {
                inside = false;
                break;
            }
        }
        if (inside) total += ct.q.eval(xi) / rat_abs(determinant(ct.B));
    }
    return {total, d.pf};
}

ComplexEstimate pair_distribution(const Distribution& d, const TestFunction& f,
                                  const QuadratureConfig& cfg) {
    if (f.dim != d.dim) throw input_error("test function dimension mismatch");
    double symbolic = 0.0;
    QVec origin = qvec_zero(d.dim);
    for (const auto& t : d.points)
        for (const auto& [e, c] : t.c) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            double sign = deg % 2 == 0 ? 1.0 : -1.0;
            symbolic += rat_d(c) * sign * derivative_at(f, e, origin);
        }
    double numeric = 0.0;
    double var = 0.0;
    uint64_t term_index = 0;
    for (const auto& ct : d.cones) {
        // Decorrelate the per-term streams: symmetric distributions repeat
        // the same integrand across terms, and identical seeds would make
        // their errors add linearly while the accounting assumes quadrature.
        QuadratureConfig term_cfg = cfg;
        term_cfg.seed = cfg.seed ^ (0xd1573a5ULL + 0x9e3779b97f4a7c15ULL * ++term_index);
        Estimate e = pair_cone_term_numeric(ct.B, ct.q, f, term_cfg);
        numeric += e.value;
        var += e.err * e.err;
    }
    std::complex<double> pf = d.pf.value();
    return {pf * (symbolic + numeric), std::abs(pf) * std::sqrt(var)};
}

}  // namespace infdex

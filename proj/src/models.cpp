#include "models.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <optional>

namespace infdex {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double transition01(double t) {
    // C-infinity step: 1 for t <= 0, 0 for t >= 1.
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    double wa = std::exp(-1.0 / (1.0 - t));
    double wb = std::exp(-1.0 / t);
    return wa / (wa + wb);
}
}  // namespace

double CutoffSpec::chi(double radius) const {
    double v = std::abs(radius) / R0;
    return transition01(2.0 * v - 1.0);
}

int ModelDescriptor::ambient_dim() const {
    switch (kind) {
        case Kind::Point: return n;
        case Kind::CircleCotangent: return 1;
        case Kind::PlaneRotation: return 1;
        case Kind::LinearTorus: return X.dim;
        case Kind::CotangentTorus: return 2 * n;
        case Kind::Product: return a->ambient_dim() + b->ambient_dim();
        case Kind::Diagonal: return a->ambient_dim();
    }
    return 0;
}

ModelDescriptor model_point(int n) {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::Point;
    m.n = n;
    return m;
}

ModelDescriptor model_point_poly(int n, const MultiPoly& alpha) {
    ModelDescriptor m = model_point(n);
    m.alpha = alpha;
    return m;
}

ModelDescriptor model_circle() {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::CircleCotangent;
    return m;
}

ModelDescriptor model_plane_rotation() {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::PlaneRotation;
    return m;
}

ModelDescriptor model_linear_torus(const WeightList& X) {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::LinearTorus;
    m.X = X;
    return m;
}

ModelDescriptor model_cotangent_torus(int n) {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::CotangentTorus;
    m.n = n;
    return m;
}

ModelDescriptor model_product(ModelDescriptor a, ModelDescriptor b) {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::Product;
    m.a = std::make_shared<ModelDescriptor>(std::move(a));
    m.b = std::make_shared<ModelDescriptor>(std::move(b));
    return m;
}

ModelDescriptor model_diagonal(ModelDescriptor a, ModelDescriptor b) {
    ModelDescriptor m;
    m.kind = ModelDescriptor::Kind::Diagonal;
    m.a = std::make_shared<ModelDescriptor>(std::move(a));
    m.b = std::make_shared<ModelDescriptor>(std::move(b));
    if (m.a->ambient_dim() != m.b->ambient_dim())
        throw input_error("diagonal model components must share the torus");
    return m;
}

Distribution expected_infdex(const ModelDescriptor& model) {
    using Kind = ModelDescriptor::Kind;
    switch (model.kind) {
        case Kind::Point: {
            if (!model.alpha.coef.empty()) return fourier_of_polynomial(model.alpha);
            return delta0(model.n);
        }
        case Kind::CircleCotangent: {
            // theta in [0, 2 pi): 2 pi i times Lebesgue on the line.
            Distribution d = lebesgue(1);
            d.pf = Prefactor::of(Rat(1), 1, 1);
            return d;
        }
        case Kind::PlaneRotation: {
            WeightList X{1, {QVec{Rat(1)}}};
            return distribution_from_weights(X, Prefactor::of(Rat(1), 1, 1));
        }
        case Kind::LinearTorus: {
            const int m = model.X.count();
            return distribution_from_weights(model.X, Prefactor::of(Rat(1), m, m));
        }
        case Kind::CotangentTorus: {
            // i^n times Lebesgue on the antidiagonal {(zeta, -zeta)}.
            const int n = model.n;
            Distribution d;
            d.dim = 2 * n;
            d.pf = Prefactor::of(Rat(1), 0, n);
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                std::vector<QVec> cols;
                for (int i = 0; i < n; ++i) {
                    QVec e = qvec_zero(2 * n);
                    Rat s = (mask >> i) & 1 ? Rat(-1) : Rat(1);
                    e[i] = s;
                    e[n + i] = -s;
                    cols.push_back(std::move(e));
                }
                d.cones.push_back({QMat::from_columns(cols),
                                   MultiPoly::constant(2 * n, Rat(1))});
            }
            return d;
        }
        case Kind::Product:
            return tensor(expected_infdex(*model.a), expected_infdex(*model.b));
        case Kind::Diagonal:
            return convolve(expected_infdex(*model.a), expected_infdex(*model.b));
    }
    throw input_error("unknown model");
}

namespace {

struct TorusReduction {
    bool ok = false;
    int dim = 0;
    std::vector<QVec> weights;  // ambient coordinates; one 2 pi i per weight
};

TorusReduction reduce_to_torus(const ModelDescriptor& model) {
    using Kind = ModelDescriptor::Kind;
    TorusReduction r;
    switch (model.kind) {
        case Kind::Point:
            if (!model.alpha.coef.empty()) return r;  // polynomial class: oscillatory path
            r.ok = true;
            r.dim = model.n;
            return r;
        case Kind::PlaneRotation:
            r.ok = true;
            r.dim = 1;
            r.weights = {QVec{Rat(1)}};
            return r;
        case Kind::LinearTorus:
            r.ok = true;
            r.dim = model.X.dim;
            r.weights = model.X.weights;
            return r;
        case Kind::Product: {
            TorusReduction ra = reduce_to_torus(*model.a);
            TorusReduction rb = reduce_to_torus(*model.b);
            if (!ra.ok || !rb.ok) return r;
            r.ok = true;
            r.dim = ra.dim + rb.dim;
            for (const auto& w : ra.weights) {
                QVec e = w;
                e.resize(r.dim, Rat(0));
                r.weights.push_back(std::move(e));
            }
            for (const auto& w : rb.weights) {
                QVec e = qvec_zero(ra.dim);
                e.insert(e.end(), w.begin(), w.end());
                r.weights.push_back(std::move(e));
            }
            return r;
        }
        case Kind::Diagonal: {
            TorusReduction ra = reduce_to_torus(*model.a);
            TorusReduction rb = reduce_to_torus(*model.b);
            if (!ra.ok || !rb.ok || ra.dim != rb.dim) return r;
            r.ok = true;
            r.dim = ra.dim;
            r.weights = ra.weights;
            r.weights.insert(r.weights.end(), rb.weights.begin(), rb.weights.end());
            return r;
        }
        default: return r;
    }
}

std::complex<double> ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// (P(-i d) f)(y) as a complex evaluation plan; for Gaussians the derivative
// polynomials are precomputed once.
struct PolyDiffApply {
    std::vector<std::pair<std::complex<double>, MultiPoly>> parts;  // weight, poly factor
    double s2 = 1.0;
    std::vector<double> center;

    PolyDiffApply(const MultiPoly& P, const TestFunction& fn) {
        assert(fn.kind == TestFunction::Kind::PolyGaussian);
        s2 = rat_d(fn.sigma) * rat_d(fn.sigma);
        center.resize(fn.dim);
        for (int i = 0; i < fn.dim; ++i) center[i] = rat_d(fn.center[i]);
        for (const auto& [e, c] : P.coef) {
            int deg = std::accumulate(e.begin(), e.end(), 0);
            parts.push_back({rat_d(c) * ipow(-deg), gaussian_derivative_poly(fn, e)});
        }
    }

    std::complex<double> operator()(const std::vector<double>& y) const {
        double r2 = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            double d = y[i] - center[i];
            r2 += d * d;
        }
        double g = std::exp(-r2 / (2.0 * s2));
        std::complex<double> acc{0, 0};
        for (const auto& [w, poly] : parts) acc += w * poly.eval_d(y);
        return acc * g;
    }
};

}  // namespace

ComplexEstimate point_pairing_oscillatory(const MultiPoly& P, const TestFunction& f) {
    if (f.kind != TestFunction::Kind::PolyGaussian)
        throw precondition_error("oscillatory point pairing supports Gaussian test functions");
    const int n = f.dim;
    const double sigma = rat_d(f.sigma);

    // Per-coordinate oscillatory factors: OSC(p, m, c) = int x^p Fhat_{m,c}(x) dx,
    // Fhat_{m,c}(x) = int xi^m e^{-(xi-c)^2/2s^2} e^{-i xi x} d xi.
    auto osc_factor = [&](int p, int m, double c, int refine) -> std::complex<double> {
        const double W = sigma * (16.0 + 2.0 * m);
        const double X0 = (16.0 + 2.0 * (p + m)) / sigma;
        const int base_out = 64 * refine;
        const int out_panels =
            base_out + 2 * static_cast<int>(std::ceil(2 * X0 * std::abs(c) / kTwoPi));
        auto fhat = [&](double x) {
            int in_panels = 32 * refine +
                            2 * static_cast<int>(std::ceil(2 * W * std::abs(x) / kTwoPi));
            // composite 16-pt GL over [c-W, c+W]
            std::complex<double> total{0, 0};
            const double a = c - W, b = c + W;
            const double h = (b - a) / in_panels;
            static const double gx[8] = {0.0950125098376374, 0.2816035507792589,
                                         0.4580167776572274, 0.6178762444026438,
                                         0.7554044083550030, 0.8656312023878318,
                                         0.9445750230732326, 0.9894009349916499};
            static const double gw[8] = {0.1894506104550685, 0.1826034150449236,
                                         0.1691565193950025, 0.1495959888165767,
                                         0.1246289712555339, 0.0951585116824928,
                                         0.0622535239386479, 0.0271524594117541};
            for (int pan = 0; pan < in_panels; ++pan) {
                const double mid = a + (pan + 0.5) * h;
                const double half = 0.5 * h;
                std::complex<double> acc{0, 0};
                for (int i = 0; i < 8; ++i) {
                    for (double xi : {mid + half * gx[i], mid - half * gx[i]}) {
                        double v = std::exp(-(xi - c) * (xi - c) / (2 * sigma * sigma));
                        for (int q = 0; q < m; ++q) v *= xi;
                        acc += gw[i] * v * std::exp(std::complex<double>(0, -xi * x));
                    }
                }
                total += acc * half;
            }
            return total;
        };
        std::complex<double> total{0, 0};
        const double a = -X0, b = X0;
        const double h = (b - a) / out_panels;
        static const double gx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                     0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                     0.9445750230732326, 0.9894009349916499};
        static const double gw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                     0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                     0.0622535239386479, 0.0271524594117541};
        for (int pan = 0; pan < out_panels; ++pan) {
            const double mid = a + (pan + 0.5) * h;
            const double half = 0.5 * h;
            std::complex<double> acc{0, 0};
            for (int i = 0; i < 8; ++i) {
                for (double x : {mid + half * gx[i], mid - half * gx[i]}) {
                    double xp = 1.0;
                    for (int q = 0; q < p; ++q) xp *= x;
                    acc += gw[i] * xp * fhat(x);
                }
            }
            total += acc * half;
        }
        // dx is normalized so that inversion holds: dx = d xi / (2 pi) per
        // coordinate.
        return total / kTwoPi;
    };

    MultiPoly Puse = P.coef.empty() ? MultiPoly::constant(n, Rat(1)) : P;
    std::complex<double> v1{0, 0}, v2{0, 0};
    for (int refine = 1; refine <= 2; ++refine) {
        std::complex<double> total{0, 0};
        for (const auto& [pe, pc] : Puse.coef)
            for (const auto& [qe, qc] : f.poly.coef) {
                std::complex<double> term = rat_d(pc) * rat_d(qc);
                for (int i = 0; i < n; ++i)
                    term *= osc_factor(pe[i], qe[i], rat_d(f.center[i]), refine);
                total += term;
            }
        (refine == 1 ? v1 : v2) = total;
    }
    return {v2, std::abs(v2 - v1) + 1e-12 * (1.0 + std::abs(v2))};
}

namespace {

double gaussian_or_bump_radius(const TestFunction& f, int extraDeg) {
    return f.effective_radius(extraDeg);
}

// Dual certificate of the weight cone: <a_i, phi> >= 1 for all i. Its norm
// bounds the moment-map parametrization, and the pairings <a_i, phi>
// cut out the simplex containing the quadrature support.
struct WeightCertificate {
    QVec phi;
    double norm = 1.0;
    std::vector<double> pairings;  // <a_i, phi>
};

WeightCertificate weight_certificate(const std::vector<QVec>& weights, int dim) {
    WeightCertificate cert;
    if (weights.empty()) return cert;
    auto phi = pointedness_witness(weights, dim);
    if (!phi) throw precondition_error("unbounded support: weights do not span a pointed cone");
    cert.phi = *phi;
    double s = 0;
    for (const auto& x : *phi) s += rat_d(x) * rat_d(x);
    cert.norm = std::sqrt(s);
    cert.pairings.reserve(weights.size());
    for (const auto& a : weights) cert.pairings.push_back(rat_d(dot(a, *phi)));
    return cert;
}

}  // namespace

double stabilization_s0(const ModelDescriptor& model, const TestFunction& f,
                        const CutoffSpec& cutoff) {
    using Kind = ModelDescriptor::Kind;
    const double R = gaussian_or_bump_radius(f, 0);
    switch (model.kind) {
        case Kind::Point: return 1.0;
        case Kind::CircleCotangent: return 2.0 * R / cutoff.R0;
        case Kind::CotangentTorus: return 2.0 * R / cutoff.R0;
        default: {
            TorusReduction r = reduce_to_torus(model);
            if (!r.ok) return 2.0 * R / cutoff.R0;
            return 2.0 * R * weight_certificate(r.weights, r.dim).norm / cutoff.R0;
        }
    }
}

ComplexEstimate finite_s_pairing(const ModelDescriptor& model, const TestFunction& f, double s,
                                 const CutoffSpec& cutoff, const MultiPoly* P,
                                 const QuadratureConfig& cfg) {
    using Kind = ModelDescriptor::Kind;
    if (s <= 0) throw precondition_error("finite-s pairing requires s > 0");
    const int dim = model.ambient_dim();
    if (f.dim != dim) throw input_error("test function dimension mismatch");

    switch (model.kind) {
        case Kind::Point: {
            MultiPoly Puse = P       ? *P
                             : !model.alpha.coef.empty() ? model.alpha
                                                         : MultiPoly::constant(model.n, Rat(1));
            return point_pairing_oscillatory(Puse, f);
        }
        case Kind::CircleCotangent: {
            if (P && P->degree() > 0)
                throw precondition_error("polynomial classes unsupported on this model");
            const double T = std::min(s * cutoff.R0, f.effective_radius(0));
            auto run = [&](double t) { return cutoff.chi(t / s) * f.eval({t}); };
            Estimate e = integrate_1d(run, -T, T);
            std::complex<double> pref{0, kTwoPi};
            return {pref * e.value, std::abs(pref) * e.err};
        }
        case Kind::CotangentTorus: {
            if (P && P->degree() > 0)
                throw precondition_error("polynomial classes unsupported on this model");
            const int n = model.n;
            const double T = std::min(s * cutoff.R0, f.effective_radius(0) / std::sqrt(2.0));
            std::complex<double> pref = ipow(n);
            if (n == 1) {
                auto run = [&](double t) { return cutoff.chi(std::abs(t) / s) * f.eval({t, -t}); };
                Estimate e = integrate_1d(run, -T, T);
                return {pref * e.value, e.err};
            }
            std::vector<double> lo(n, -T), hi(n, T);
            std::vector<double> buf(2 * n);
            auto run = [&](const double* t) {
                double r2 = 0;
                for (int i = 0; i < n; ++i) {
                    buf[i] = t[i];
                    buf[n + i] = -t[i];
                    r2 += t[i] * t[i];
                }
                return cutoff.chi(std::sqrt(r2) / s) * f.eval(buf);
            };
            Estimate e = mc_integrate_box(n, lo, hi, run, cfg);
            return {pref * e.value, e.err};
        }
        default: break;
    }

    TorusReduction red = reduce_to_torus(model);
    if (!red.ok) throw precondition_error("unsupported model/class combination");
    const int m = static_cast<int>(red.weights.size());
    if (m == 0) {
        MultiPoly Puse = P ? *P : MultiPoly::constant(dim, Rat(1));
        return point_pairing_oscillatory(Puse, f);
    }

    MultiPoly Puse = P ? *P : MultiPoly::constant(dim, Rat(1));
    const bool trivialP = Puse.degree() <= 0;
    if (!trivialP && f.kind == TestFunction::Kind::PolyBump)
        throw precondition_error("polynomial classes with bump test functions unsupported");
    Rat pscale = trivialP && !Puse.coef.empty() ? Puse.coef.begin()->second : Rat(1);

    WeightCertificate cert = weight_certificate(red.weights, red.dim);
    // support simplex {sum <a_i,phi> u_i <= |phi| Reff}; the 1-D path keeps
    // the plain interval with the cutoff cap
    const double C = cert.norm * f.effective_radius(Puse.degree()) * 1.0000001;
    const double U = std::min(s * cutoff.R0, C);

    std::vector<double> Wd(static_cast<size_t>(dim) * m);
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < dim; ++r)
            Wd[static_cast<size_t>(r) * m + i] = rat_d(red.weights[i][r]);

    std::optional<PolyDiffApply> apply;
    if (!trivialP) apply.emplace(Puse, f);
    std::vector<double> ybuf(dim);
    auto point_of = [&](const double* u) {
        for (int r = 0; r < dim; ++r) {
            double acc = 0;
            for (int i = 0; i < m; ++i) acc += Wd[static_cast<size_t>(r) * m + i] * u[i];
            ybuf[r] = acc;
        }
    };
    auto chi_of = [&](const double* u) {
        double r2 = 0;
        for (int i = 0; i < m; ++i) r2 += u[i] * u[i];
        return cutoff.chi(std::sqrt(r2) / s);
    };

    // (2 pi i)^m prefactor applied at the end.
    std::complex<double> pref = ipow(m) * std::pow(kTwoPi, m);

    if (m == 1) {
        auto run = [&](double u) -> std::complex<double> {
            double uu[1] = {u};
            point_of(uu);
            double chi = chi_of(uu);
            if (chi == 0.0) return {0, 0};
            if (trivialP) return chi * rat_d(pscale) * f.eval(ybuf);
            return chi * (*apply)(ybuf);
        };
        ComplexEstimate e = integrate_1d_complex(run, 0.0, U);
        return {pref * e.value, std::abs(pref) * e.err};
    }

    auto run = [&](const double* u) -> std::complex<double> {
        double chi = chi_of(u);
        if (chi == 0.0) return {0, 0};
        point_of(u);
        if (trivialP) return chi * rat_d(pscale) * f.eval(ybuf);
        return chi * (*apply)(ybuf);
    };
    ComplexEstimate e = mc_integrate_simplex_complex(cert.pairings, C, run, cfg);
    return {pref * e.value, std::abs(pref) * e.err};
}

std::vector<ComplexEstimate> stabilization_scan(const ModelDescriptor& model,
                                                const TestFunction& f,
                                                const std::vector<double>& sList,
                                                const CutoffSpec& cutoff,
                                                const QuadratureConfig& cfg) {
    std::vector<ComplexEstimate> out;
    out.reserve(sList.size());
    for (double s : sList) out.push_back(finite_s_pairing(model, f, s, cutoff, nullptr, cfg));
    return out;
}

std::vector<ComplexEstimate> cutoff_independence_scan(const ModelDescriptor& model,
                                                      const TestFunction& f,
                                                      const std::vector<CutoffSpec>& cutoffs,
                                                      const QuadratureConfig& cfg) {
    double s = 1.0;
    for (const auto& c : cutoffs) s = std::max(s, stabilization_s0(model, f, c));
    std::vector<ComplexEstimate> out;
    out.reserve(cutoffs.size());
    for (const auto& c : cutoffs) out.push_back(finite_s_pairing(model, f, s, c, nullptr, cfg));
    return out;
}

Estimate brute_force_spline_pairing(const WeightList& X, const TestFunction& f,
                                    const QuadratureConfig& cfg) {
    validate_weights(X);
    if (!pointedness_check(X.weights, X.dim))
        throw precondition_error("unbounded support: weights do not span a pointed cone");
    if (f.dim != X.dim) throw input_error("test function dimension mismatch");
    const int m = X.count();
    WeightCertificate cert = weight_certificate(X.weights, X.dim);
    const double C = cert.norm * f.effective_radius(0) * 1.0000001;

    std::vector<double> Wd(static_cast<size_t>(X.dim) * m);
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < X.dim; ++r)
            Wd[static_cast<size_t>(r) * m + i] = rat_d(X.weights[i][r]);
    std::vector<double> ybuf(X.dim);
    auto point_of = [&](const double* u) {
        for (int r = 0; r < X.dim; ++r) {
            double acc = 0;
            for (int i = 0; i < m; ++i) acc += Wd[static_cast<size_t>(r) * m + i] * u[i];
            ybuf[r] = acc;
        }
    };

    if (m == 1) {
        auto run = [&](double u) {
            double uu[1] = {u};
            point_of(uu);
            return f.eval(ybuf);
        };
        return integrate_1d(run, 0.0, C / cert.pairings[0]);
    }
    auto run = [&](const double* u) {
        point_of(u);
        return f.eval(ybuf);
    };
    return mc_integrate_simplex(cert.pairings, C, run, cfg);
}

}  // namespace infdex

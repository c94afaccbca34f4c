#include "testfn.hpp"

#include "geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>

namespace infdex {

TestFunction TestFunction::gaussian(int dim, const Rat& sigma, const QVec& center,
                                    const MultiPoly& poly) {
    if (sigma <= 0) throw precondition_error("Gaussian width must be positive");
    TestFunction f;
    f.kind = Kind::PolyGaussian;
    f.dim = dim;
    f.sigma = sigma;
    f.center = center.empty() ? qvec_zero(dim) : center;
    f.poly = poly.is_zero() && poly.nvars == 0 ? MultiPoly::constant(dim, Rat(1)) : poly;
    if (f.poly.nvars != dim) throw input_error("test-function polynomial dimension mismatch");
    if (static_cast<int>(f.center.size()) != dim) throw input_error("center dimension mismatch");
    return f;
}

TestFunction TestFunction::bump(int dim, const Rat& radius, const QVec& center,
                                const MultiPoly& poly) {
    if (radius <= 0) throw precondition_error("bump radius must be positive");
    TestFunction f;
    f.kind = Kind::PolyBump;
    f.dim = dim;
    f.radius = radius;
    f.center = center.empty() ? qvec_zero(dim) : center;
    f.poly = poly.is_zero() && poly.nvars == 0 ? MultiPoly::constant(dim, Rat(1)) : poly;
    if (f.poly.nvars != dim) throw input_error("test-function polynomial dimension mismatch");
    if (static_cast<int>(f.center.size()) != dim) throw input_error("center dimension mismatch");
    return f;
}

double TestFunction::eval(const std::vector<double>& x) const {
    assert(static_cast<int>(x.size()) == dim);
    double q = poly.eval_d(x);
    if (kind == Kind::PolyGaussian) {
        double s2 = rat_d(sigma) * rat_d(sigma);
        double r2 = 0;
        for (int i = 0; i < dim; ++i) {
            double d = x[i] - rat_d(center[i]);
            r2 += d * d;
        }
        return q * std::exp(-r2 / (2.0 * s2));
    }
    double R = rat_d(radius);
    double r2 = 0;
    for (int i = 0; i < dim; ++i) {
        double d = (x[i] - rat_d(center[i])) / R;
        r2 += d * d;
    }
    if (r2 >= 1.0) return 0.0;
    return q * std::exp(1.0 - 1.0 / (1.0 - r2));
}

double TestFunction::effective_radius(int extraDegree) const {
    double cnorm = 0;
    for (const auto& ci : center) cnorm += rat_d(ci) * rat_d(ci);
    cnorm = std::sqrt(cnorm);
    if (kind == Kind::PolyBump) return cnorm + rat_d(radius);
    // |q| e^{-r^2/2s^2} is below ~1e-20 relative once r exceeds this many
    // widths, for the moderate degrees used at desk scale.
    int k = 10 + std::max(poly.degree(), 0) + std::max(extraDegree, 0);
    return cnorm + rat_d(sigma) * static_cast<double>(k);
}

MultiPoly gaussian_derivative_poly(const TestFunction& f, const std::vector<int>& beta) {
    assert(f.kind == TestFunction::Kind::PolyGaussian);
    Rat s2 = f.sigma * f.sigma;
    MultiPoly p = f.poly;
    for (int v = 0; v < f.dim; ++v) {
        for (int k = 0; k < beta[v]; ++k) {
            // d_v (p G) = (d_v p - p (x_v - c_v)/s2) G
            MultiPoly lin = MultiPoly::variable(f.dim, v) +
                            MultiPoly::constant(f.dim, -f.center[v]);
            p = p.partial(v) - (p * lin).scaled(Rat(1) / s2);
        }
    }
    return p;
}

namespace {

double bump_fd_derivative(const TestFunction& f, const std::vector<int>& beta,
                          std::vector<double> x, double h) {
    // Iterated 4th-order central differences, one variable at a time.
    int var = -1;
    for (int v = 0; v < f.dim; ++v)
        if (beta[v] > 0) {
            var = v;
            break;
        }
    if (var < 0) return f.eval(x);
    std::vector<int> lower = beta;
    lower[var] -= 1;
    auto at = [&](double off) {
        std::vector<double> y = x;
        y[var] += off;
        return bump_fd_derivative(f, lower, y, h);
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

}  // namespace

double derivative_at(const TestFunction& f, const std::vector<int>& beta, const QVec& point) {
    assert(static_cast<int>(beta.size()) == f.dim);
    if (f.kind == TestFunction::Kind::PolyGaussian) {
        MultiPoly p = gaussian_derivative_poly(f, beta);
        Rat exact = p.eval(point);
        Rat s2 = f.sigma * f.sigma;
        Rat r2(0);
        for (int i = 0; i < f.dim; ++i) {
            Rat d = point[i] - f.center[i];
            r2 += d * d;
        }
        return rat_d(exact) * std::exp(-rat_d(r2) / (2.0 * rat_d(s2)));
    }
    int total = std::accumulate(beta.begin(), beta.end(), 0);
    if (total > 6)
        throw precondition_error("bump derivatives above order 6 are finite-difference noise");
    std::vector<double> x(f.dim);
    for (int i = 0; i < f.dim; ++i) x[i] = rat_d(point[i]);
    // Step balances the O(h^4) truncation against roundoff amplified by
    // 1/h^total in the iterated stencil.
    const double h = rat_d(f.radius) * std::pow(0x1.0p-52, 1.0 / (total + 4));
    return bump_fd_derivative(f, beta, x, h);
}

namespace {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0,1) from raw generator output; avoids the
// implementation-defined std::uniform_real_distribution.
inline double unit_double(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

struct StratumPlan {
    int dim;
    int k;          // strata per dimension
    uint64_t count; // k^dim
    uint64_t per;   // samples per stratum
};

StratumPlan plan_strata(int dim, const QuadratureConfig& cfg) {
    StratumPlan p;
    p.dim = dim;
    if (cfg.strataDepth > 0) {
        p.k = cfg.strataDepth;
    } else {
        double k = std::pow(static_cast<double>(cfg.samples) / 64.0, 1.0 / dim);
        p.k = std::max(1, static_cast<int>(k));
        while (std::pow(p.k, dim) > 1024.0 && p.k > 1) --p.k;
    }
    p.count = 1;
    for (int i = 0; i < dim; ++i) p.count *= static_cast<uint64_t>(p.k);
    p.per = std::max<uint64_t>(2, cfg.samples / p.count);
    return p;
}

inline double exp_variate(std::mt19937_64& g) { return -std::log1p(-unit_double(g)); }

}  // namespace

Estimate mc_integrate_box(int dim, const std::vector<double>& lo, const std::vector<double>& hi,
                          const std::function<double(const double*)>& f,
                          const QuadratureConfig& cfg) {
    auto wrapped = [&](const double* x) { return std::complex<double>(f(x), 0.0); };
    ComplexEstimate ce = mc_integrate_box_complex(dim, lo, hi, wrapped, cfg);
    return {ce.value.real(), ce.err};
}

ComplexEstimate mc_integrate_box_complex(
    int dim, const std::vector<double>& lo, const std::vector<double>& hi,
    const std::function<std::complex<double>(const double*)>& f, const QuadratureConfig& cfg) {
    StratumPlan plan = plan_strata(dim, cfg);
    std::vector<double> width(dim);
    double volume = 1.0;
    for (int i = 0; i < dim; ++i) {
        width[i] = (hi[i] - lo[i]) / plan.k;
        volume *= hi[i] - lo[i];
    }
    if (volume == 0.0) return {};
    const double stratum_vol = volume / static_cast<double>(plan.count);

    std::complex<double> total(0.0, 0.0);
    double var_re = 0.0, var_im = 0.0;
    std::vector<double> x(dim);
    std::vector<int> idx(dim, 0);
    for (uint64_t s = 0; s < plan.count; ++s) {
        uint64_t rest = s;
        for (int i = 0; i < dim; ++i) {
            idx[i] = static_cast<int>(rest % plan.k);
            rest /= plan.k;
        }
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(s + 0x51ab5eedULL)));
        std::complex<double> sum(0.0, 0.0);
        double sr2 = 0.0, si2 = 0.0;
        for (uint64_t n = 0; n < plan.per; ++n) {
            for (int i = 0; i < dim; ++i)
                x[i] = lo[i] + width[i] * (idx[i] + unit_double(rng));
            std::complex<double> v = f(x.data());
            sum += v;
            sr2 += v.real() * v.real();
            si2 += v.imag() * v.imag();
        }
        const double n = static_cast<double>(plan.per);
        std::complex<double> mean = sum / n;
        total += stratum_vol * mean;
        double vr = std::max(0.0, (sr2 - n * mean.real() * mean.real()) / (n - 1.0));
        double vi = std::max(0.0, (si2 - n * mean.imag() * mean.imag()) / (n - 1.0));
        var_re += stratum_vol * stratum_vol * vr / n;
        var_im += stratum_vol * stratum_vol * vi / n;
    }
    return {total, std::sqrt(var_re + var_im)};
}

Estimate mc_integrate_simplex(const std::vector<double>& c, double C,
                              const std::function<double(const double*)>& f,
                              const QuadratureConfig& cfg) {
    auto wrapped = [&](const double* x) { return std::complex<double>(f(x), 0.0); };
    ComplexEstimate ce = mc_integrate_simplex_complex(c, C, wrapped, cfg);
    return {ce.value.real(), ce.err};
}

ComplexEstimate mc_integrate_simplex_complex(
    const std::vector<double>& c, double C,
    const std::function<std::complex<double>(const double*)>& f, const QuadratureConfig& cfg) {
    const int d = static_cast<int>(c.size());
    if (C <= 0.0) return {};
    // volume of {u >= 0, sum c_i u_i <= C}
    double volume = 1.0;
    for (int i = 0; i < d; ++i) volume *= C / (c[i] * (i + 1));

    // Radial shells always; for d == 2 the single angular fraction gets its
    // own stratification as well. Decay profiles are radial, so this removes
    // most of the variance for the low-dimensional cones that dominate the
    // suites.
    uint64_t shells, abins;
    if (cfg.strataDepth > 0) {
        shells = static_cast<uint64_t>(cfg.strataDepth);
        abins = d == 2 ? shells : 1;
    } else if (d == 1) {
        shells = std::max<uint64_t>(1, std::min<uint64_t>(1024, cfg.samples / 64));
        abins = 1;
    } else if (d == 2) {
        uint64_t k = static_cast<uint64_t>(std::sqrt(static_cast<double>(cfg.samples) / 64.0));
        shells = std::max<uint64_t>(1, std::min<uint64_t>(64, k));
        abins = shells;
    } else {
        shells = std::max<uint64_t>(1, std::min<uint64_t>(256, cfg.samples / 64));
        abins = 1;
    }
    const uint64_t strata = shells * abins;
    const uint64_t per = std::max<uint64_t>(2, cfg.samples / strata);

    // Shells are equal-width in the radial coordinate t (decaying integrands
    // concentrate near t = 0, so that is where resolution belongs); each
    // shell is weighted by its exact volume fraction t_hi^d - t_lo^d.
    std::complex<double> total(0.0, 0.0);
    double var_re = 0.0, var_im = 0.0;
    std::vector<double> g(d), u(d);
    for (uint64_t s = 0; s < strata; ++s) {
        const uint64_t sr = s / abins;
        const uint64_t sa = s % abins;
        const double t_lo = static_cast<double>(sr) / shells;
        const double t_hi = static_cast<double>(sr + 1) / shells;
        const double s_lo = std::pow(t_lo, d);
        const double s_hi = std::pow(t_hi, d);
        const double stratum_vol = volume * (s_hi - s_lo) / static_cast<double>(abins);
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(s + 0x9c0ffeeULL)));
        std::complex<double> sum(0.0, 0.0);
        double sr2 = 0.0, si2 = 0.0;
        for (uint64_t n = 0; n < per; ++n) {
            // radial density d t^{d-1}, drawn by inverse CDF within the shell
            double t = std::pow(s_lo + unit_double(rng) * (s_hi - s_lo), 1.0 / d);
            if (d == 2) {
                // the face fraction is uniform for d == 2; stratify it too
                double y = (static_cast<double>(sa) + unit_double(rng)) /
                           static_cast<double>(abins);
                u[0] = C * t * y / c[0];
                u[1] = C * t * (1.0 - y) / c[1];
            } else {
                double gsum = 0.0;
                for (int i = 0; i < d; ++i) {
                    g[i] = exp_variate(rng);
                    gsum += g[i];
                }
                if (gsum <= 0.0) gsum = 1.0;
                for (int i = 0; i < d; ++i) u[i] = C * t * g[i] / (gsum * c[i]);
            }
            std::complex<double> v = f(u.data());
            sum += v;
            sr2 += v.real() * v.real();
            si2 += v.imag() * v.imag();
        }
        const double n = static_cast<double>(per);
        std::complex<double> mean = sum / n;
        total += stratum_vol * mean;
        double vr = std::max(0.0, (sr2 - n * mean.real() * mean.real()) / (n - 1.0));
        double vi = std::max(0.0, (si2 - n * mean.imag() * mean.imag()) / (n - 1.0));
        var_re += stratum_vol * stratum_vol * vr / n;
        var_im += stratum_vol * stratum_vol * vi / n;
    }
    return {total, std::sqrt(var_re + var_im)};
}

Estimate pair_cone_term_numeric(const QMat& B, const MultiPoly& q, const TestFunction& f,
                                const QuadratureConfig& cfg) {
    if (q.is_zero()) return {0.0, 0.0};
    const int d = B.cols;
    const int n = B.rows;
    if (n != f.dim) throw input_error("cone term and test function dimension mismatch");

    // A dual certificate phi with <b_i, phi> >= 1 confines the support
    // {|Bu| <= Rcut, u >= 0} to the simplex {sum <b_i,phi> u_i <= |phi| Rcut}.
    auto phi = pointedness_witness(B.columns(), n);
    if (!phi) throw precondition_error("cone term generator matrix is not injective");
    const double Rcut = f.effective_radius(q.degree());
    std::vector<double> cvec(d);
    double phinorm2 = 0.0;
    for (int j = 0; j < n; ++j) phinorm2 += rat_d((*phi)[j]) * rat_d((*phi)[j]);
    for (int i = 0; i < d; ++i) cvec[i] = rat_d(dot(B.column(i), *phi));
    const double C = std::sqrt(phinorm2) * Rcut * 1.0000001 + 1e-12;

    std::vector<double> Bd(static_cast<size_t>(n) * d);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < d; ++c) Bd[static_cast<size_t>(r) * d + c] = rat_d(B.at(r, c));

    std::vector<double> xbuf(n);
    auto integrand = [&](const double* u) {
        for (int r = 0; r < n; ++r) {
            double acc = 0;
            for (int c = 0; c < d; ++c) acc += Bd[static_cast<size_t>(r) * d + c] * u[c];
            xbuf[r] = acc;
        }
        return q.eval_d(xbuf) * f.eval(xbuf);
    };
    return mc_integrate_simplex(cvec, C, integrand, cfg);
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
const double kGLx[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                        0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                        0.9445750230732326, 0.9894009349916499};
const double kGLw[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                        0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                        0.0622535239386479, 0.0271524594117541};

template <typename T>
T gl_panels(const std::function<T(double)>& f, double a, double b, int panels) {
    T total{};
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        T acc{};
        for (int i = 0; i < 8; ++i) {
            acc += kGLw[i] * (f(mid + half * kGLx[i]) + f(mid - half * kGLx[i]));
        }
        total += acc * half;
    }
    return total;
}

}  // namespace

Estimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                      int min_panels) {
    double coarse = gl_panels<double>(f, a, b, min_panels);
    double fine = gl_panels<double>(f, a, b, 2 * min_panels);
    int panels = 2 * min_panels;
    while (std::abs(fine - coarse) > 1e-13 * (1.0 + std::abs(fine)) && panels < 2048) {
        coarse = fine;
        panels *= 2;
        fine = gl_panels<double>(f, a, b, panels);
    }
    return {fine, std::abs(fine - coarse) + 1e-15 * (1.0 + std::abs(fine))};
}

ComplexEstimate integrate_1d_complex(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, int min_panels) {
    std::complex<double> coarse = gl_panels<std::complex<double>>(f, a, b, min_panels);
    std::complex<double> fine = gl_panels<std::complex<double>>(f, a, b, 2 * min_panels);
    int panels = 2 * min_panels;
    while (std::abs(fine - coarse) > 1e-13 * (1.0 + std::abs(fine)) && panels < 4096) {
        coarse = fine;
        panels *= 2;
        fine = gl_panels<std::complex<double>>(f, a, b, panels);
    }
    return {fine, std::abs(fine - coarse) + 1e-15 * (1.0 + std::abs(fine))};
}

}  // namespace infdex

#include "models.hpp"

#include "jsonio.hpp"

#include <doctest.h>

#include <cmath>

using namespace infdex;

namespace {
QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

WeightList wl(int dim, std::initializer_list<QVec> ws) {
    WeightList X;
    X.dim = dim;
    for (const auto& w : ws) X.weights.push_back(w);
    return X;
}

const QuadratureConfig kCfg{100000, 0, 0};
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

TEST_CASE("expected_infdex closed forms") {
    SUBCASE("point model is the delta function") {
        Distribution d = expected_infdex(model_point(2));
        CHECK(d.cones.empty());
        REQUIRE(d.points.size() == 1);
        CHECK(d.pf == Prefactor::one());
    }
    SUBCASE("plane rotation is 2 pi i times the Heaviside ramp of one weight") {
        Distribution d = expected_infdex(model_plane_rotation());
        CHECK(d.pf == Prefactor::of(Rat(1), 1, 1));
        CHECK(eval_density(d, qv({2})).coeff == Rat(1));
        CHECK(eval_density(d, qv({-2})).coeff == Rat(0));
    }
    SUBCASE("circle cotangent is 2 pi i times Lebesgue") {
        Distribution d = expected_infdex(model_circle());
        CHECK(d.pf == Prefactor::of(Rat(1), 1, 1));
        CHECK(eval_density(d, qv({5})).coeff == Rat(1));
        CHECK(eval_density(d, qv({-5})).coeff == Rat(1));
    }
    SUBCASE("linear torus carries (2 pi i)^m") {
        auto m = model_linear_torus(wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})}));
        Distribution d = expected_infdex(m);
        CHECK(d.pf == Prefactor::of(Rat(1), 3, 3));
        REQUIRE(d.splineTag.has_value());
        CHECK(eval_density(d, qv({3, 1})).coeff == Rat(1));
    }
    SUBCASE("cotangent torus is i^n on the antidiagonal") {
        Distribution d = expected_infdex(model_cotangent_torus(1));
        CHECK(d.pf == Prefactor::of(Rat(1), 0, 1));
        CHECK(d.cones.size() == 2);
        auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
        auto e = pair_distribution(d, f, kCfg);
        // i * int exp(-t^2) dt = i sqrt(pi)
        CHECK(std::abs(e.value.imag() - std::sqrt(kTwoPi / 2.0)) <= 3 * e.err + 1e-9);
        CHECK(std::abs(e.value.real()) <= 1e-12);
    }
}

TEST_CASE("finite-s pairing saturates the cutoff on the bump example") {
    auto lt = model_linear_torus(wl(1, {qv({1})}));
    auto b = TestFunction::bump(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    CutoffSpec cut{1.0};
    auto e = finite_s_pairing(lt, b, 4.0, cut, nullptr, kCfg);
    auto direct = integrate_1d([&](double t) { return b.eval({t}); }, 0.0, 1.0);
    CHECK(std::abs(e.value.imag() - kTwoPi * direct.value) <= 1e-9);
    CHECK(std::abs(e.value.real()) <= 1e-12);
}

TEST_CASE("stabilization scan is constant past s0") {
    auto m = model_linear_torus(wl(2, {qv({1, 0}), qv({0, 1})}));
    auto b = TestFunction::bump(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
    CutoffSpec cut{1.0};
    double s0 = stabilization_s0(m, b, cut);
    auto scan = stabilization_scan(m, b, {s0, 2 * s0, 4 * s0}, cut, kCfg);
    REQUIRE(scan.size() == 3);
    CHECK(std::abs(scan[1].value - scan[0].value) <= 3 * (scan[1].err + scan[0].err) + 1e-12);
    CHECK(std::abs(scan[2].value - scan[0].value) <= 3 * (scan[2].err + scan[0].err) + 1e-12);
    // singleton scan stays a singleton
    CHECK(stabilization_scan(m, b, {s0}, cut, kCfg).size() == 1);
}

TEST_CASE("cutoff independence on the repeated-weight model") {
    auto m = model_linear_torus(wl(1, {qv({1}), qv({1})}));
    auto b = TestFunction::bump(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    auto scan = cutoff_independence_scan(m, b, {{1.0}, {2.0}, {5.0}}, kCfg);
    for (size_t i = 1; i < scan.size(); ++i)
        CHECK(std::abs(scan[i].value - scan[0].value) <=
              3 * (scan[i].err + scan[0].err) + 1e-12);
}

TEST_CASE("point model pairing via oscillatory quadrature") {
    auto g = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    auto e = finite_s_pairing(model_point(1), g, 1.0, CutoffSpec{1.0}, nullptr, kCfg);
    CHECK(std::abs(e.value.real() - 1.0) <= 1e-8);
}

TEST_CASE("brute force orthant quadrature examples") {
    auto g = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    auto e1 = brute_force_spline_pairing(wl(1, {qv({1})}), g, kCfg);
    CHECK(std::abs(e1.value - std::sqrt(kTwoPi) / 2.0) <= 3 * e1.err + 1e-10);

    // T_[1,1] against the Gaussian equals int_0^inf u exp(-u^2/2) du = 1
    auto e2 = brute_force_spline_pairing(wl(1, {qv({1}), qv({1})}), g, kCfg);
    CHECK(std::abs(e2.value - 1.0) <= 3 * e2.err + 1e-10);

    CHECK_THROWS_AS(
        brute_force_spline_pairing(wl(1, {qv({1}), qv({-1})}), g, kCfg), precondition_error);
}

TEST_CASE("model descriptors round trip through JSON") {
    auto m = model_product(model_point(1),
                           model_linear_torus(wl(2, {qv({1, 0}), qv({0, 1})})));
    Json j = model_to_json(m);
    ModelDescriptor m2 = model_from_json(j);
    CHECK(m2.ambient_dim() == 3);
    Distribution d = expected_infdex(m2);
    CHECK(d.dim == 3);
    CHECK(d.pf == Prefactor::of(Rat(1), 2, 2));
}

TEST_CASE("diagonal model components must share the torus") {
    CHECK_THROWS_AS(model_diagonal(model_point(1), model_point(2)), input_error);
}

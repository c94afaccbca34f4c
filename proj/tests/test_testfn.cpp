#include "testfn.hpp"

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
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

TEST_CASE("derivative_at worked examples") {
    auto g = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    CHECK(derivative_at(g, {1}, qv({0})) == doctest::Approx(0.0));
    CHECK(derivative_at(g, {2}, qv({0})) == doctest::Approx(-1.0));

    auto b = TestFunction::bump(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    CHECK(b.eval({0.0}) == doctest::Approx(1.0));  // profile value e^{1-1}
    CHECK(b.eval({1.5}) == 0.0);
    CHECK_THROWS_AS(derivative_at(b, {7}, qv({0})), precondition_error);
}

TEST_CASE("bump finite differences track the true derivative") {
    auto b = TestFunction::bump(1, Rat(2), qv({0}), MultiPoly::constant(1, Rat(1)));
    // compare FD derivative against the analytic derivative of
    // exp(1 - 1/(1-(x/2)^2)) at x = 1/2
    double x = 0.5, R = 2.0;
    double u = (x / R) * (x / R);
    double fx = std::exp(1.0 - 1.0 / (1.0 - u));
    double dfx = fx * (-2.0 * x / (R * R)) / ((1.0 - u) * (1.0 - u));
    CHECK(derivative_at(b, {1}, QVec{rat(1, 2)}) == doctest::Approx(dfx).epsilon(1e-7));
}

TEST_CASE("make_testfn JSON specs") {
    auto g = testfn_from_json(parse_json(R"({"dim":1,"gaussian":{"sigma":1,"center":[0]}})"));
    CHECK(g.kind == TestFunction::Kind::PolyGaussian);
    CHECK(g.eval({0.0}) == doctest::Approx(1.0));

    auto b = testfn_from_json(parse_json(R"({"dim":1,"bump":{"R":2,"poly":"1"}})"));
    CHECK(b.kind == TestFunction::Kind::PolyBump);
    CHECK(b.eval({0.0}) == doctest::Approx(1.0));

    CHECK_THROWS_AS(testfn_from_json(parse_json(R"({"dim":1,"bump":{"R":-1}})")),
                    precondition_error);
    CHECK_THROWS_AS(testfn_from_json(parse_json(R"({"dim":1,"gaussian":{"sigma":0}})")),
                    precondition_error);
    CHECK_THROWS_AS(
        testfn_from_json(parse_json(R"({"dim":1,"gaussian":{"sigma":1,"poly":{"x":"1"}}})")),
        input_error);
}

TEST_CASE("quadrant Gaussian integral with error estimate") {
    QMat B = QMat::identity(2);
    MultiPoly one = MultiPoly::constant(2, Rat(1));
    auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), one);
    QuadratureConfig cfg{100000, 0, 0};
    Estimate e = pair_cone_term_numeric(B, one, f, cfg);
    CHECK(std::abs(e.value - kTwoPi / 4.0) <= 3 * e.err);
    CHECK(e.err > 0);
}

TEST_CASE("zero polynomial pairs to exactly zero") {
    QMat B = QMat::identity(2);
    auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
    Estimate e = pair_cone_term_numeric(B, MultiPoly(2), f, QuadratureConfig{1000, 0, 0});
    CHECK(e.value == 0.0);
    CHECK(e.err == 0.0);
}

TEST_CASE("bump supported away from the cone pairs to zero") {
    QMat B = QMat::identity(2);
    MultiPoly one = MultiPoly::constant(2, Rat(1));
    auto f = TestFunction::bump(2, Rat(1), qv({-3, -3}), one);
    Estimate e = pair_cone_term_numeric(B, one, f, QuadratureConfig{20000, 0, 0});
    CHECK(std::abs(e.value) <= 3 * e.err + 1e-12);
}

TEST_CASE("fixed seeds reproduce bits, different seeds do not") {
    QMat B = QMat::identity(2);
    MultiPoly one = MultiPoly::constant(2, Rat(1));
    auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), one);
    QuadratureConfig a{50000, 42, 0}, b{50000, 42, 0}, c{50000, 43, 0};
    Estimate ea = pair_cone_term_numeric(B, one, f, a);
    Estimate eb = pair_cone_term_numeric(B, one, f, b);
    Estimate ec = pair_cone_term_numeric(B, one, f, c);
    CHECK(ea.value == eb.value);
    CHECK(ea.err == eb.err);
    CHECK(ea.value != ec.value);
}

TEST_CASE("deterministic 1-D quadrature hits smooth integrals hard") {
    auto e = integrate_1d([](double x) { return std::exp(-x * x / 2.0); }, 0.0, 12.0);
    CHECK(e.value == doctest::Approx(std::sqrt(kTwoPi) / 2.0).epsilon(1e-12));
}

#include "distribution.hpp"

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

TEST_CASE("prefactor canonicalization folds i^2 into the sign") {
    Prefactor p = Prefactor::of(Rat(1), 0, 2);
    CHECK(p.r == Rat(-1));
    CHECK(p.iPow == 0);
    Prefactor q = Prefactor::of(Rat(1), 1, 3);
    CHECK(q.r == Rat(-1));
    CHECK(q.iPow == 1);
    CHECK(Prefactor::of(Rat(1), 0, 4) == Prefactor::one());
    CHECK(std::abs(Prefactor::of(Rat(1), 2, 2).value().real() + kTwoPi * kTwoPi) < 1e-12);
}

TEST_CASE("delta0 pairing and tensor embedding") {
    auto f1 = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    auto p = pair_distribution(delta0(1), f1, kCfg);
    CHECK(p.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.err == 0.0);

    auto f2 = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
    auto p2 = pair_distribution(delta0(2), f2, kCfg);
    CHECK(p2.value.real() == doctest::Approx(1.0).epsilon(1e-12));

    // tensor(delta0, delta0) = delta0 in the product space
    Distribution dd = tensor(delta0(1), delta0(1));
    CHECK(dd.dim == 2);
    auto p3 = pair_distribution(dd, f2, kCfg);
    CHECK(p3.value.real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fourier_of_polynomial calibration values") {
    auto f = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    SUBCASE("constant gives the delta function") {
        Distribution d = fourier_of_polynomial(MultiPoly::constant(1, Rat(1)));
        auto p = pair_distribution(d, f, kCfg);
        CHECK(p.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("x pairs to -i f'(0)") {
        Distribution d = fourier_of_polynomial(MultiPoly::variable(1, 0));
        CHECK(d.pf.iPow == 1);
        auto p = pair_distribution(d, f, kCfg);
        CHECK(std::abs(p.value) == doctest::Approx(0.0).epsilon(1e-12));  // centered Gaussian
    }
    SUBCASE("x^2 pairs to -f''(0)") {
        MultiPoly x = MultiPoly::variable(1, 0);
        Distribution d = fourier_of_polynomial(x * x);
        auto p = pair_distribution(d, f, kCfg);
        CHECK(p.value.real() == doctest::Approx(1.0).epsilon(1e-12));  // -f''(0) = 1
    }
    SUBCASE("mixed parity is rejected") {
        MultiPoly mixed = MultiPoly::constant(1, Rat(1)) + MultiPoly::variable(1, 0);
        CHECK_THROWS_AS(fourier_of_polynomial(mixed), precondition_error);
    }
}

TEST_CASE("tensor pairing factorizes on product test functions") {
    Distribution D1 = distribution_from_weights(wl(1, {qv({1})}), Prefactor::one());
    Distribution D2 =
        distribution_from_weights(wl(1, {qv({1}), qv({1})}), Prefactor::one());
    Distribution T = tensor(D1, D2);
    auto f2 = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
    auto f1 = TestFunction::gaussian(1, Rat(1), qv({0}), MultiPoly::constant(1, Rat(1)));
    auto pt = pair_distribution(T, f2, kCfg);
    auto pa = pair_distribution(D1, f1, kCfg);
    auto pb = pair_distribution(D2, f1, kCfg);
    double want = pa.value.real() * pb.value.real();
    CHECK(std::abs(pt.value.real() - want) <=
          3 * (pt.err + pa.err * std::abs(pb.value) + pb.err * std::abs(pa.value)) + 1e-9);
}

TEST_CASE("tensor with a transverse delta derivative is rejected") {
    Distribution ddelta;
    ddelta.dim = 1;
    PointTerm t;
    t.c[{1}] = Rat(1);
    ddelta.points.push_back(t);
    Distribution density = distribution_from_weights(wl(1, {qv({1})}), Prefactor::one());
    CHECK_THROWS_AS(tensor(ddelta, density), precondition_error);
}

TEST_CASE("convolution worked examples") {
    SUBCASE("concatenation of weight lists") {
        Distribution A = distribution_from_weights(wl(2, {qv({1, 0})}), Prefactor::one());
        Distribution B = distribution_from_weights(wl(2, {qv({0, 1})}), Prefactor::one());
        Distribution C = convolve(A, B);
        REQUIRE(C.splineTag.has_value());
        CHECK(C.splineTag->count() == 2);
        CHECK(eval_density(C, qv({2, 3})).coeff == Rat(1));
    }
    SUBCASE("delta is the identity") {
        Distribution D = distribution_from_weights(
            wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})}), Prefactor::of(Rat(1), 2, 2));
        Distribution C = convolve(delta0(2), D);
        CHECK(C.pf == D.pf);
        CHECK(eval_density(C, qv({3, 1})).coeff == eval_density(D, qv({3, 1})).coeff);
    }
    SUBCASE("delta derivative differentiates a smooth enough spline") {
        Distribution T111 =
            distribution_from_weights(wl(1, {qv({1}), qv({1}), qv({1})}), Prefactor::one());
        Distribution ddelta;
        ddelta.dim = 1;
        PointTerm t;
        t.c[{1}] = Rat(1);
        ddelta.points.push_back(t);
        Distribution C = convolve(ddelta, T111);
        CHECK(eval_density(C, qv({5})).coeff == Rat(5));  // d/dxi of xi^2/2
        CHECK(eval_density(C, qv({-1})).coeff == Rat(0));
    }
    SUBCASE("derivative convolution refuses a jump") {
        Distribution H = distribution_from_weights(wl(1, {qv({1})}), Prefactor::one());
        Distribution ddelta;
        ddelta.dim = 1;
        PointTerm t;
        t.c[{1}] = Rat(1);
        ddelta.points.push_back(t);
        CHECK_THROWS_WITH_AS(convolve(ddelta, H), doctest::Contains("smoothness"),
                             precondition_error);
    }
    SUBCASE("density * density without spline tags is outside the closed class") {
        Distribution A = distribution_from_weights(wl(1, {qv({1})}), Prefactor::one());
        A.splineTag.reset();
        Distribution B = A;
        CHECK_THROWS_WITH_AS(convolve(A, B), doctest::Contains("closed class"),
                             precondition_error);
    }
    SUBCASE("delta derivative convolution of point terms") {
        Distribution d1;
        d1.dim = 1;
        PointTerm t1;
        t1.c[{1}] = Rat(1);
        d1.points.push_back(t1);
        Distribution C = convolve(d1, d1);
        REQUIRE(C.points.size() == 1);
        CHECK(C.points[0].c.at({2}) == Rat(1));
    }
}

TEST_CASE("pushforward examples and preconditions") {
    Distribution D =
        distribution_from_weights(wl(2, {qv({1, 0}), qv({0, 1})}), Prefactor::one());
    SUBCASE("identity map keeps the distribution") {
        Distribution P = pushforward(D, QMat::identity(2));
        CHECK(eval_density(P, qv({1, 2})).coeff == eval_density(D, qv({1, 2})).coeff);
    }
    SUBCASE("addition map gives the 1-D ramp") {
        QMat p(1, 2);
        p.at(0, 0) = 1;
        p.at(0, 1) = 1;
        Distribution P = pushforward(D, p);
        CHECK(eval_density(P, qv({3})).coeff == Rat(3));
    }
    SUBCASE("a collapsed weight is rejected") {
        QMat p(1, 2);
        p.at(0, 1) = 1;
        Distribution E = distribution_from_weights(wl(2, {qv({1, 0}), qv({1, 1})}),
                                                   Prefactor::one());
        CHECK_THROWS_WITH_AS(pushforward(E, p), doctest::Contains("compactly supported"),
                             precondition_error);
    }
    SUBCASE("point terms always push forward") {
        Distribution d;
        d.dim = 2;
        PointTerm t;
        t.c[{1, 0}] = Rat(1);
        d.points.push_back(t);
        QMat p(1, 2);
        p.at(0, 0) = 2;
        p.at(0, 1) = 3;
        Distribution P = pushforward(d, p);
        REQUIRE(P.points.size() == 1);
        CHECK(P.points[0].c.at({1}) == Rat(2));  // d_x -> 2 d_y
    }
}

TEST_CASE("induction examples") {
    QMat p(1, 2);
    p.at(0, 0) = 1;
    QMat s(2, 1);
    s.at(0, 0) = 1;
    SUBCASE("delta induces fiber Lebesgue") {
        Distribution ind = induce(delta0(1), p, s, false);
        auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
        auto e = pair_distribution(ind, f, kCfg);
        CHECK(std::abs(e.value.real() - std::sqrt(kTwoPi)) <= 3 * e.err + 1e-9);
    }
    SUBCASE("Lebesgue induces Lebesgue") {
        Distribution ind = induce(lebesgue(1), p, s, false);
        auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
        auto e = pair_distribution(ind, f, kCfg);
        CHECK(std::abs(e.value.real() - kTwoPi) <= 3 * e.err + 1e-9);
    }
    SUBCASE("half-plane indicator from the ramp") {
        Distribution ind = induce(distribution_from_weights(wl(1, {qv({1})}), Prefactor::one()),
                                  p, s, false);
        CHECK(eval_density(ind, qv({2, -3})).coeff == Rat(1));
        CHECK(eval_density(ind, qv({-1, 4})).coeff == Rat(0));
    }
    SUBCASE("non-surjective projections are rejected") {
        QMat bad(2, 1);
        bad.at(0, 0) = 1;
        CHECK_THROWS_AS(induce(delta0(2), bad, QMat::identity(1), false), precondition_error);
    }
    SUBCASE("wrong splitting is rejected") {
        QMat notRight(2, 1);
        notRight.at(0, 0) = 2;
        CHECK_THROWS_AS(induce(delta0(1), p, notRight, false), input_error);
    }
}

TEST_CASE("eval_density worked examples and errors") {
    Distribution D = distribution_from_weights(wl(2, {qv({1, 0}), qv({0, 1})}),
                                               Prefactor::of(Rat(1), 2, 2));
    auto v = eval_density(D, qv({1, 1}));
    CHECK(v.coeff == Rat(1));
    CHECK(v.pf == Prefactor::of(Rat(1), 2, 2));
    CHECK(v.value().real() == doctest::Approx(-kTwoPi * kTwoPi));
    CHECK(eval_density(distribution_from_weights(wl(1, {qv({1}), qv({1})}), Prefactor::one()),
                       qv({4}))
              .coeff == Rat(4));
    CHECK_THROWS_AS(eval_density(delta0(1), qv({1})), precondition_error);
    CHECK_THROWS_AS(eval_density(D, qv({0, 1})), precondition_error);
}

TEST_CASE("distribution JSON round trip") {
    Distribution D = distribution_from_weights(
        wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})}), Prefactor::of(Rat(1), 3, 3));
    Json j = distribution_to_json(D);
    Distribution E = distribution_from_json(j);
    CHECK(E.dim == D.dim);
    CHECK(E.pf == D.pf);
    REQUIRE(E.splineTag.has_value());
    CHECK(eval_density(E, qv({2, 1})).coeff == eval_density(D, qv({2, 1})).coeff);

    Distribution P = delta0(2);
    Distribution Q = distribution_from_json(distribution_to_json(P));
    auto f = TestFunction::gaussian(2, Rat(1), qv({0, 0}), MultiPoly::constant(2, Rat(1)));
    CHECK(pair_distribution(Q, f, kCfg).value.real() == doctest::Approx(1.0));
}

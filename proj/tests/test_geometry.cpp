#include "geometry.hpp"

#include <doctest.h>

#include <random>

using namespace infdex;

namespace {
QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}
}  // namespace

TEST_CASE("pointedness on the worked examples") {
    CHECK(pointedness_check({qv({1, 0}), qv({0, 1})}, 2));
    CHECK_FALSE(pointedness_check({qv({1}), qv({-1})}, 1));
    CHECK_FALSE(pointedness_check({qv({1, 0}), qv({0, 1}), qv({-1, -1})}, 2));
    CHECK(pointedness_check({}, 2));                      // empty list: cone {0}
    CHECK_FALSE(pointedness_check({qv({0, 0})}, 2));      // zero vector
}

TEST_CASE("pointedness witness is strictly positive on the weights") {
    std::vector<QVec> X = {qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({2, 1})};
    auto phi = pointedness_witness(X, 2);
    REQUIRE(phi.has_value());
    for (const auto& a : X) CHECK(dot(a, *phi) >= 1);
}

TEST_CASE("wall enumeration") {
    SUBCASE("coordinate quadrant") {
        auto w = enumerate_walls({qv({1, 0}), qv({0, 1})}, 2);
        CHECK(w.size() == 2);
    }
    SUBCASE("repeated one-dimensional weight") {
        auto w = enumerate_walls({qv({1}), qv({1})}, 1);
        REQUIRE(w.size() == 1);
        CHECK(w[0] == qv({1}));
    }
    SUBCASE("three distinct lines") {
        auto w = enumerate_walls({qv({1, 0}), qv({0, 1}), qv({1, 1})}, 2);
        CHECK(w.size() == 3);
    }
    SUBCASE("normals are primitive with positive leading coordinate") {
        auto w = enumerate_walls({qv({2, 4}), qv({3, 0})}, 2);
        for (const auto& n : w) {
            bool leading_pos = false;
            for (const auto& c : n) {
                if (c > 0) {
                    leading_pos = true;
                    break;
                }
                if (c < 0) break;
            }
            CHECK(leading_pos);
        }
    }
}

TEST_CASE("chamber enumeration") {
    SUBCASE("quadrant is a single chamber") {
        auto cc = enumerate_chambers({qv({1, 0}), qv({0, 1})}, 2);
        CHECK(cc.chambers.size() == 1);
    }
    SUBCASE("half-line") {
        auto cc = enumerate_chambers({qv({1}), qv({1})}, 1);
        CHECK(cc.chambers.size() == 1);
    }
    SUBCASE("diagonal splits the quadrant") {
        auto cc = enumerate_chambers({qv({1, 0}), qv({0, 1}), qv({1, 1})}, 2);
        CHECK(cc.chambers.size() == 2);
    }
    SUBCASE("non-pointed input is rejected") {
        CHECK_THROWS_WITH_AS(enumerate_chambers({qv({1}), qv({-1})}, 1),
                             doctest::Contains("unbounded support"), precondition_error);
    }
    SUBCASE("zero weight is rejected by name") {
        CHECK_THROWS_WITH_AS(enumerate_chambers({qv({1, 0}), qv({0, 0})}, 2),
                             doctest::Contains("nonzero-weight"), precondition_error);
    }
}

TEST_CASE("interior points are strict and off every wall") {
    auto cc = enumerate_chambers({qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, 2})}, 2);
    for (const auto& ch : cc.chambers) {
        for (size_t k = 0; k < cc.walls.size(); ++k) {
            int s = rat_sign(dot(cc.walls[k], ch.interior));
            CHECK(s == ch.signs[k]);
            CHECK(s != 0);
        }
    }
}

TEST_CASE("interior point of the ordered chamber matches the worked example") {
    // chamber {xi1 > xi2 > 0} has rays e1 and e1+e2; their sum is (2,1)
    auto cc = enumerate_chambers({qv({1, 0}), qv({0, 1}), qv({1, 1})}, 2);
    bool found = false;
    for (const auto& ch : cc.chambers) {
        if (ch.interior == qv({2, 1})) found = true;
    }
    CHECK(found);
}

TEST_CASE("interior_point rejects a lower-dimensional cone") {
    // a degenerate chamber whose rays all lie on a wall has empty interior
    Chamber flat;
    flat.signs = {1};
    flat.rays = {qv({0, 1})};
    flat.interior = qv({0, 1});
    CHECK_THROWS_WITH_AS(interior_point(flat, {qv({1, 0})}),
                         doctest::Contains("empty interior"), precondition_error);
}

TEST_CASE("chamber simplices partition each chamber") {
    auto cc = enumerate_chambers({qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1}), qv({1, 1, 1})}, 3);
    for (const auto& ch : cc.chambers) {
        for (const auto& sx : ch.simplices) {
            CHECK(sx.size() == 3);
            CHECK(rank(QMat::from_columns(sx)) == 3);
        }
        CHECK(ch.simplices.size() >= 1);
    }
}

TEST_CASE("locate_chamber flags on-wall points") {
    auto cc = enumerate_chambers({qv({1, 0}), qv({0, 1})}, 2);
    CHECK_THROWS_AS(locate_chamber(cc, qv({1, 0})), precondition_error);
    CHECK(locate_chamber(cc, qv({-1, 5})) == -1);
    CHECK(locate_chamber(cc, qv({3, 4})) == 0);
}

TEST_CASE("polynomial interpolation operation examples") {
    SUBCASE("one variable, degree one") {
        std::vector<std::pair<QVec, Rat>> samples = {{qv({0}), Rat(0)}, {qv({1}), Rat(1)}};
        MultiPoly p = poly_interpolate(samples, 1, 1);
        CHECK(p == MultiPoly::variable(1, 0));
    }
    SUBCASE("constant") {
        std::vector<std::pair<QVec, Rat>> samples = {{qv({2}), Rat(5)}};
        MultiPoly p = poly_interpolate(samples, 0, 1);
        CHECK(p == MultiPoly::constant(1, Rat(5)));
    }
    SUBCASE("duplicated nodes are singular") {
        std::vector<std::pair<QVec, Rat>> samples = {{qv({2}), Rat(5)}, {qv({2}), Rat(5)}};
        CHECK_THROWS_AS(poly_interpolate(samples, 1, 1), precondition_error);
    }
}

TEST_CASE("divide_by_linear and vanishing order") {
    // p = (x - y)^2 * (x + 1)
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly diff = x - y;
    MultiPoly p = diff * diff * (x + MultiPoly::constant(2, Rat(1)));
    QVec ell = qv({1, -1});
    CHECK(vanishing_order(p, ell, 5) == 2);
    auto q = divide_by_linear(p, ell);
    REQUIRE(q.has_value());
    CHECK(*q == diff * (x + MultiPoly::constant(2, Rat(1))));
    CHECK_FALSE(divide_by_linear(x + y, ell).has_value());
}

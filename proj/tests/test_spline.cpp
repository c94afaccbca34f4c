#include "spline.hpp"

#include "jsonio.hpp"

#include <doctest.h>

#include <random>

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
}  // namespace

TEST_CASE("recursive evaluation on the worked examples") {
    CHECK(eval_point_recursive(wl(2, {qv({1, 0}), qv({0, 1})}), qv({1, 2})) == Rat(1));
    CHECK(eval_point_recursive(wl(1, {qv({1}), qv({1})}), qv({3})) == Rat(3));
    CHECK(eval_point_recursive(wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})}), qv({2, 1})) ==
          Rat(1));
    CHECK(eval_point_recursive(wl(1, {qv({1}), qv({1})}), qv({-1})) == Rat(0));
}

TEST_CASE("recursive evaluation rejects walls and lines") {
    CHECK_THROWS_WITH_AS(eval_point_recursive(wl(1, {qv({1}), qv({1})}), qv({0})),
                         doctest::Contains("on-wall"), precondition_error);
    CHECK_THROWS_WITH_AS(eval_point_recursive(wl(1, {qv({1}), qv({-1})}), qv({1})),
                         doctest::Contains("pointed"), precondition_error);
}

TEST_CASE("build_spline worked examples") {
    SUBCASE("Heaviside") {
        SplineForm S = build_spline(wl(1, {qv({1})}));
        CHECK(S.cc.chambers.size() == 1);
        CHECK(S.pieces[0] == MultiPoly::constant(1, Rat(1)));
    }
    SUBCASE("T_[1,1] is the identity ramp") {
        SplineForm S = build_spline(wl(1, {qv({1}), qv({1})}));
        REQUIRE(S.cc.chambers.size() == 1);
        CHECK(S.pieces[0] == MultiPoly::variable(1, 0));
    }
    SUBCASE("three weights in the plane give min(xi1, xi2)") {
        SplineForm S = build_spline(wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})}));
        REQUIRE(S.cc.chambers.size() == 2);
        for (size_t i = 0; i < 2; ++i) {
            bool is_x = S.pieces[i] == MultiPoly::variable(2, 0);
            bool is_y = S.pieces[i] == MultiPoly::variable(2, 1);
            CHECK((is_x || is_y));
        }
        CHECK(eval_spline_form(S, qv({5, 2})) == Rat(2));
        CHECK(eval_spline_form(S, qv({-1, 2})) == Rat(0));
        CHECK_THROWS_AS(eval_spline_form(S, qv({3, 3})), precondition_error);
    }
}

TEST_CASE("spline pieces are homogeneous of degree m - rank") {
    for (const auto& X : {wl(1, {qv({1}), qv({1}), qv({1})}),
                          wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, 2})})}) {
        SplineForm S = build_spline(X);
        for (const auto& piece : S.pieces) CHECK(piece.is_homogeneous(S.piece_degree()));
    }
}

TEST_CASE("laplace transform worked examples") {
    CHECK(laplace_transform(build_spline(wl(2, {qv({1, 0}), qv({0, 1})})), qv({1, 2})) ==
          rat(1, 2));
    CHECK(laplace_transform(build_spline(wl(1, {qv({1}), qv({1})})), qv({3})) == rat(1, 9));
    CHECK(laplace_transform(build_spline(wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})})),
                            qv({1, 1})) == rat(1, 2));
}

TEST_CASE("laplace transform rejects non-dual-positive z") {
    SplineForm S = build_spline(wl(2, {qv({1, 0}), qv({0, 1})}));
    CHECK_THROWS_WITH_AS(laplace_transform(S, qv({1, -1})),
                         doctest::Contains("divergent"), precondition_error);
}

TEST_CASE("laplace identity on random dual-positive rational points") {
    std::mt19937_64 rng(7);
    auto rnd = [&](long lo, long hi) {
        return rat(lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)),
                   1 + static_cast<long>(rng() % 7));
    };
    WeightList X = wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1}), qv({1, 2})});
    SplineForm S = build_spline(X);
    int done = 0;
    while (done < 20) {
        QVec z{rnd(1, 9), rnd(1, 9)};
        bool pos = true;
        for (const auto& a : X.weights)
            if (dot(a, z) <= 0) pos = false;
        if (!pos) continue;
        CHECK(laplace_transform(S, z) == laplace_closed_form(X, z));
        ++done;
    }
}

TEST_CASE("non-simplicial 3-D chambers triangulate to an exact partition") {
    // off-center walls leave chambers with four extreme rays; the Laplace
    // identity integrates over the whole triangulation, so any overlap or gap
    // would break exactness
    WeightList X = wl(3, {qv({1, 0, 1}), qv({0, 1, 1}), qv({-1, 0, 1}), qv({0, -1, 1}),
                          qv({1, 1, 3})});
    SplineForm S = build_spline(X);
    size_t maxrays = 0;
    for (const auto& ch : S.cc.chambers) maxrays = std::max(maxrays, ch.rays.size());
    CHECK(maxrays >= 4);
    for (const auto& z : {QVec{Rat(1), Rat(2), Rat(9)}, QVec{rat(1, 2), rat(-1, 3), Rat(4)},
                          QVec{rat(-1, 5), rat(1, 7), Rat(3)}}) {
        CHECK(laplace_transform(S, z) == laplace_closed_form(X, z));
    }
}

TEST_CASE("rank-deficient weight lists use the carrier parametrization") {
    // single weight e1 inside the plane: Heaviside density along its span
    SplineForm S = build_spline(wl(2, {qv({1, 0})}));
    CHECK(S.car.rank == 1);
    CHECK(eval_spline_form(S, qv({3, 0})) == Rat(1));
    CHECK(eval_spline_form(S, qv({3, 1})) == Rat(0));  // off the carrier
    CHECK(laplace_transform(S, qv({2, 1})) == rat(1, 2));
}

TEST_CASE("spline JSON round trip reproduces values exactly") {
    WeightList X = wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})});
    SplineForm S = build_spline(X);
    Json j = spline_to_json(S);
    SplineForm S2 = spline_from_json(j);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 16; ++k) {
        QVec pt{rat(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 5)),
                rat(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 5))};
        bool onwall = false;
        for (const auto& w : S.cc.walls)
            if (dot(w, pt) == 0) onwall = true;
        if (onwall) continue;
        CHECK(eval_spline_form(S, pt) == eval_spline_form(S2, pt));
    }
    // a tampered piece must be rejected
    j["chambers"][0]["poly"] = Json::object({{"0,0", "7"}});
    CHECK_THROWS_AS(spline_from_json(j), input_error);
}

TEST_CASE("wall agreement orders on the catalogued instances") {
    CHECK(wall_agreement_order(build_spline(wl(1, {qv({1}), qv({1})})), 4) == 0);
    CHECK(wall_agreement_order(build_spline(wl(1, {qv({1}), qv({1}), qv({1})})), 4) == 1);
    CHECK(wall_agreement_order(
              build_spline(wl(2, {qv({1, 0}), qv({0, 1}), qv({1, 1})})), 4) == 0);
    // plain Heaviside jumps at the origin
    CHECK(wall_agreement_order(build_spline(wl(1, {qv({1})})), 4) == -1);
}

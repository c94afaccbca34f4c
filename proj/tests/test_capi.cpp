// Exercises the shared-library C surface end to end: handles, status codes,
// the thread-local error message and the JSON wire formats.

#include <infdex/infdex.h>

#include <doctest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {
struct Str {
    char* p = nullptr;
    ~Str() { infdex_string_free(p); }
};
}  // namespace

TEST_CASE("spline build / eval / laplace through the C API") {
    infdex_spline* s = nullptr;
    REQUIRE(infdex_spline_build(R"({"dim":2,"weights":[[1,0],[0,1],[1,1]]})", &s) ==
            INFDEX_OK);
    Str js;
    REQUIRE(infdex_spline_to_json(s, &js.p) == INFDEX_OK);
    auto form = json::parse(js.p);
    CHECK(form["chambers"].size() == 2);

    Str ev;
    REQUIRE(infdex_spline_eval(s, "2,1", &ev.p) == INFDEX_OK);
    CHECK(json::parse(ev.p)["value"] == 1);

    Str lap;
    REQUIRE(infdex_spline_laplace(s, "1,1", &lap.p) == INFDEX_OK);
    auto lj = json::parse(lap.p);
    CHECK(lj["equal"] == true);
    CHECK(lj["value"] == "1/2");

    // re-ingest the exported form
    infdex_spline* s2 = nullptr;
    REQUIRE(infdex_spline_from_json(js.p, &s2) == INFDEX_OK);
    Str ev2;
    REQUIRE(infdex_spline_eval(s2, "5/2,1/3", &ev2.p) == INFDEX_OK);
    CHECK(json::parse(ev2.p)["value"] == "1/3");
    infdex_spline_free(s2);
    infdex_spline_free(s);
}

TEST_CASE("status codes and error messages") {
    infdex_spline* s = nullptr;
    SUBCASE("malformed JSON is invalid input") {
        CHECK(infdex_spline_build("{nope", &s) == INFDEX_ERR_INVALID_INPUT);
        CHECK(std::string(infdex_last_error()).find("JSON") != std::string::npos);
    }
    SUBCASE("zero weight violates the named precondition") {
        CHECK(infdex_spline_build(R"({"dim":1,"weights":[[0]]})", &s) ==
              INFDEX_ERR_PRECONDITION);
        CHECK(std::string(infdex_last_error()).find("nonzero-weight") != std::string::npos);
    }
    SUBCASE("non-pointed lists violate the support precondition") {
        CHECK(infdex_spline_build(R"({"dim":1,"weights":[[1],[-1]]})", &s) ==
              INFDEX_ERR_PRECONDITION);
        CHECK(std::string(infdex_last_error()).find("pointed") != std::string::npos);
    }
    SUBCASE("on-wall evaluation is a precondition error") {
        REQUIRE(infdex_spline_build(R"({"dim":2,"weights":[[1,0],[0,1]]})", &s) == INFDEX_OK);
        Str ev;
        CHECK(infdex_spline_eval(s, "0,1", &ev.p) == INFDEX_ERR_PRECONDITION);
        CHECK(std::string(infdex_last_error()).find("on-wall") != std::string::npos);
        infdex_spline_free(s);
    }
}

TEST_CASE("model index and pairing through the C API") {
    infdex_dist* d = nullptr;
    REQUIRE(infdex_model_index(R"({"model":"point","dim":1})", &d) == INFDEX_OK);
    Str pair;
    REQUIRE(infdex_dist_pair(d, R"({"dim":1,"gaussian":{"sigma":1,"center":[0]}})", 0, 50000,
                             &pair.p) == INFDEX_OK);
    auto pj = json::parse(pair.p);
    CHECK(std::abs(pj["re"].get<double>() - 1.0) < 1e-9);
    infdex_dist_free(d);
}

TEST_CASE("distribution calculus through the C API") {
    infdex_dist *a = nullptr, *b = nullptr, *c = nullptr;
    REQUIRE(infdex_model_index(R"({"model":"linear_torus","dim":2,"weights":[[1,0]]})", &a) ==
            INFDEX_OK);
    REQUIRE(infdex_model_index(R"({"model":"linear_torus","dim":2,"weights":[[0,1]]})", &b) ==
            INFDEX_OK);
    REQUIRE(infdex_dist_convolve(a, b, &c) == INFDEX_OK);
    Str ev;
    REQUIRE(infdex_dist_eval_density(c, "1,1", &ev.p) == INFDEX_OK);
    auto vj = json::parse(ev.p);
    CHECK(vj["coeff"] == 1);
    CHECK(vj["prefactor"]["twoPiPow"] == 2);
    infdex_dist_free(c);

    // pushforward along the addition map
    REQUIRE(infdex_dist_tensor(a, b, &c) == INFDEX_OK);
    infdex_dist* pushed = nullptr;
    REQUIRE(infdex_dist_pushforward(c, R"({"entries":[[1,0,1,0],[0,1,0,1]]})", &pushed) ==
            INFDEX_OK);
    infdex_dist_free(pushed);
    infdex_dist_free(c);

    // induce delta along the first coordinate
    infdex_dist* d0 = nullptr;
    REQUIRE(infdex_model_index(R"({"model":"point","dim":1})", &d0) == INFDEX_OK);
    infdex_dist* ind = nullptr;
    REQUIRE(infdex_dist_induce(d0, R"({"entries":[[1,0]]})", R"({"entries":[[1],[0]]})", 1,
                               &ind) == INFDEX_OK);
    Str js;
    REQUIRE(infdex_dist_to_json(ind, &js.p) == INFDEX_OK);
    CHECK(json::parse(js.p)["prefactor"]["iPow"] == 1);
    infdex_dist_free(ind);
    infdex_dist_free(d0);
    infdex_dist_free(a);
    infdex_dist_free(b);
}

TEST_CASE("finite-s oracle through the C API") {
    Str out;
    REQUIRE(infdex_model_finite_s(R"({"model":"plane_rotation"})",
                                  R"({"dim":1,"bump":{"R":1}})", 0.0, R"({"R0":1})", nullptr, 0,
                                  50000, &out.p) == INFDEX_OK);
    auto j = json::parse(out.p);
    CHECK(j["s"].get<double>() > 0);
    CHECK(std::abs(j["im"].get<double>()) > 1.0);  // 2 pi i times a positive integral
}

TEST_CASE("verify suite through the C API") {
    Str report;
    infdex_status st = infdex_verify("laplace", 0, 20000, 0.01, &report.p);
    CHECK(st == INFDEX_OK);
    auto j = json::parse(report.p);
    CHECK(j["pass"] == true);
    CHECK(infdex_verify("no-such-suite", 0, 1000, 0.01, &report.p) ==
          INFDEX_ERR_INVALID_INPUT);
}

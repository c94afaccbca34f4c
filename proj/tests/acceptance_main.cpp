// Acceptance gate: runs every verification suite once and reports one line
// per acceptance criterion. Exit status is nonzero when any criterion fails.

#include "verify.hpp"

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

using namespace infdex;

namespace {

struct Criterion {
    const char* label;
    // suite name + check-name prefixes that belong to this criterion
    const char* suite;
    std::vector<const char*> prefixes;
};

bool matches(const verify::Check& c, const std::vector<const char*>& prefixes) {
    if (prefixes.empty()) return true;
    for (const char* p : prefixes)
        if (c.name.rfind(p, 0) == 0) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    verify::Options opt;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--seed")) opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
        if (!std::strcmp(argv[i], "--samples"))
            opt.samples = std::strtoull(argv[i + 1], nullptr, 10);
    }

    std::printf("running acceptance suites (seed %llu, %llu samples)...\n",
                static_cast<unsigned long long>(opt.seed),
                static_cast<unsigned long long>(opt.samples));
    auto suites = verify::run_all(opt);

    const std::vector<Criterion> criteria = {
        {"1. closed-form catalog vs hand-coded integrals and finite-s", "oracle",
         {"catalog", "finite-s", "product", "tensor", "diagonal", "oracle runtime"}},
        {"2. exact Laplace identity on six weight lists", "laplace", {}},
        {"3. spline values: identity ramp, min(xi1,xi2), narrow-bump probes", "oracle",
         {"T_[", "narrow"}},
        {"4. stabilization in s (3 sigma; 1e-10 for 1-D quadrature)", "stabilize", {}},
        {"5. cutoff independence across three radii", "cutoff", {}},
        {"6. restriction: pushforward = projected spline, rejections named", "restriction",
         {"restriction"}},
        {"7. convolution: concatenation and pushforward-of-tensor", "restriction",
         {"convolution"}},
        {"8. induction pairing and splitting invariance", "induction", {}},
        {"9. Fourier convention calibration to 1e-6", "oracle", {"fourier"}},
        {"10. invariant suites and total runtime", "invariants", {}},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        int total = 0, passed = 0;
        std::string firstFail;
        for (const auto& s : suites) {
            if (s.name != cr.suite) continue;
            for (const auto& c : s.checks) {
                if (!matches(c, cr.prefixes)) continue;
                ++total;
                if (c.pass)
                    ++passed;
                else if (firstFail.empty())
                    firstFail = c.name + " -- " + c.detail;
            }
        }
        bool ok = total > 0 && passed == total;
        if (!ok) ++failures;
        std::printf("[%s] criterion %s (%d/%d checks)%s%s\n", ok ? "PASS" : "FAIL", cr.label,
                    passed, total, firstFail.empty() ? "" : " first failure: ",
                    firstFail.c_str());
    }

    // overall runtime gate lives in the synthetic "runtime" suite
    for (const auto& s : suites) {
        if (s.name != "runtime") continue;
        for (const auto& c : s.checks) {
            if (!c.pass) ++failures;
            std::printf("[%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                        c.detail.empty() ? "" : " -- ", c.detail.c_str());
        }
    }

    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}

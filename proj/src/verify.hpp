// Verification suites: each suite runs a family of numbered checks with
// pinned tolerances and returns a structured report. The CLI `verify`
// subcommands and the acceptance test binary both drive these.

#ifndef INFDEX_VERIFY_HPP
#define INFDEX_VERIFY_HPP

#include "models.hpp"

#include <string>
#include <vector>

namespace infdex::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    uint64_t seed = 0;
    uint64_t samples = 100000;
    double tol = 0.01;  // scales the absolute noise floor added to 3-sigma bounds
};

Suite run_laplace(const Options& opt);
Suite run_oracle(const Options& opt);
Suite run_stabilize(const Options& opt);
Suite run_cutoff(const Options& opt);
Suite run_restriction(const Options& opt);
Suite run_induction(const Options& opt);
Suite run_invariants(const Options& opt);

std::vector<Suite> run_all(const Options& opt);
/// Dispatch by suite name: laplace|oracle|stabilize|cutoff|restriction|induction|invariants|all.
std::vector<Suite> run_named(const std::string& which, const Options& opt);

}  // namespace infdex::verify

#endif

#pragma once

#include <functional>
#include <string>

namespace permaspin::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool informational = false;  // recorded observation, never a failure
    std::string detail;
};

struct Options {
    bool quick = false;  // restrict enumerations to n <= 4 and shrink grids
};

using Reporter = std::function<void(const CheckResult&)>;

// Runs the cross-validation suite (closed forms vs numerics, trace vs
// brute force, class sums vs restricted oracles, sampler vs exact
// distribution) and reports one line per check. Returns the failure count.
int run_suite(const Options& options, const Reporter& report);

}  // namespace permaspin::verify

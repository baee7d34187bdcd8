#pragma once

// Named verification suites comparing every closed-form count against the
// brute-force oracle and the series identities, with first-counterexample
// reporting.  Shared by the CLI `verify` command and the acceptance tests.

#include <functional>
#include <string>
#include <vector>

#include "toruscount/field.hpp"

namespace toruscount::verify {

struct SuiteResult {
    std::string name;
    bool passed = true;
    i64 checks = 0;
    std::string first_failure;  // "(field, where, expected, got)" of the first mismatch
};

struct Options {
    std::vector<i64> fields = {-1, -3, -7, -8, -11, -15, -20, -23};
    i64 norm_limit = 2000;
    i64 oracle_cap = 4096;
    i64 series_limit = 100000;
    // Test hook: the closed-form primitive count at a rational norm, as used
    // by the exact-count comparisons.  Null means the real implementation.
    std::function<i64(const FieldContext&, i64)> phi_star_at_norm;
};

// moebius-roundtrip, oracle-phi, oracle-phi-star, oracle-u, pair-count,
// euler-factors, series-identities, class-number-formula
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const Options& opt);

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& opt);

}  // namespace toruscount::verify

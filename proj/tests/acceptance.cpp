// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria:
//   1. oracle equivalence for phi, phi*, phi*_u on all ideals of norm <= 2000
//      in the eight test fields (runtime < 2 min)
//   2. Moebius round trip, zero tolerance
//   3. exact-count closed forms vs the pair-count oracle for all
//      C <= 2000 |disc|, zero tolerance
//   4. Euler-factor coefficient identities, p <= 50, depth 10
//   5. series identities at N = 10^5, computed bounds <= 1e-3 (runtime < 1 min)
//   6. summatory asymptotics: relative error < 10% at Y = 10^6 and fitted
//      error exponent <= 0.75 per field (runtime < 3 min)
//   7. analytic class number formula to 1e-6
//   8. infinity-type partition for all X <= 10^4, zero tolerance
//   9. byte-identical CLI reruns

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "toruscount/charcount.hpp"
#include "toruscount/cli.hpp"
#include "toruscount/field.hpp"
#include "toruscount/series.hpp"
#include "toruscount/verify.hpp"

using namespace toruscount;

namespace {

const std::vector<i64> kFields = {-1, -3, -7, -8, -11, -15, -20, -23};

struct Criterion {
    int number = 0;
    std::string label;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Criterion> g_results;

template <typename Fn>
void run_criterion(int number, const std::string& label, double time_budget, Fn&& fn) {
    Criterion c;
    c.number = number;
    c.label = label;
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_budget > 0 && c.seconds > time_budget) {
        c.passed = false;
        c.detail += (c.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%d] %-56s %s (%.1fs)%s%s\n", c.number, c.label.c_str(),
                c.passed ? "PASS" : "FAIL", c.seconds, c.detail.empty() ? "" : "  -- ",
                c.detail.c_str());
    std::fflush(stdout);
    g_results.push_back(c);
}

void from_suites(Criterion& c, const std::vector<std::string>& names,
                 const verify::Options& opt) {
    i64 checks = 0;
    for (const verify::SuiteResult& r : verify::run_suites(names, opt)) {
        checks += r.checks;
        if (!r.passed) {
            c.passed = false;
            c.detail = r.name + ": " + r.first_failure;
            return;
        }
    }
    c.detail = std::to_string(checks) + " checks";
}

}  // namespace

int main() {
    verify::Options opt;
    opt.fields = kFields;
    opt.norm_limit = 2000;
    opt.oracle_cap = 4096;
    opt.series_limit = 100000;

    run_criterion(1, "oracle equivalence: phi / phi* / phi*_u, norms <= 2000", 120,
                  [&](Criterion& c) {
                      from_suites(c, {"oracle-phi", "oracle-phi-star", "oracle-u"}, opt);
                  });

    run_criterion(2, "Moebius round trip on the divisor lattice", 0, [&](Criterion& c) {
        from_suites(c, {"moebius-roundtrip"}, opt);
    });

    run_criterion(3, "exact counts: closed forms vs pair-count oracle", 0,
                  [&](Criterion& c) { from_suites(c, {"pair-count"}, opt); });

    run_criterion(4, "Euler-factor coefficient identities, p <= 50, depth 10", 0,
                  [&](Criterion& c) { from_suites(c, {"euler-factors"}, opt); });

    run_criterion(5, "series identities at N = 10^5 within computed bounds", 60,
                  [&](Criterion& c) { from_suites(c, {"series-identities"}, opt); });

    run_criterion(6, "summatory asymptotics: main term and error exponent", 180,
                  [&](Criterion& c) {
        const std::vector<i64> pinned = {10000, 30000, 100000, 300000, 1000000};
        double worst_rel = 0.0, worst_exp = -10.0, worst_exp5 = -10.0;
        for (i64 d : kFields) {
            FieldContext fc(d);
            // partial sums on the pinned ladder; relative-error gate at 10^6
            auto pinned_rows = series::asymptotic_report(fc, pinned);
            double rel = pinned_rows.back().abs_error / pinned_rows.back().main_term;
            worst_rel = std::max(worst_rel, rel);
            worst_exp5 = std::max(worst_exp5, pinned_rows.back().fitted_exponent);
            if (!(rel < 0.10)) {
                c.passed = false;
                c.detail = "d=" + std::to_string(d) + " relative error " + std::to_string(rel);
                return;
            }
            // exponent fitted on the six-per-decade refinement of the ladder
            auto rows = series::asymptotic_report(fc, series::default_asymptotic_grid(1000000));
            double expo = rows.back().fitted_exponent;
            worst_exp = std::max(worst_exp, expo);
            if (!(expo <= 0.75)) {
                c.passed = false;
                c.detail = "d=" + std::to_string(d) + " fitted exponent " + std::to_string(expo);
                return;
            }
        }
        std::ostringstream info;
        info.precision(3);
        info << "worst rel err " << worst_rel << ", worst exponent " << worst_exp
             << " (5-point ladder fit: " << worst_exp5 << ")";
        c.detail = info.str();
    });

    run_criterion(7, "analytic class number formula to 1e-6", 0, [&](Criterion& c) {
        from_suites(c, {"class-number-formula"}, opt);
    });

    run_criterion(8, "infinity-type partition for all X <= 10^4", 0, [&](Criterion& c) {
        for (i64 d : kFields) {
            FieldContext fc(d);
            i64 q = -fc.disc();
            PhiSieve sieve(fc, 10000 / q + 1);
            for (i64 X = 1; X <= 10000; ++X) {
                i64 total = 0;
                for (i64 k = 0;; ++k) {
                    i64 cinf = infinity_type(k).conductor;
                    if (q * cinf > X) break;
                    total += checked_mul(
                        fc.h(), sieve.unit_class_prefix(X / (q * cinf),
                                                        unit_value_for_infinity_type(fc, k)));
                    if (k > 0)
                        total += checked_mul(
                            fc.h(),
                            sieve.unit_class_prefix(X / (q * cinf),
                                                    unit_value_for_infinity_type(fc, -k)));
                }
                i64 expect = X / q >= 1 ? checked_mul(fc.h(), sieve.pair_count_prefix(X / q)) : 0;
                if (total != expect) {
                    c.passed = false;
                    c.detail = "d=" + std::to_string(d) + " X=" + std::to_string(X) +
                               " partition=" + std::to_string(total) +
                               " summatory=" + std::to_string(expect);
                    return;
                }
            }
            // spot-check the public per-type operation against the prefix route
            for (i64 X : {40LL, 2024LL, 10000LL}) {
                for (i64 k : {0LL, 1LL, -2LL, 3LL}) {
                    i64 cinf = infinity_type(k).conductor;
                    if (q * cinf > X) continue;
                    i64 via_op = count_with_infinity_type(fc, k, X);
                    i64 via_prefix = checked_mul(
                        fc.h(), sieve.unit_class_prefix(X / (q * cinf),
                                                        unit_value_for_infinity_type(fc, k)));
                    if (via_op != via_prefix) {
                        c.passed = false;
                        c.detail = "op/prefix mismatch d=" + std::to_string(d) +
                                   " k=" + std::to_string(k) + " X=" + std::to_string(X);
                        return;
                    }
                }
            }
        }
        c.detail = "8 fields x 10^4 budgets";
    });

    run_criterion(9, "byte-identical CLI reruns", 0, [&](Criterion& c) {
        std::vector<std::vector<std::string>> invocations = {
            {"verify", "--d", "-1", "--d", "-23", "--n-max", "120", "--format", "text"},
            {"verify", "--d", "-3", "--n-max", "80", "--format", "json"},
            {"table", "--d", "-1", "--d", "-3", "--d", "-7", "--d", "-8", "--d", "-11",
             "--d", "-15", "--d", "-20", "--d", "-23", "--n-max", "64", "--format", "csv"},
            {"table", "--d", "-1", "--n-max", "32", "--format", "json"},
        };
        for (const auto& args : invocations) {
            std::ostringstream out1, err1, out2, err2;
            int c1 = cli::run(args, out1, err1);
            int c2 = cli::run(args, out2, err2);
            if (c1 != c2 || out1.str() != out2.str()) {
                c.passed = false;
                c.detail = "non-deterministic output for " + args[0];
                return;
            }
            if (c1 != 0) {
                c.passed = false;
                c.detail = args[0] + " exited " + std::to_string(c1);
                return;
            }
        }
        c.detail = std::to_string(invocations.size()) + " invocations, two runs each";
    });

    int passed = 0;
    for (const Criterion& c : g_results) passed += c.passed;
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", passed,
                static_cast<int>(g_results.size()));
    return passed == static_cast<int>(g_results.size()) ? 0 : 1;
}

#include "toruscount/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "toruscount/charcount.hpp"
#include "toruscount/ideals.hpp"
#include "toruscount/oracle.hpp"
#include "toruscount/series.hpp"

namespace toruscount::verify {

namespace {

std::string ideal_str(const IdealFactored& a) {
    if (a.is_unit_ideal()) return "(1)";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const PrimeBlock& b : a.blocks()) {
        if (!first) os << " ";
        first = false;
        os << b.p;
        if (b.type == PrimeSplitting::Split)
            os << "^(" << b.e << "," << b.ebar << ")";
        else
            os << (b.type == PrimeSplitting::Inert ? "i" : "r") << "^" << b.e;
    }
    os << "]";
    return os.str();
}

struct Reporter {
    SuiteResult result;

    explicit Reporter(std::string name) { result.name = std::move(name); }

    template <typename L, typename R>
    bool expect_eq(const L& expected, const R& got, i64 d, const std::string& where) {
        ++result.checks;
        if (static_cast<i64>(expected) == static_cast<i64>(got)) return true;
        fail_text(d, where, std::to_string(static_cast<i64>(expected)),
                  std::to_string(static_cast<i64>(got)));
        return false;
    }

    bool expect(bool ok, i64 d, const std::string& where, const std::string& detail) {
        ++result.checks;
        if (ok) return true;
        fail_text(d, where, "true", detail);
        return false;
    }

    void fail_text(i64 d, const std::string& where, const std::string& expected,
                   const std::string& got) {
        if (!result.passed) return;
        result.passed = false;
        std::ostringstream os;
        os << "d=" << d << " " << where << " expected=" << expected << " got=" << got;
        result.first_failure = os.str();
    }
};

i64 phi_star_at_norm_impl(const Options& opt, const FieldContext& fc, i64 n) {
    if (opt.phi_star_at_norm) return opt.phi_star_at_norm(fc, n);
    return primitive_char_count_at_norm(fc, n);
}

// Exact-count closed form at conductor n*|disc| with trivial infinity type,
// evaluated through the (hookable) rational primitive count.
i64 exact_count_closed_form(const Options& opt, const FieldContext& fc, i64 n) {
    i64 full = phi_star_at_norm_impl(opt, fc, n);
    if (!fc.is_gaussian() && !fc.is_eisenstein()) return checked_mul(fc.h(), full);
    int w0 = fc.is_gaussian() ? 2 : 3;
    int weight = fc.is_gaussian() ? 1 : 2;
    i64 v = checked_add(full, i64(weight) * sqrt_moebius(n));
    if (v < 0 || v % w0 != 0)
        throw std::logic_error("exact-count closed form is not a non-negative integer at n=" +
                               std::to_string(n));
    return checked_mul(fc.h(), v / w0);
}

i64 euler_phi_int(i64 n) {
    i64 r = n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

SuiteResult suite_moebius_roundtrip(const Options& opt) {
    Reporter rep("moebius-roundtrip");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        for (i64 n = 1; n <= opt.norm_limit && rep.result.passed; ++n) {
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                i64 sum = 0, mu_sum = 0;
                for (const IdealFactored& dv : divisors(a)) {
                    sum = checked_add(sum, primitive_char_count(fc, dv));
                    mu_sum += moebius(dv);
                }
                rep.expect_eq(char_count(fc, a), sum, d, "sum phi*(d) over d|" + ideal_str(a));
                rep.expect_eq(a.is_unit_ideal() ? 1 : 0, mu_sum, d,
                              "sum mu(d) over d|" + ideal_str(a));
            }
        }
    }
    return rep.result;
}

SuiteResult suite_oracle_phi(const Options& opt) {
    Reporter rep("oracle-phi");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        oracle::OracleContext ctx(fc, opt.oracle_cap);
        for (i64 n = 1; n <= opt.norm_limit && rep.result.passed; ++n) {
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                rep.expect_eq(ctx.char_count(a), char_count(fc, a), d,
                              "phi at " + ideal_str(a));
                const oracle::UnitGroupStats& st = ctx.stats(a);
                rep.expect_eq(rational_content(a), st.least_rational, d,
                              "rational content of " + ideal_str(a));
                rep.expect_eq(euler_phi_int(st.least_rational), st.rational_image_order, d,
                              "injectivity of rational units at " + ideal_str(a));
            }
        }
    }
    return rep.result;
}

SuiteResult suite_oracle_phi_star(const Options& opt) {
    Reporter rep("oracle-phi-star");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        oracle::OracleContext ctx(fc, opt.oracle_cap);
        for (i64 n = 1; n <= opt.norm_limit && rep.result.passed; ++n) {
            i64 agg = 0;
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                i64 closed = primitive_char_count(fc, a);
                rep.expect_eq(ctx.primitive_char_count(a), closed, d,
                              "phi* at " + ideal_str(a));
                agg = checked_add(agg, closed);
            }
            rep.expect_eq(agg, phi_star_at_norm_impl(opt, fc, n), d,
                          "phi* aggregate at norm " + std::to_string(n));
        }
    }
    return rep.result;
}

SuiteResult suite_oracle_u(const Options& opt) {
    Reporter rep("oracle-u");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        if (!fc.is_gaussian() && !fc.is_eisenstein()) continue;
        std::vector<UnitValue> values =
            fc.is_gaussian()
                ? std::vector<UnitValue>{UnitValue::PlusOne, UnitValue::MinusOne}
                : std::vector<UnitValue>{UnitValue::PlusOne, UnitValue::Zeta3, UnitValue::Zeta3Conj};
        oracle::OracleContext ctx(fc, opt.oracle_cap);
        for (i64 n = 1; n <= opt.norm_limit && rep.result.passed; ++n) {
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                i64 partition = 0;
                for (UnitValue u : values) {
                    i64 from_oracle = ctx.primitive_char_count(a, u);
                    rep.expect_eq(from_oracle, primitive_char_count(fc, a, u), d,
                                  "phi*_u at " + ideal_str(a));
                    rep.expect(from_oracle >= 0, d, "phi*_u >= 0 at " + ideal_str(a),
                               std::to_string(from_oracle));
                    partition = checked_add(partition, from_oracle);
                }
                rep.expect_eq(primitive_char_count(fc, a), partition, d,
                              "unit-value partition at " + ideal_str(a));
            }
        }
    }
    return rep.result;
}

SuiteResult suite_pair_count(const Options& opt) {
    Reporter rep("pair-count");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        oracle::OracleContext ctx(fc, opt.oracle_cap);
        i64 q = -fc.disc();
        for (i64 C = 1; C <= opt.norm_limit * q && rep.result.passed; ++C) {
            i64 exact_full = count_at_conductor(fc, C, false);
            i64 exact_triv = count_at_conductor(fc, C, true);
            rep.expect_eq(ctx.pair_count(C, false), exact_full, d,
                          "pair count at C=" + std::to_string(C));
            rep.expect_eq(ctx.pair_count(C, true), exact_triv, d,
                          "trivial-infinity pair count at C=" + std::to_string(C));
            if (C % q == 0) {
                i64 n = C / q;
                i64 closed;
                try {
                    closed = exact_count_closed_form(opt, fc, n);
                } catch (const std::logic_error& e) {
                    rep.fail_text(d, "exact-count closed form at n=" + std::to_string(n),
                                  "integer value", e.what());
                    break;
                }
                rep.expect_eq(closed, exact_triv, d,
                              "exact-count closed form at n=" + std::to_string(n));
            }
        }
    }
    return rep.result;
}

SuiteResult suite_euler_factors(const Options& opt) {
    Reporter rep("euler-factors");
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    bool seen[3] = {false, false, false};
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        for (int p : primes) {
            seen[static_cast<int>(splitting_type(fc, p))] = true;
            rep.expect(series::check_euler_factor(fc, p, 2.0, 10), d,
                       "euler factor at p=" + std::to_string(p), "coefficient mismatch");
        }
    }
    rep.expect(seen[0] && seen[1] && seen[2], 0, "splitting-type coverage", "incomplete");
    return rep.result;
}

SuiteResult suite_series_identities(const Options& opt) {
    Reporter rep("series-identities");
    auto check = [&](i64 d, const std::string& what, const series::ResidualCheck& rc,
                     bool tight) {
        std::ostringstream os;
        os << "residual=" << rc.residual << " bound=" << rc.combined_bound;
        rep.expect(rc.within_bound(), d, what + " within bound", os.str());
        if (tight)
            rep.expect(rc.combined_bound <= 1e-3, d, what + " bound <= 1e-3", os.str());
    };
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        check(d, "L(s,phi*) s=2", series::primitive_series_check(fc, 2.0, opt.series_limit), true);
        check(d, "L(s,phi*) s=3", series::primitive_series_check(fc, 3.0, opt.series_limit), true);
        check(d, "L(s,Phi) s=2", series::pair_count_series_check(fc, 2.0, opt.series_limit), true);
        check(d, "primitive-ideal zeta identity s=2",
              series::primitive_ideal_series_check(fc, 2.0, opt.series_limit), false);
        check(d, "primitive-ideal zeta identity s=3",
              series::primitive_ideal_series_check(fc, 3.0, opt.series_limit), false);
    }
    return rep.result;
}

SuiteResult suite_class_number_formula(const Options& opt) {
    Reporter rep("class-number-formula");
    for (i64 d : opt.fields) {
        FieldContext fc(d);
        series::SeriesValue L = series::dirichlet_l(fc.disc(), 1.0, 1e-7);
        double lhs = static_cast<double>(fc.h()) / fc.w();
        double rhs = std::sqrt(static_cast<double>(-fc.disc())) / (2.0 * std::numbers::pi) * L.value;
        std::ostringstream os;
        os << "h/w=" << lhs << " formula=" << rhs;
        rep.expect(std::abs(lhs - rhs) < 1e-6, d, "analytic class number formula", os.str());
    }
    return rep.result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "moebius-roundtrip", "oracle-phi", "oracle-phi-star",      "oracle-u",
        "pair-count",        "euler-factors", "series-identities", "class-number-formula"};
    return names;
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
    if (name == "moebius-roundtrip") return suite_moebius_roundtrip(opt);
    if (name == "oracle-phi") return suite_oracle_phi(opt);
    if (name == "oracle-phi-star") return suite_oracle_phi_star(opt);
    if (name == "oracle-u") return suite_oracle_u(opt);
    if (name == "pair-count") return suite_pair_count(opt);
    if (name == "euler-factors") return suite_euler_factors(opt);
    if (name == "series-identities") return suite_series_identities(opt);
    if (name == "class-number-formula") return suite_class_number_formula(opt);
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& opt) {
    std::vector<SuiteResult> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(run_suite(n, opt));
    return out;
}

}  // namespace toruscount::verify

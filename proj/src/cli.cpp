#include "toruscount/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "toruscount/charcount.hpp"
#include "toruscount/field.hpp"
#include "toruscount/series.hpp"
#include "toruscount/verify.hpp"

namespace toruscount::cli {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// One output document: named columns plus rows of preformatted cells.
struct Document {
    json config;  // effective configuration, reproduced in meta
    std::vector<std::string> columns;
    std::vector<json> rows;

    void emit(const std::string& format, std::ostream& os) const {
        if (format == "json") {
            json doc;
            doc["meta"] = {{"config", config}, {"version", kVersion}};
            doc["rows"] = rows;
            os << doc.dump(2) << "\n";
        } else if (format == "csv") {
            for (size_t i = 0; i < columns.size(); ++i)
                os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
            for (const json& row : rows) {
                for (size_t i = 0; i < columns.size(); ++i) {
                    const json& cell = row.at(columns[i]);
                    if (cell.is_string())
                        os << cell.get<std::string>();
                    else
                        os << cell.dump();
                    os << (i + 1 < columns.size() ? "," : "\n");
                }
            }
        } else {
            for (size_t i = 0; i < columns.size(); ++i)
                os << columns[i] << (i + 1 < columns.size() ? "\t" : "\n");
            for (const json& row : rows) {
                for (size_t i = 0; i < columns.size(); ++i) {
                    const json& cell = row.at(columns[i]);
                    if (cell.is_string())
                        os << cell.get<std::string>();
                    else
                        os << cell.dump();
                    os << (i + 1 < columns.size() ? "\t" : "\n");
                }
            }
        }
    }
};

struct CommonOpts {
    std::vector<i64> d_values;
    std::string format = "text";
    std::string out_path;
};

int write_out(const Document& doc, const CommonOpts& common, std::ostream& out,
              std::ostream& err) {
    if (common.out_path.empty()) {
        doc.emit(common.format, out);
        return 0;
    }
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file " << common.out_path << "\n";
        return 1;
    }
    doc.emit(common.format, f);
    return 0;
}

int cmd_table(const CommonOpts& common, i64 n_max, std::ostream& out, std::ostream& err) {
    Document doc;
    doc.config = {{"command", "table"},
                  {"d", common.d_values},
                  {"n_max", n_max},
                  {"format", common.format}};
    doc.columns = {"d", "disc", "n", "C", "pair_count", "trivial_pair_count", "exact_count"};
    for (i64 d : common.d_values) {
        FieldContext fc(d);
        for (i64 n = 1; n <= n_max; ++n) {
            i64 C = checked_mul(n, -fc.disc());
            doc.rows.push_back({{"d", fc.d()},
                                {"disc", fc.disc()},
                                {"n", n},
                                {"C", C},
                                {"pair_count", conductor_pair_count(fc, n)},
                                {"trivial_pair_count", trivial_infinity_pair_count(fc, n)},
                                {"exact_count", count_at_conductor(fc, C, true)}});
        }
    }
    return write_out(doc, common, out, err);
}

int cmd_verify(const CommonOpts& common, const verify::Options& opt,
               std::vector<std::string> suites, std::ostream& out, std::ostream& err) {
    if (suites.empty()) suites = verify::suite_names();
    for (const std::string& s : suites) {
        if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) ==
            verify::suite_names().end())
            throw CLI::ValidationError("--suite", "unknown suite: " + s);
    }
    Document doc;
    doc.config = {{"command", "verify"},
                  {"d", opt.fields},
                  {"n_max", opt.norm_limit},
                  {"oracle_cap", opt.oracle_cap},
                  {"suites", suites},
                  {"format", common.format}};
    doc.columns = {"suite", "status", "checks", "first_failure"};
    bool all_passed = true;
    for (const verify::SuiteResult& r : verify::run_suites(suites, opt)) {
        all_passed = all_passed && r.passed;
        doc.rows.push_back({{"suite", r.name},
                            {"status", r.passed ? "PASS" : "FAIL"},
                            {"checks", r.checks},
                            {"first_failure", r.first_failure}});
    }
    int rc = write_out(doc, common, out, err);
    if (rc != 0) return rc;
    return all_passed ? 0 : 1;
}

int cmd_asymptotics(const CommonOpts& common, i64 x_max, std::ostream& out, std::ostream& err) {
    Document doc;
    doc.config = {{"command", "asymptotics"},
                  {"d", common.d_values},
                  {"x_max", x_max},
                  {"format", common.format}};
    doc.columns = {"d", "cutoff", "partial_sum", "main_term", "abs_error",
                   "fitted_exponent", "flagged"};
    bool flagged_any = false;
    for (i64 d : common.d_values) {
        FieldContext fc(d);
        i64 y_max = x_max / -fc.disc();
        std::vector<i64> grid = series::default_asymptotic_grid(y_max);
        for (const series::AsymptoticReport& r : series::asymptotic_report(fc, grid)) {
            bool flagged = r.fitted_exponent > 0.75;
            flagged_any = flagged_any || flagged;
            doc.rows.push_back({{"d", fc.d()},
                                {"cutoff", r.cutoff},
                                {"partial_sum", r.partial_sum},
                                {"main_term", fmt_double(r.main_term)},
                                {"abs_error", fmt_double(r.abs_error)},
                                {"fitted_exponent", fmt_double(r.fitted_exponent)},
                                {"flagged", flagged ? "yes" : "no"}});
        }
    }
    int rc = write_out(doc, common, out, err);
    if (rc != 0) return rc;
    return flagged_any ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counts of automorphic forms on norm-one tori of imaginary "
                 "quadratic fields, ordered by analytic conductor"};
    app.name("toruscount");
    app.set_config("--config", "", "configuration file with key=value lines; flags win");

    CommonOpts common;
    i64 n_max = 20;
    i64 x_max = 4000000;
    verify::Options vopt;
    std::vector<std::string> suites;

    auto add_common = [&](CLI::App* cmd, bool d_required) {
        cmd->set_config("--config", "", "configuration file with key=value lines; flags win");
        auto* dopt = cmd->add_option("--d", common.d_values,
                                     "field label: squarefree d < 0, or a fundamental "
                                     "discriminant such as -8 or -20");
        if (d_required) dopt->required();
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"csv", "json", "text"}))
            ->capture_default_str();
        cmd->add_option("--out", common.out_path, "write output to a file instead of stdout");
    };

    CLI::App* table = app.add_subcommand("table", "per-conductor exact counts");
    add_common(table, true);
    table->add_option("--n-max", n_max, "largest n = C/|disc| to list")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "closed-form vs oracle suites");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--n-max", vopt.norm_limit, "largest ideal norm / conductor index")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--oracle-cap", vopt.oracle_cap, "quotient-ring size cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--suite", suites, "suite selection (repeatable; default all)");

    CLI::App* asym = app.add_subcommand("asymptotics", "summatory counts vs main term");
    add_common(asym, true);
    asym->add_option("--x-max", x_max, "largest analytic conductor")
        ->check(CLI::Range(i64(1), i64(10000000)))
        ->capture_default_str();

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(common, n_max, out, err);
        if (verify_cmd->parsed()) {
            if (!common.d_values.empty()) vopt.fields = common.d_values;
            return cmd_verify(common, vopt, suites, out, err);
        }
        if (asym->parsed()) return cmd_asymptotics(common, x_max, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace toruscount::cli

#pragma once

#include <cstdint>
#include <exception>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secant/degree.hpp"
#include "secant/grr.hpp"
#include "secant/porteous.hpp"
#include "secant/verify.hpp"

namespace secant::cli {

/// Stable process exit codes.
enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_failure = 2 };

enum class Command { degree, table, verify };
enum class MethodChoice { cofactor, recurrence, closed_form, all };
enum class Format { text, json, csv };

struct CliConfig {
    Command command = Command::degree;
    std::optional<int> d;
    std::optional<int> d_min;
    std::optional<int> d_max;
    MethodChoice method = MethodChoice::all;
    Format format = Format::text;
    bool verbose = false;
    /// Test-only: forwarded to VerifyOptions::perturb_c2.
    bool inject_fault = false;
};

/// Outcome of argument parsing that ends the run early (help or usage error).
struct EarlyExit {
    int code;
};

using ordered_json = nlohmann::ordered_json;

inline std::vector<PorteousMethod> selected_methods(MethodChoice m)
{
    switch (m) {
    case MethodChoice::cofactor: return {PorteousMethod::cofactor_determinant};
    case MethodChoice::recurrence: return {PorteousMethod::recurrence};
    case MethodChoice::closed_form: return {PorteousMethod::closed_form};
    case MethodChoice::all: break;
    }
    return {std::begin(all_porteous_methods), std::end(all_porteous_methods)};
}

inline std::string method_name(MethodChoice m)
{
    switch (m) {
    case MethodChoice::cofactor: return "cofactor";
    case MethodChoice::recurrence: return "recurrence";
    case MethodChoice::closed_form: return "closed-form";
    case MethodChoice::all: return "all";
    }
    return "all";
}

/// Checks the cross-field invariants CLI11 cannot express; empty when valid.
inline std::string validate(const CliConfig& c)
{
    switch (c.command) {
    case Command::degree:
        if (!c.d)
            return "degree requires --d";
        if (*c.d < 8)
            return "--d " + std::to_string(*c.d) +
                   ": the computation needs d >= 8 (for d = 6, 7 the third secant variety fills P^(d-2))";
        break;
    case Command::table:
    case Command::verify: {
        const int lo = c.d_min.value_or(8);
        const int hi = c.d_max.value_or(c.command == Command::verify ? 40 : lo);
        if (c.command == Command::table && (!c.d_min || !c.d_max))
            return "table requires --d-min and --d-max";
        if (lo < 8)
            return "--d-min " + std::to_string(lo) + ": all curve degrees must be >= 8";
        if (lo > hi)
            return "empty range: --d-min " + std::to_string(lo) + " exceeds --d-max " + std::to_string(hi);
        break;
    }
    }
    return {};
}

/// Parses argv into a config, or reports help/usage on err and returns the
/// exit code to use.
inline std::variant<CliConfig, EarlyExit> parse_args(int argc, const char* const* argv, std::ostream& out,
                                                     std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Degree of the third secant variety of a genus-2 curve of degree d >= 8, "
                 "computed by exact intersection theory"};
    app.require_subcommand(1, 1);

    const std::map<std::string, MethodChoice> methods{{"cofactor", MethodChoice::cofactor},
                                                      {"recurrence", MethodChoice::recurrence},
                                                      {"closed-form", MethodChoice::closed_form},
                                                      {"all", MethodChoice::all}};
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    auto* degree = app.add_subcommand("degree", "Compute deg Sec_3(C) for one curve degree");
    degree->add_option("--d", cfg.d, "Degree of the curve (>= 8)")->required();
    degree->add_option("--method", cfg.method, "Porteous evaluation: cofactor, recurrence, closed-form or all")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    add_format(degree);
    degree->add_flag("-v,--verbose", cfg.verbose, "Also print every intermediate class");

    auto* table = app.add_subcommand("table", "Tabulate the degree over a range of d");
    table->add_option("--d-min", cfg.d_min, "Smallest d (>= 8)")->required();
    table->add_option("--d-max", cfg.d_max, "Largest d")->required();
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Run every cross-check of the pipeline");
    verify->add_option("--d-min", cfg.d_min, "Smallest d (default 8)");
    verify->add_option("--d-max", cfg.d_max, "Largest d (default 40)");
    add_format(verify);
    verify->add_flag("-v,--verbose", cfg.verbose, "Report passing checks as well");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb c_2 (self-test of the checks)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return EarlyExit{exit_ok};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return EarlyExit{exit_usage};
    }

    if (*degree)
        cfg.command = Command::degree;
    else if (*table)
        cfg.command = Command::table;
    else
        cfg.command = Command::verify;

    if (const std::string problem = validate(cfg); !problem.empty()) {
        err << "usage error: " << problem << "\n";
        return EarlyExit{exit_usage};
    }
    return cfg;
}

// ----------------------------------------------------------------------------
// degree

inline int run_degree(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (const std::string problem = validate(cfg); !problem.empty()) {
        err << "usage error: " << problem << "\n";
        return exit_usage;
    }
    const int d = *cfg.d;
    std::vector<std::pair<std::string, std::int64_t>> degrees;
    std::vector<std::pair<std::string, std::string>> intermediates;
    std::int64_t oracle = 0;
    try {
        oracle = berzolari(d, curve_genus);
        for (PorteousMethod m : selected_methods(cfg.method)) {
            const PorteousResult r = porteous_class(d, m);
            degrees.emplace_back(std::string(to_string(m)), degree_of_class(r));
            if (cfg.verbose && intermediates.empty()) {
                const BundleCharacters b = compute_bundle_characters(d);
                intermediates.emplace_back("ch(H)", b.h_bundle.chern_character.to_string());
                intermediates.emplace_back("ch(G)", b.g_bundle.chern_character.to_string());
                const std::vector<AmbientClass> c = chern_classes_divided(d);
                for (int i = 1; i <= d - 5; ++i)
                    intermediates.emplace_back("c_" + std::to_string(i), c[static_cast<std::size_t>(i)].to_string());
                intermediates.emplace_back("D_" + std::to_string(d - 5), r.x1.to_string());
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }

    bool agree = true;
    for (const auto& [name, value] : degrees)
        agree = agree && value == degrees.front().second && value == oracle;
    const std::int64_t degree = degrees.front().second;

    switch (cfg.format) {
    case Format::text:
        if (cfg.verbose) {
            for (const auto& [name, value] : intermediates)
                out << name << " = " << value << "\n";
            for (const auto& [name, value] : degrees)
                out << "degree[" << name << "] = " << value << "\n";
            out << "degree[berzolari] = " << oracle << "\n";
        }
        out << degree << "\n";
        break;
    case Format::json: {
        ordered_json j;
        j["d"] = d;
        j["degree"] = degree;
        j["method"] = method_name(cfg.method);
        ordered_json per_method = ordered_json::object();
        for (const auto& [name, value] : degrees)
            per_method[name] = value;
        j["degrees"] = per_method;
        j["degree_berzolari"] = oracle;
        j["methods_agree"] = agree;
        if (cfg.verbose) {
            ordered_json inter = ordered_json::object();
            for (const auto& [name, value] : intermediates)
                inter[name] = value;
            j["intermediates"] = inter;
        }
        out << j.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "d,degree,method,degree_berzolari,methods_agree\n";
        out << d << "," << degree << "," << method_name(cfg.method) << "," << oracle << ","
            << (agree ? "true" : "false") << "\n";
        break;
    }
    if (!agree) {
        err << "error: degree computations disagree for d = " << d << "\n";
        return exit_failure;
    }
    return exit_ok;
}

// ----------------------------------------------------------------------------
// table

inline int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (const std::string problem = validate(cfg); !problem.empty()) {
        err << "usage error: " << problem << "\n";
        return exit_usage;
    }
    std::vector<DegreeReport> rows;
    try {
        for (int d = *cfg.d_min; d <= *cfg.d_max; ++d)
            rows.push_back(degree_report(d));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }

    switch (cfg.format) {
    case Format::csv:
        out << "d,degree_porteous,degree_closed_form,degree_berzolari,match\n";
        for (const auto& r : rows)
            out << r.d << "," << r.degree_porteous << "," << r.degree_closed_form << "," << r.degree_berzolari << ","
                << (r.methods_agree ? "true" : "false") << "\n";
        break;
    case Format::json: {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["d"] = r.d;
            j["degree_porteous"] = r.degree_porteous;
            j["degree_closed_form"] = r.degree_closed_form;
            j["degree_berzolari"] = r.degree_berzolari;
            j["match"] = r.methods_agree;
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        break;
    }
    case Format::text:
        out << std::setw(5) << "d" << std::setw(18) << "degree_porteous" << std::setw(20) << "degree_closed_form"
            << std::setw(18) << "degree_berzolari" << std::setw(7) << "match" << "\n";
        for (const auto& r : rows)
            out << std::setw(5) << r.d << std::setw(18) << r.degree_porteous << std::setw(20) << r.degree_closed_form
                << std::setw(18) << r.degree_berzolari << std::setw(7) << (r.methods_agree ? "true" : "false")
                << "\n";
        break;
    }
    for (const auto& r : rows)
        if (!r.methods_agree) {
            err << "error: degree computations disagree for d = " << r.d << "\n";
            return exit_failure;
        }
    return exit_ok;
}

// ----------------------------------------------------------------------------
// verify

inline int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (const std::string problem = validate(cfg); !problem.empty()) {
        err << "usage error: " << problem << "\n";
        return exit_usage;
    }
    VerifyOptions opt;
    opt.d_min = cfg.d_min.value_or(8);
    opt.d_max = cfg.d_max.value_or(40);
    opt.perturb_c2 = cfg.inject_fault;

    VerifyReport report;
    try {
        report = run_verification(opt);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }

    switch (cfg.format) {
    case Format::text: {
        int passed = 0;
        for (const auto& c : report.checks) {
            passed += c.passed ? 1 : 0;
            if (c.passed) {
                out << "PASS  " << c.name << "\n";
                continue;
            }
            out << "FAIL  " << c.name;
            if (c.counterexample) {
                const auto& ce = *c.counterexample;
                out << "  [";
                if (ce.d != 0)
                    out << "d=" << ce.d << "; ";
                out << "expected " << ce.expected << "; actual " << ce.actual << "]";
            }
            out << "\n";
        }
        out << "verify d in [" << report.d_min << ", " << report.d_max << "]: " << passed << "/"
            << report.checks.size() << " checks passed\n";
        break;
    }
    case Format::json: {
        ordered_json j;
        j["d_min"] = report.d_min;
        j["d_max"] = report.d_max;
        j["passed"] = report.passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["passed"] = c.passed;
            if (c.counterexample) {
                cj["counterexample"] = {{"d", c.counterexample->d},
                                        {"expected", c.counterexample->expected},
                                        {"actual", c.counterexample->actual}};
            }
            checks.push_back(std::move(cj));
        }
        j["checks"] = checks;
        out << j.dump() << "\n";
        break;
    }
    case Format::csv:
        out << "check,passed,d,expected,actual\n";
        for (const auto& c : report.checks) {
            out << '"' << c.name << "\"," << (c.passed ? "true" : "false");
            if (c.counterexample)
                out << "," << c.counterexample->d << ",\"" << c.counterexample->expected << "\",\""
                    << c.counterexample->actual << '"';
            else
                out << ",,,";
            out << "\n";
        }
        break;
    }
    if (!report.passed()) {
        for (const auto& c : report.checks)
            if (!c.passed) {
                err << "verification failed: " << c.name << "\n";
                break;
            }
        return exit_failure;
    }
    return exit_ok;
}

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    switch (cfg.command) {
    case Command::degree: return run_degree(cfg, out, err);
    case Command::table: return run_table(cfg, out, err);
    case Command::verify: return run_verify(cfg, out, err);
    }
    return exit_usage;
}

/// Full entry point: parse argv, dispatch, return the exit code.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    auto parsed = parse_args(argc, argv, out, err);
    if (const auto* early = std::get_if<EarlyExit>(&parsed))
        return early->code;
    return run(std::get<CliConfig>(parsed), out, err);
}

} // namespace secant::cli

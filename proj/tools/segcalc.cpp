// Command-line front end: exact Segre-type class computations for unions of
// hypersurfaces in projective space, plus the formal-series consistency
// suites. Exit codes: 0 all checks pass (warnings allowed), 1 a check failed,
// 2 configuration or parse error.
#include <CLI11.hpp>

#include <segcalc/segcalc.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace segcalc;

json table_to_json(const ApproxTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back(json{{"r", row.r},
                            {"approximation", class_to_json(row.approximation)},
                            {"repeated_class", class_to_json(row.repeated_class)},
                            {"stabilized", row.stabilized}});
    return json{{"ambient", 5}, {"rows", rows}, {"limit", class_to_json(table.limit)}};
}

int run_approx_table(int n, const std::string& format) {
    if (n != 5) throw error("no resolving model available");
    ApproxTable table = approx_table_p5();

    if (format == "json") {
        std::cout << table_to_json(table).dump(2) << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "r,approximation,repeated_class,stabilized\n";
        for (const auto& row : table.rows)
            std::cout << row.r << "," << row.approximation.render() << ","
                      << row.repeated_class.render() << "," << (row.stabilized ? "yes" : "no")
                      << "\n";
        return 0;
    }

    std::cout << "successive approximations of s(Y, P^5), Y a smooth quadric surface,\n"
              << "X a hyperplane through Y\n\n";
    std::cout << "r  stabilized  approximation\n";
    for (const auto& row : table.rows)
        std::cout << row.r << "  " << (row.stabilized ? "*         " : "          ") << "  "
                  << row.approximation.render() << "\n";
    std::cout << "\nlimit s(Y, P^5) = " << table.limit.render() << "\n";
    std::cout << "\nrepeated-component classes s(Y; X^(r)):\n";
    for (const auto& row : table.rows)
        std::cout << row.r << "  " << row.repeated_class.render() << "\n";
    return 0;
}

const char* status_of(const CheckResult& c) {
    return c.pass ? (c.warning ? "WARN" : "PASS") : "FAIL";
}

int run_lines(int count, YMode mode, const std::string& format) {
    LinesReport rep = lines_report(count, mode);

    if (format == "json") {
        json checks = json::array();
        for (const CheckResult& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"status", status_of(c)}, {"detail", c.detail}});
        json out{{"count", rep.count},
                 {"y", mode == YMode::point ? "point" : "empty"},
                 {"union_class", class_to_json(rep.union_class)},
                 {"csm_inclusion_exclusion", class_to_json(rep.csm_incl_excl)},
                 {"csm_resolving_model", class_to_json(rep.csm_relsm)},
                 {"chi", rational_to_json(rep.chi)},
                 {"reference_agrees", rep.reference_agrees},
                 {"checks", checks},
                 {"notes", rep.notes}};
        if (rep.reference) out["reference"] = class_to_json(*rep.reference);
        std::cout << out.dump(2) << "\n";
        return all_passed(rep.checks) ? 0 : 1;
    }

    std::cout << rep.count << " distinct lines through a point of P^3, Y = "
              << (mode == YMode::point ? "the point" : "empty") << "\n";
    std::cout << "union class:          " << rep.union_class.render() << "\n";
    std::cout << "c_SM (incl-excl):     " << rep.csm_incl_excl.render() << "\n";
    std::cout << "c_SM (resolving):     " << rep.csm_relsm.render() << "\n";
    std::cout << "Euler characteristic: " << rational_str(rep.chi) << "\n";
    for (const CheckResult& c : rep.checks) {
        std::cout << status_of(c) << "  " << c.name << "\n";
        if (!c.pass || c.warning)
            if (!c.detail.empty()) std::cout << "      " << c.detail << "\n";
    }
    for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
    return all_passed(rep.checks) ? 0 : 1;
}

int run_verify(const std::string& suite, std::optional<unsigned> truncation) {
    std::vector<CheckResult> checks;
    auto append = [&](std::vector<CheckResult> more) {
        checks.insert(checks.end(), std::make_move_iterator(more.begin()),
                      std::make_move_iterator(more.end()));
    };
    if (suite == "identities" || suite == "all") append(verify_identities(truncation));
    if (suite == "incexc" || suite == "all") append(verify_incexc());
    if (suite == "relsm" || suite == "all") append(verify_relsm());
    if (suite == "recursion" || suite == "all") append(verify_recursion());

    int failed = 0;
    int warned = 0;
    for (const CheckResult& c : checks) {
        std::cout << status_of(c) << "  " << c.name << "\n";
        if (!c.pass) {
            ++failed;
            if (!c.detail.empty()) std::cout << "      " << c.detail << "\n";
        } else if (c.warning) {
            ++warned;
            if (!c.detail.empty()) std::cout << "      " << c.detail << "\n";
        }
    }
    std::cout << checks.size() << " checks, " << failed << " failed, " << warned
              << " warnings\n";
    return failed == 0 ? 0 : 1;
}

int run_scenario_file(const std::string& path, const std::string& format,
                      std::optional<unsigned> truncation) {
    std::ifstream in(path);
    if (!in) throw error("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw error("invalid scenario file: " + std::string(e.what()));
    }
    ScenarioResult res = run_scenario(j, truncation);
    if (format == "json")
        std::cout << res.to_json().dump(2) << "\n";
    else
        std::cout << res.to_text();
    return res.failed() ? 1 : 0;
}

int run_euler(int n, int d, int rmax) {
    if (n < 1 || d < 1 || rmax < 1) throw error("invalid degree");
    std::vector<Rational> chi = euler_sequence(n, d, rmax);
    std::cout << "chi of a smooth hypersurface of degree r*" << d << " in P^" << n << "\n";
    for (int r = 1; r <= rmax; ++r)
        std::cout << "r=" << r << "  degree=" << r * d << "  chi="
                  << rational_str(chi[static_cast<std::size_t>(r - 1)]) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Segre and Chern-Schwartz-MacPherson classes of hypersurface unions"};
    app.require_subcommand(1);

    std::optional<unsigned> truncation;
    app.add_option("--truncation", truncation,
                   "order for the formal defect series (identities checks only)");

    auto* table_cmd = app.add_subcommand(
        "approx-table", "successive approximations of s(Y, P^5) for the quadric surface");
    int table_n = 5;
    table_cmd->add_option("--n", table_n, "ambient dimension (only 5 has a built-in model)");
    std::string table_format = "text";
    table_cmd->add_option("--format", table_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* lines_cmd =
        app.add_subcommand("lines", "m distinct lines through a point of P^3, on the tower model");
    int lines_count = 0;
    lines_cmd->add_option("--count", lines_count, "number of lines")
        ->required()
        ->check(CLI::Range(1, 12));
    std::string lines_y = "point";
    lines_cmd->add_option("--y", lines_y, "distinguished subscheme: point or empty")
        ->check(CLI::IsMember({"point", "empty"}));
    std::string lines_format = "text";
    lines_cmd->add_option("--format", lines_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "identities, incexc, relsm, recursion, or all")
        ->required()
        ->check(CLI::IsMember({"identities", "incexc", "relsm", "recursion", "all"}));

    auto* scenario_cmd = app.add_subcommand("scenario", "scenario files");
    scenario_cmd->require_subcommand(1);
    auto* scenario_run = scenario_cmd->add_subcommand("run", "execute one scenario JSON file");
    std::string scenario_path;
    scenario_run->add_option("file", scenario_path, "scenario JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    std::string scenario_format = "text";
    scenario_run->add_option("--format", scenario_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* euler_cmd =
        app.add_subcommand("euler", "Euler characteristics of smooth sections of powers of O(d)");
    int euler_n = 0;
    int euler_d = 0;
    int euler_rmax = 0;
    euler_cmd->add_option("--n", euler_n, "ambient dimension")->required();
    euler_cmd->add_option("--d", euler_d, "base degree")->required();
    euler_cmd->add_option("--rmax", euler_rmax, "largest power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (table_cmd->parsed()) return run_approx_table(table_n, table_format);
        if (lines_cmd->parsed())
            return run_lines(lines_count, lines_y == "point" ? YMode::point : YMode::empty,
                             lines_format);
        if (verify_cmd->parsed()) return run_verify(suite, truncation);
        if (scenario_cmd->parsed())
            return run_scenario_file(scenario_path, scenario_format, truncation);
        if (euler_cmd->parsed()) return run_euler(euler_n, euler_d, euler_rmax);
    } catch (const segcalc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

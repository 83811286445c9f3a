#include "cfem/cli.hpp"

#include "cfem/analysis.hpp"
#include "cfem/error.hpp"
#include "cfem/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

namespace cfem::cli {

namespace {

struct ProblemArgs {
    std::string name;
    std::optional<double> k1_pi;
    std::optional<double> k2_pi;
    std::optional<double> k1;
    std::optional<double> k2;
    double x_l = kCatalogDomain.lo;
    double x_r = kCatalogDomain.hi;
};

struct StudyConfig {
    ProblemArgs problem;
    std::string method = "compact";
    std::vector<std::size_t> levels;
    std::size_t norm_points = 7;
    std::size_t norm_subdivisions = 4;
    std::size_t assembly_points = 5;
    bool full_h1 = false;
    std::string format = "csv";
    std::string out_path;
};

struct SolveConfig {
    ProblemArgs problem;
    std::string method = "compact";
    std::size_t n = 32;
    std::size_t samples = 101;
    std::size_t assembly_points = 5;
    std::string out_path;
};

void add_problem_options(CLI::App& cmd, ProblemArgs& p) {
    cmd.add_option("--problem", p.name, "Catalog problem: poisson | variable")->required();
    auto* k1_pi = cmd.add_option("--k1-pi", p.k1_pi, "First wave number as a multiple of pi");
    auto* k2_pi = cmd.add_option("--k2-pi", p.k2_pi, "Second wave number as a multiple of pi (variable only)");
    auto* k1 = cmd.add_option("--k1", p.k1, "First wave number, raw value");
    auto* k2 = cmd.add_option("--k2", p.k2, "Second wave number, raw value");
    k1_pi->excludes(k1);
    k2_pi->excludes(k2);
    cmd.add_option("--xl", p.x_l, "Left end of the domain")->capture_default_str();
    cmd.add_option("--xr", p.x_r, "Right end of the domain")->capture_default_str();
}

double wave_number(const std::optional<double>& multiple_of_pi, const std::optional<double>& raw) {
    if (multiple_of_pi) return *multiple_of_pi * std::numbers::pi;
    if (raw) return *raw;
    return 0.0;
}

ProblemSpec build_problem(const ProblemArgs& p) {
    const Interval domain{p.x_l, p.x_r};
    const double k1 = wave_number(p.k1_pi, p.k1);
    const double k2 = wave_number(p.k2_pi, p.k2);
    if (p.name == "poisson") {
        if (p.k2_pi || p.k2) {
            throw InvalidArgument("poisson takes a single wave number (--k1-pi or --k1)");
        }
        if (!p.k1_pi && !p.k1) {
            throw InvalidArgument("poisson needs --k1-pi or --k1");
        }
        return catalog::poisson(k1, domain);
    }
    if (p.name == "variable") {
        if (!p.k1_pi && !p.k1 && !p.k2_pi && !p.k2) {
            throw InvalidArgument("variable needs --k1-pi/--k1 and optionally --k2-pi/--k2");
        }
        return catalog::variable(k1, k2, domain);
    }
    throw InvalidArgument("unknown problem '" + p.name + "' (run `list` for the catalog)");
}

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InvalidArgument("cannot open output file '" + path + "'");
    }
    file << text;
    if (!file) {
        throw InvalidArgument("failed writing output file '" + path + "'");
    }
}

int cmd_study(const StudyConfig& cfg, std::ostream& out) {
    if (cfg.format != "csv" && cfg.format != "md") {
        throw InvalidArgument("unknown format '" + cfg.format + "' (expected csv or md)");
    }
    if (cfg.levels.empty()) {
        throw InvalidArgument("--levels must not be empty");
    }
    const Method method = parse_method(cfg.method);
    const ProblemSpec problem = build_problem(cfg.problem);

    StudyOptions options;
    options.solve.assembly_points = cfg.assembly_points;
    options.norm.points = cfg.norm_points;
    options.norm.subdivisions = cfg.norm_subdivisions;
    options.norm.full_h1 = cfg.full_h1;
    if (cfg.norm_points < 1 || cfg.norm_points > kMaxGaussPoints || cfg.assembly_points < 1 ||
        cfg.assembly_points > kMaxGaussPoints) {
        throw InvalidArgument("quadrature orders must lie in 1.." + std::to_string(kMaxGaussPoints));
    }

    const RefinementReport report = refinement_study(problem, method, cfg.levels, options);
    const std::string text = cfg.format == "csv" ? to_csv(report) : to_markdown(report);
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text);
    }
    out << text;
    return kExitOk;
}

int cmd_solve(const SolveConfig& cfg, std::ostream& out) {
    if (cfg.samples < 2) {
        throw InvalidArgument("--samples must be at least 2");
    }
    const Method method = parse_method(cfg.method);
    const ProblemSpec problem = build_problem(cfg.problem);
    SolveOptions options;
    options.assembly_points = cfg.assembly_points;
    const DiscreteSolution sol = solve(problem, cfg.n, method, options);

    std::string text = "x,uh,duh,u,du\n";
    const Interval d = problem.domain;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        const double x = i + 1 == cfg.samples
                             ? d.hi
                             : d.lo + d.length() * static_cast<double>(i) / static_cast<double>(cfg.samples - 1);
        const ValueSlope uh = sol.evaluate(x);
        text += shortest(x) + ',' + shortest(uh.value) + ',' + shortest(uh.slope) + ',';
        if (problem.exact) {
            text += shortest((*problem.exact)(x)) + ',';
            text += problem.exact->derivative() ? shortest((*problem.exact->derivative())(x)) : std::string();
        } else {
            text += ',';
        }
        text += '\n';
    }
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        write_file(cfg.out_path, text);
    }
    return kExitOk;
}

int cmd_list(std::ostream& out) {
    out << "Catalog problems (default domain [0, 2], Dirichlet data from the exact solution):\n"
           "\n"
           "poisson   -u'' = f, u = sin(k x), beta = 1, q = 0\n"
           "          parameters: --k1-pi K (k = K*pi) or --k1 k\n"
           "          reference studies: --k1-pi 5  --levels 8,16,...,1024\n"
           "                             --k1-pi 50 --levels 64,128,...,4096\n"
           "variable  -(e^x u')' + x^2 u = f, u = sin(k1 x) cos(k2 x)\n"
           "          parameters: --k1-pi K1 --k2-pi K2 (or raw --k1/--k2)\n"
           "          reference studies: --k1-pi 5  --k2-pi 0  --levels 8,16,...,1024\n"
           "                             --k1-pi 50 --k2-pi 0  --levels 64,128,...,4096\n"
           "                             --k1-pi 5  --k2-pi 5  --levels 8,16,...,1024\n"
           "                             --k1-pi 50 --k2-pi 50 --levels 128,256,...,8192\n"
           "\n"
           "Methods: p1 (classical), posterior (constant beta and q = 0 only), compact\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"1D Sturm-Liouville finite element solver and refinement studies", "cfem"};
    app.require_subcommand(1);

    StudyConfig study;
    auto* study_cmd = app.add_subcommand("study", "Run a grid-refinement study and print the error table");
    add_problem_options(*study_cmd, study.problem);
    study_cmd->add_option("--method", study.method, "p1 | posterior | compact")->capture_default_str();
    study_cmd->add_option("--levels", study.levels, "Comma-separated element counts, strictly increasing")
        ->required()
        ->delimiter(',');
    study_cmd->add_option("--norm-points", study.norm_points, "Gauss points per norm sub-interval")
        ->capture_default_str();
    study_cmd->add_option("--norm-subdivisions", study.norm_subdivisions, "Norm sub-intervals per element")
        ->capture_default_str();
    study_cmd->add_option("--assembly-points", study.assembly_points, "Gauss points per element for assembly")
        ->capture_default_str();
    study_cmd->add_flag("--full-h1", study.full_h1, "Report the full H1 norm instead of the seminorm");
    study_cmd->add_option("--format", study.format, "csv | md")->capture_default_str();
    study_cmd->add_option("--out", study.out_path, "Also write the table to this file");

    SolveConfig solve_cfg;
    auto* solve_cmd = app.add_subcommand("solve", "Solve once and sample the discrete solution as CSV");
    add_problem_options(*solve_cmd, solve_cfg.problem);
    solve_cmd->add_option("--method", solve_cfg.method, "p1 | posterior | compact")->capture_default_str();
    solve_cmd->add_option("-n,--n", solve_cfg.n, "Number of elements")->capture_default_str();
    solve_cmd->add_option("--samples", solve_cfg.samples, "Uniform sample points")->capture_default_str();
    solve_cmd->add_option("--assembly-points", solve_cfg.assembly_points, "Gauss points per element")
        ->capture_default_str();
    solve_cmd->add_option("--out", solve_cfg.out_path, "Write samples here instead of standard output");

    auto* list_cmd = app.add_subcommand("list", "List catalog problems");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (study_cmd->parsed()) return cmd_study(study, out);
        if (solve_cmd->parsed()) return cmd_solve(solve_cfg, out);
        if (list_cmd->parsed()) return cmd_list(out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace cfem::cli

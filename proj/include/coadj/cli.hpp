#pragma once

// Command-line front end. `run_command` takes the arguments after the program
// name and writes the document to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource budget exceeded.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coadj/serialize.hpp"

namespace coadj::cli {

enum ExitCode : int { Ok = 0, VerifyFailed = 1, BadInput = 2, OverBudget = 3 };

struct Options {
    std::string command;
    std::string problem_path;
    std::string format = "text";
    std::uint64_t seed = 0;
    int trials = 100;
    int max_degree = 4;
    double budget = 200000;
    std::optional<int> max_size;
    bool strict = false;
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"diagram",       "permutation", "invariants", "verify",
                                                "extremal-scan", "orbit-stats", "oracle"};
    return names;
}

inline std::string read_problem_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

inline std::string join(const std::vector<Root>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out + "]";
}

inline void print_grid(std::ostream& out, const std::vector<std::string>& grid) {
    for (const auto& line : grid) out << line << '\n';
}

inline int cmd_diagram(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    const Diagram d = build_diagram(ideal);
    if (o.format == "json") {
        out << Json(d).dump(2) << '\n';
        return Ok;
    }
    print_grid(out, render_grid(d));
    const auto c = diagram_counts(d);
    out << "S = " << join(d.crosses()) << '\n';
    out << "crosses=" << c.crosses << " plus_minus=" << c.plus_minus() << " bullets=" << c.bullets << '\n';
    for (int m = 0; m <= d.steps(); ++m) {
        out << "\nstep " << m << ":\n";
        print_grid(out, render_grid(d, m));
    }
    return Ok;
}

inline int cmd_permutation(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    const Diagram d = build_diagram(ideal);
    const Permutation w = build_w(ideal);
    const Permutation product = WFamily(ideal.n(), d.crosses()).full();
    const bool agrees = product == w;
    const int length = inversions(w);
    if (o.format == "json") {
        out << Json{{"w", w},
                    {"length", length},
                    {"dim", ideal.quotient_dim()},
                    {"crosses", d.crosses()},
                    {"reflection_product", product},
                    {"reflection_product_agrees", agrees}}
                   .dump(2)
            << '\n';
    } else {
        out << "w = " << to_string(w) << '\n';
        out << "l(w) = " << length << ", dim L = " << ideal.quotient_dim() << '\n';
        out << "S = " << join(d.crosses()) << '\n';
        out << "reflection product = " << to_string(product) << (agrees ? " (agrees)" : " (DIFFERS)") << '\n';
    }
    return agrees && length == ideal.quotient_dim() ? Ok : VerifyFailed;
}

inline int cmd_invariants(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    const auto records = all_invariants(ideal);
    if (o.format == "json") {
        out << Json(records).dump(2) << '\n';
        return Ok;
    }
    for (const auto& r : records) {
        out << "xi=" << to_string(r.xi) << " case " << static_cast<int>(r.cross_case) << " h=" << r.h
            << " rows=" << join(r.rows) << " cols=" << join(r.cols) << " degree=" << r.degree;
        if (r.d_star) out << " d_star=" << *r.d_star;
        out << " extremal=" << (r.extremal ? "yes" : "no") << '\n';
        out << "  P = " << to_string(r.p) << '\n';
    }
    return Ok;
}

inline int cmd_verify(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    ReportOptions opt;
    opt.seed = o.seed;
    opt.trials = o.trials;
    opt.max_degree = o.max_degree;
    opt.budget = o.budget;
    const auto report = full_report(ideal, opt);
    if (o.format == "json") {
        out << Json(report).dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << to_string(c.status) << ' ' << c.name;
            if (!c.detail.empty()) out << "  " << c.detail;
            if (c.witness) out << "  witness: " << *c.witness;
            out << '\n';
        }
        out << (report.passed() ? "all checks passed" : "verification FAILED") << '\n';
    }
    return report.passed() ? Ok : VerifyFailed;
}

inline int cmd_extremal_scan(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    const int max_size = o.max_size.value_or(ideal.n());
    if (max_size < 1 || max_size > ideal.n()) throw InputError("--max-size must lie in [1, n]");
    const auto entries = enumerate_extremal(ideal, max_size, o.budget);
    if (o.format == "json") {
        out << Json(entries).dump(2) << '\n';
        return Ok;
    }
    int extremal = 0;
    for (const auto& e : entries) {
        out << "rows=" << join(e.spec.rows) << " cols=" << join(e.spec.cols) << " degree=" << e.degree
            << (e.extremal ? " extremal" : "") << '\n';
        extremal += e.extremal ? 1 : 0;
    }
    out << entries.size() << " nonzero minors, " << extremal << " extremal\n";
    return Ok;
}

inline int cmd_orbit_stats(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    const auto s = skew_rank_stats(ideal, o.trials, o.seed);
    if (o.format == "json") {
        out << Json(s).dump(2) << '\n';
        return Ok;
    }
    out << "dim L = " << s.dim << "\nmax rank = " << s.max_rank << "\ncorank = " << s.corank
        << "\nsamples = " << s.samples << '\n';
    return Ok;
}

inline int cmd_oracle(const RegularIdeal& ideal, const Options& o, std::ostream& out) {
    if (o.max_degree < 1) throw InputError("--max-degree must be >= 1");
    const auto basis = oracle_invariants(ideal, o.max_degree, o.budget);
    if (o.format == "json") {
        out << Json(basis).dump(2) << '\n';
        return Ok;
    }
    out << "invariants of degree 1.." << basis.max_degree << ": dimension " << basis.basis.size() << '\n';
    for (const auto& p : basis.basis) out << "  " << to_string(p) << '\n';
    return Ok;
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Coadjoint invariants of regular factors of the unitriangular Lie algebra", "coadj"};
    app.add_option("command", o.command, "diagram | permutation | invariants | verify | extremal-scan | orbit-stats | oracle")
        ->required();
    app.add_option("problem", o.problem_path, "problem file ('-' reads stdin)")->required();
    auto* format = app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    auto* seed = app.add_option("--seed", o.seed, "random seed");
    auto* trials = app.add_option("--trials", o.trials, "random trials")->check(CLI::PositiveNumber);
    auto* max_degree = app.add_option("--max-degree", o.max_degree, "oracle degree bound")->check(CLI::PositiveNumber);
    auto* budget = app.add_option("--budget", o.budget, "work budget for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--max-size", o.max_size, "largest minor size for extremal-scan");
    app.add_flag("--strict", o.strict, "reject generators that are not closed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    }

    try {
        const auto& names = subcommands();
        if (std::find(names.begin(), names.end(), o.command) == names.end())
            throw InputError("unknown subcommand '" + o.command + "'");
        const ProblemSpec problem = parse_problem(read_problem_text(o.problem_path));
        // Command-line flags take precedence over options stored in the file.
        if (problem.options.format && !format->count()) o.format = *problem.options.format;
        if (o.format != "text" && o.format != "json") throw InputError("format must be text or json");
        if (problem.options.seed && !seed->count()) o.seed = *problem.options.seed;
        if (problem.options.trials && !trials->count()) o.trials = *problem.options.trials;
        if (problem.options.max_degree && !max_degree->count()) o.max_degree = *problem.options.max_degree;
        if (problem.options.budget && !budget->count()) o.budget = *problem.options.budget;
        if (o.trials < 1) throw InputError("trials must be >= 1");

        const RegularIdeal ideal = problem.ideal(o.strict);
        if (o.command == "diagram") return detail::cmd_diagram(ideal, o, out);
        if (o.command == "permutation") return detail::cmd_permutation(ideal, o, out);
        if (o.command == "invariants") return detail::cmd_invariants(ideal, o, out);
        if (o.command == "verify") return detail::cmd_verify(ideal, o, out);
        if (o.command == "extremal-scan") return detail::cmd_extremal_scan(ideal, o, out);
        if (o.command == "orbit-stats") return detail::cmd_orbit_stats(ideal, o, out);
        return detail::cmd_oracle(ideal, o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return OverBudget;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return VerifyFailed;
    }
}

}  // namespace coadj::cli

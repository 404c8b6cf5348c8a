// Command-line front end: analyze graph files against the alpha-state
// entanglement criteria, generate graph files for the standard families, and
// run the bundled regression fixtures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aalpha/criteria.hpp"
#include "aalpha/fixtures.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/report.hpp"
#include "aalpha/state.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitInvalidState = 3;

struct SweepSpec {
    double start = 0.01;
    double end = 1.0;
    std::size_t count = 100;
};

std::optional<SweepSpec> parse_sweep(const std::string& text) {
    SweepSpec s;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%zu%c", &s.start, &s.end, &s.count, &extra) != 3) {
        return std::nullopt;
    }
    return s;
}

int run_analyze(const std::string& path, const std::optional<double>& alpha,
                const std::optional<std::string>& sweep_text, std::optional<std::size_t> d1,
                std::optional<std::size_t> d2, const std::string& format, double tol,
                bool refine) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitParseError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    try {
        aalpha::Graph g = aalpha::parse_graph(buf.str());
        if (d1 || d2) {
            if (!d1 || !d2) {
                std::cerr << "error: --d1 and --d2 must be given together\n";
                return kExitInvalidState;
            }
            g = g.with_partition(*d1, *d2);
        }

        std::vector<double> grid;
        if (alpha && sweep_text) {
            std::cerr << "error: give either --alpha or --sweep, not both\n";
            return kExitInvalidState;
        }
        if (alpha) {
            grid = {*alpha};
        } else {
            SweepSpec spec;
            if (sweep_text) {
                const auto parsed = parse_sweep(*sweep_text);
                if (!parsed) {
                    std::cerr << "error: --sweep expects start:end:count\n";
                    return kExitInvalidState;
                }
                spec = *parsed;
            }
            grid = aalpha::make_grid(spec.start, spec.end, spec.count);
        }

        const aalpha::json doc = aalpha::analysis_report(path, g, grid, tol, refine);
        if (format == "json") {
            std::cout << doc.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << aalpha::report_to_csv(doc);
        } else {
            std::cout << aalpha::report_to_text(doc);
        }
        return 0;
    } catch (const aalpha::ParseError& e) {
        std::cerr << "parse error in " << path << ": " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    }
}

int run_generate(const std::string& family, std::size_t n, std::size_t d1, std::size_t d2,
                 std::uint64_t seed, const std::string& out_path) {
    const auto kind = aalpha::family_from_name(family);
    if (!kind) {
        std::cerr << "error: unknown family '" << family
                  << "' (expected complete, path, cycle or random)\n";
        return 1;
    }
    try {
        const aalpha::Graph g = aalpha::generate_family({*kind, n, seed}, d1, d2);
        const std::string text = aalpha::serialize_graph(g);
        if (out_path == "-") {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 1;
            }
            out << text;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_fixture_suite(const std::optional<std::string>& only) {
    bool all_passed = true;
    for (const std::string& name : aalpha::fixtures::fixture_names()) {
        if (only && *only != name) continue;
        const aalpha::fixtures::FixtureResult r = aalpha::fixtures::run_fixture(name);
        std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "\n";
        for (const std::string& f : r.failures) std::cout << "      " << f << "\n";
        all_passed = all_passed && r.passed;
    }
    if (only) {
        bool known = false;
        for (const std::string& name : aalpha::fixtures::fixture_names()) known |= name == *only;
        if (!known) {
            std::cerr << "error: unknown fixture '" << *only << "'\n";
            return 1;
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-mixed graph states: validity intervals, transpose moments, "
                 "and entanglement criteria"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "analyze a graph file over one alpha or a sweep");
    std::string file;
    std::optional<double> alpha;
    std::optional<std::string> sweep_text;
    std::optional<std::size_t> d1, d2;
    std::string format = "text";
    double tol = aalpha::kPsdTol;
    bool refine = false;
    analyze->add_option("file", file, "graph file")->required();
    analyze->add_option("--alpha", alpha, "single mixing parameter in (0,1]");
    analyze->add_option("--sweep", sweep_text, "alpha grid start:end:count (default 0.01:1.0:100)");
    analyze->add_option("--d1", d1, "override bipartition rows");
    analyze->add_option("--d2", d2, "override bipartition columns");
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    analyze->add_option("--tol", tol, "positive-semidefinite tolerance (default 1e-9)");
    analyze->add_flag("--refine", refine, "bisect interval boundaries to 1e-4");

    auto* generate = app.add_subcommand("generate", "write a graph file for a standard family");
    std::string family;
    std::size_t gen_n = 0, gen_d1 = 0, gen_d2 = 0;
    std::uint64_t seed = 0;
    std::string out_path = "-";
    generate->add_option("family", family, "complete|path|cycle|random")->required();
    generate->add_option("n", gen_n, "vertex count")->required();
    generate->add_option("d1", gen_d1, "bipartition rows")->required();
    generate->add_option("d2", gen_d2, "bipartition columns")->required();
    generate->add_option("--seed", seed, "seed for the random family");
    generate->add_option("--out", out_path, "output path ('-' for stdout)");

    auto* examples = app.add_subcommand("paper-examples", "run the bundled regression fixtures");
    std::optional<std::string> only;
    examples->add_option("--only", only, "run a single fixture by name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (analyze->parsed()) return run_analyze(file, alpha, sweep_text, d1, d2, format, tol, refine);
    if (generate->parsed()) return run_generate(family, gen_n, gen_d1, gen_d2, seed, out_path);
    return run_fixture_suite(only);
}

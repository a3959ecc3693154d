#pragma once

// Command-line driver. Exit codes: 0 success, 1 condition not met or empty
// result, 2 usage or input error, 3 a Violation was found.

#include <rainbowtri/extremal.hpp>
#include <rainbowtri/harness.hpp>
#include <rainbowtri/io.hpp>
#include <rainbowtri/reductions.hpp>
#include <rainbowtri/theorems.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace rainbowtri::cli {

enum ExitCode : int { success = 0, not_met = 1, usage_error = 2, violation_found = 3 };

namespace detail {
    inline AnyGraph read_graph(const std::string & path, std::istream & in)
    {
        if (path == "-")
            return parse(in);
        std::ifstream file(path);
        if (! file)
            throw std::runtime_error("cannot open " + path);
        return parse(file);
    }

    inline void print_triangle(std::ostream & out, const Triangle & t)
    {
        out << t[0] << ' ' << t[1] << ' ' << t[2];
    }

    inline void print_verdict(std::ostream & out, const TheoremVerdict & v)
    {
        out << "theorem " << to_string(v.theorem) << '\n';
        out << "condition " << (v.condition_met ? "met" : "not-met") << '\n';
        out << "conclusion " << to_string(v.conclusion) << '\n';
        if (v.witness.triangle) {
            out << "witness ";
            print_triangle(out, *v.witness.triangle);
            out << '\n';
        }
        if (v.witness.bipartition) {
            out << "bipartition";
            for (auto x : v.witness.bipartition->left)
                out << ' ' << x;
            out << " |";
            for (auto y : v.witness.bipartition->right)
                out << ' ' << y;
            out << '\n';
        }
        if (! v.witness.instance.empty())
            out << "instance\n" << v.witness.instance;
    }

    inline int exit_code_for(const TheoremVerdict & v)
    {
        if (! v.condition_met)
            return not_met;
        if (v.conclusion == Conclusion::Violation)
            return violation_found;
        return success;
    }

    inline TheoremId theorem_argument(const std::string & s)
    {
        auto t = theorem_from_string(s);
        if (! t)
            throw CLI::ValidationError("theorem", "unknown theorem '" + s + "' (t1 t2 cor1 t3 t4 t5 t6 ch)");
        return *t;
    }
} // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Rainbow and directed triangle toolkit", "rainbowtri"};
    app.require_subcommand(1);

    std::string theorem_name, path, family_name, tie_break = "low-high";
    std::size_t n = 0, n_max = 0;
    std::uint64_t samples = 0, seed = 0;
    std::optional<std::uint64_t> generator_seed;
    unsigned threads = 1;
    bool exhaustive = false, large = false, records = false, reduce_first = false;

    auto * check_cmd = app.add_subcommand("check", "Evaluate one theorem on a graph file");
    check_cmd->add_option("theorem", theorem_name, "t1 t2 cor1 t3 t4 t5 t6 ch")->required();
    check_cmd->add_option("file", path, "Graph file, - for stdin")->required();

    auto * find_cmd = app.add_subcommand("find", "List rainbow (ecg) or directed (dig) triangles");
    find_cmd->add_option("file", path, "Graph file, - for stdin")->required();

    auto * reduce_cmd = app.add_subcommand("reduce", "Color-degree preserving edge reduction of an ecg file");
    reduce_cmd->add_option("file", path, "Graph file, - for stdin")->required();

    auto * orient_cmd = app.add_subcommand("orient", "Orient a reduced ecg file");
    orient_cmd->add_option("file", path, "Graph file, - for stdin")->required();
    orient_cmd->add_flag("--reduce", reduce_first, "Reduce the graph first");
    orient_cmd->add_option("--tie-break", tie_break, "Direction when both ends qualify")
        ->check(CLI::IsMember({"low-high", "high-low"}));

    auto * assoc_cmd = app.add_subcommand("assoc", "Associated colored graph of a dig file");
    assoc_cmd->add_option("file", path, "Graph file, - for stdin")->required();

    auto * generate_cmd = app.add_subcommand("generate", "Write an extremal construction");
    generate_cmd
        ->add_option("family", family_name, "sharp-complete rainbow-bipartite oriented-bipartite k4-exception k4-minus-edge")
        ->required();
    generate_cmd->add_option("n", n, "Vertex count")->required();
    generate_cmd->add_option("--seed", generator_seed, "Random orientation (oriented-bipartite)");

    auto * verify_cmd = app.add_subcommand("verify", "Check a theorem over many instances");
    verify_cmd->add_option("theorem", theorem_name, "t1 t2 cor1 t3 t4 t5 t6 ch")->required();
    verify_cmd->add_option("--n", n, "Vertex count")->required();
    auto * exhaustive_flag = verify_cmd->add_flag("--exhaustive", exhaustive, "Every labeled instance (default)");
    auto * samples_opt = verify_cmd->add_option("--samples", samples, "Random instances instead");
    verify_cmd->add_option("--seed", seed, "Seed for --samples");
    exhaustive_flag->excludes(samples_opt);
    verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--large", large, "Allow exhaustive n = 6 for oriented graphs");
    verify_cmd->add_flag("--records", records, "Line-delimited JSON instead of text");

    auto * ch_cmd = app.add_subcommand("ch-search", "Exhaustive search against the n/3 in-degree conjecture");
    ch_cmd->add_option("--n-max", n_max, "Largest vertex count")->required();
    ch_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    ch_cmd->add_flag("--large", large, "Allow n = 6");
    ch_cmd->add_flag("--records", records, "Line-delimited JSON instead of text");

    std::vector<std::string> storage{"rainbowtri"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto & s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp & e) {
        app.exit(e, out, err);
        return success;
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (check_cmd->parsed()) {
            auto theorem = detail::theorem_argument(theorem_name);
            auto graph = detail::read_graph(path, in);
            auto verdict = std::visit([&](const auto & g) { return check(theorem, g); }, graph);
            detail::print_verdict(out, verdict);
            return detail::exit_code_for(verdict);
        }

        if (find_cmd->parsed()) {
            auto graph = detail::read_graph(path, in);
            bool colored = std::holds_alternative<ColoredGraph>(graph);
            auto found = colored ? enumerate_rainbow_triangles(std::get<ColoredGraph>(graph))
                                 : enumerate_directed_triangles(std::get<OrientedGraph>(graph));
            out << (colored ? "rainbow" : "directed") << " triangles " << found.size() << '\n';
            for (const auto & t : found) {
                detail::print_triangle(out, t);
                out << '\n';
            }
            return found.empty() ? not_met : success;
        }

        if (reduce_cmd->parsed() || orient_cmd->parsed()) {
            auto graph = detail::read_graph(path, in);
            if (! std::holds_alternative<ColoredGraph>(graph))
                throw std::invalid_argument("expected an ecg file");
            const auto & g = std::get<ColoredGraph>(graph);
            if (reduce_cmd->parsed()) {
                out << serialize(color_degree_preserving_reduction(g));
                return success;
            }
            TieBreak rule = lower_to_higher;
            if (tie_break == "high-low")
                rule = [](Vertex u, Vertex v) { return Arc{v, u}; };
            auto result = orient(reduce_first ? color_degree_preserving_reduction(g) : g, rule);
            out << serialize(result.digraph);
            return success;
        }

        if (assoc_cmd->parsed()) {
            auto graph = detail::read_graph(path, in);
            if (! std::holds_alternative<OrientedGraph>(graph))
                throw std::invalid_argument("expected a dig file");
            auto assoc = associated_colored_graph(std::get<OrientedGraph>(graph));
            out << serialize(assoc.graph);
            for (const auto & [color, origin] : assoc.color_origin)
                out << "# color " << color << " tail " << origin.tail << " component " << origin.component << '\n';
            return success;
        }

        if (generate_cmd->parsed()) {
            auto family = family_from_string(family_name);
            if (! family)
                throw std::invalid_argument("unknown family '" + family_name + "'");
            out << serialize(generate({*family, n, generator_seed}));
            return success;
        }

        if (verify_cmd->parsed()) {
            auto theorem = detail::theorem_argument(theorem_name);
            EnumerationSpec spec;
            spec.n = n;
            spec.threads = threads;
            bool colored = is_colored_theorem(theorem);
            if (samples_opt->count() > 0) {
                spec.kind = colored ? EnumerationKind::RandomColored : EnumerationKind::RandomOriented;
                spec.sample_count = samples;
                spec.seed = seed;
            }
            else
                spec.kind = colored ? EnumerationKind::AllColoredGraphs : EnumerationKind::AllOrientedGraphs;
            auto report = verify(spec, theorem, EnumerationLimits::from_environment(large));
            out << (records ? to_records(report) : to_text(report));
            return report.violations() > 0 ? violation_found : success;
        }

        if (ch_cmd->parsed()) {
            auto report = search_ch_counterexample(n_max, EnumerationLimits::from_environment(large), threads);
            out << (records ? to_records(report) : to_text(report));
            return report.violations() > 0 ? violation_found : success;
        }
    }
    catch (const CLI::ValidationError & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace rainbowtri::cli

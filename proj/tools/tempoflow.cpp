// Command-line front end: maxflow | cten | verify | normalize | gen | stats.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "tempoflow/cli.hpp"

int main(int argc, char** argv)
{
    using tempoflow::cli::RunConfig;
    using tempoflow::cli::Subcommand;

    RunConfig cfg;
    CLI::App app{"Maximum flow over time on temporal networks via condensed time-expanded networks"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json, "Machine-readable JSON output, including errors");

    std::string input;
    tempoflow::TimeStep horizon = 0;
    std::size_t budget = 0;

    auto with_network = [&](CLI::App* sub) {
        sub->add_option("input", input, "Network file in the canonical JSON format")->required();
        sub->add_option("--horizon,-T", horizon, "Time horizon T")->required();
        sub->add_option("--budget", budget, "TEN node budget (overrides TEMPOFLOW_BUDGET)");
        sub->add_flag("--json", cfg.json, "Machine-readable JSON output");
    };

    auto* maxflow = app.add_subcommand("maxflow", "Print the maximum flow value over the horizon");
    with_network(maxflow);
    maxflow->add_flag("--cut", cfg.cut, "Also print a minimum cut function");
    maxflow->add_flag("--oracle", cfg.oracle, "Cross-check against the full time-expanded network");

    auto* cten = app.add_subcommand("cten", "Print the condensed time-expanded network and its size report");
    with_network(cten);

    auto* normalize = app.add_subcommand("normalize", "Print a minimum cut moved onto the critical times");
    with_network(normalize);

    auto* stats = app.add_subcommand("stats", "Print n, m, mu, breaktime and critical-time counts, cTEN size");
    with_network(stats);

    auto* verify = app.add_subcommand("verify", "Run the cTEN-vs-TEN equivalence checks on a file or a seeded corpus");
    verify->add_option("input", input, "Network file; omit to use a seeded corpus");
    verify->add_option("--horizon,-T", horizon, "Time horizon T (file mode)");
    verify->add_option("--seed", cfg.seed, "Corpus seed");
    verify->add_option("--count", cfg.count, "Number of corpus instances");
    verify->add_option("--budget", budget, "TEN node budget (overrides TEMPOFLOW_BUDGET)");
    verify->add_flag("--json", cfg.json, "Machine-readable JSON output");

    auto* gen = app.add_subcommand("gen", "Print a seeded random network");
    std::vector<tempoflow::TimeStep> lengths;
    gen->add_option("--seed", cfg.seed, "Generator seed");
    gen->add_option("--nodes", cfg.gen.nodes, "Node count");
    gen->add_option("--edges", cfg.gen.edges, "Edge count");
    gen->add_option("--pieces", cfg.gen.max_pieces_per_edge, "Maximum pieces per capacity function");
    gen->add_option("--max-cap", cfg.gen.max_capacity, "Maximum capacity value");
    gen->add_option("--tau", cfg.gen.tau, "Uniform edge length");
    gen->add_option("--lengths", lengths, "Per-edge lengths to draw from (comma separated)")->delimiter(',');
    gen->add_option("--horizon,-T", horizon, "Range for piece boundaries");
    gen->add_flag("--json", cfg.json, "Machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        if (cfg.json) {
            std::cout << tempoflow::ordered_json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump()
                      << '\n';
            return tempoflow::cli::exit_validation;
        }
        app.exit(e);
        return tempoflow::cli::exit_validation;
    }

    const std::map<CLI::App*, Subcommand> commands{{maxflow, Subcommand::MaxFlow}, {cten, Subcommand::Cten},
                                                   {verify, Subcommand::Verify},   {normalize, Subcommand::Normalize},
                                                   {gen, Subcommand::Gen},         {stats, Subcommand::Stats}};
    for (const auto& [sub, kind] : commands) {
        if (!sub->parsed())
            continue;
        cfg.subcommand = kind;
        if (!input.empty())
            cfg.input = input;
        auto given = [sub](const char* name) {
            const CLI::Option* opt = sub->get_option_no_throw(name);
            return opt != nullptr && opt->count() > 0;
        };
        if (given("--horizon"))
            cfg.horizon = horizon;
        if (given("--budget"))
            cfg.budget = budget;
    }
    cfg.gen.lengths = lengths;
    return tempoflow::cli::run(cfg, std::cout, std::cerr);
}

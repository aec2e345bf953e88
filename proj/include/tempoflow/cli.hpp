#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tempoflow/critical.hpp"
#include "tempoflow/cuts.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/expand.hpp"
#include "tempoflow/maxflow.hpp"
#include "tempoflow/network_json.hpp"
#include "tempoflow/oracle.hpp"
#include "tempoflow/verify.hpp"

namespace tempoflow::cli {

enum class Subcommand { MaxFlow, Cten, Verify, Normalize, Gen, Stats };

struct RunConfig {
    Subcommand subcommand = Subcommand::MaxFlow;
    std::optional<std::string> input;
    std::optional<TimeStep> horizon;
    bool cut = false;
    bool oracle = false;
    bool json = false;
    std::optional<std::size_t> budget;  // TEN node budget; falls back to TEMPOFLOW_BUDGET
    std::uint64_t seed = 0;
    std::size_t count = 50;
    GeneratorParams gen;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_budget = 2;
inline constexpr int exit_internal = 3;

inline std::size_t resolve_budget(const RunConfig& cfg)
{
    if (cfg.budget)
        return *cfg.budget;
    if (const char* env = std::getenv("TEMPOFLOW_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw Error(ErrorCode::InvalidArgument, std::string("TEMPOFLOW_BUDGET is not an integer: '") + env + "'");
        return static_cast<std::size_t>(v);
    }
    return default_node_budget;
}

inline ordered_json capacity_json(Capacity c)
{
    if (c.is_infinite())
        return "inf";
    return c.value();
}

inline ordered_json cut_json(const TemporalNetwork& net, const CutFunction& phi)
{
    ordered_json out = ordered_json::object();
    for (NodeId i = 0; i < net.node_count(); ++i)
        out[net.node_name(i)] = phi[i];
    return out;
}

inline ordered_json static_network_json(const TemporalNetwork& net, const StaticFlowNetwork& g)
{
    ordered_json doc;
    doc["nodes"] = ordered_json::array();
    for (const auto& v : g.nodes())
        doc["nodes"].push_back(ordered_json{{"name", net.node_name(v.base)}, {"time", v.time}});
    doc["source"] = g.source();
    doc["sink"] = g.sink();
    doc["arcs"] = ordered_json::array();
    for (const auto& a : g.arcs())
        doc["arcs"].push_back(ordered_json{{"from", a.tail},
                                           {"to", a.head},
                                           {"capacity", capacity_json(a.capacity)},
                                           {"kind", a.kind == ArcKind::Storage ? "storage" : "transmission"}});
    return doc;
}

inline ordered_json size_report_json(const SizeReport& r)
{
    return ordered_json{{"intervals", r.interval_count},       {"nodes", r.node_count},
                        {"storage_arcs", r.storage_arcs},      {"transmission_arcs", r.transmission_arcs},
                        {"max_arcs_per_edge", r.max_arcs_per_edge}, {"critical_bound", r.critical_bound}};
}

namespace detail {

struct Context {
    const RunConfig& cfg;
    std::ostream& out;
};

inline TimeStep require_horizon_flag(const RunConfig& cfg)
{
    if (!cfg.horizon)
        throw Error(ErrorCode::InvalidArgument, "--horizon is required");
    require_horizon(*cfg.horizon);
    return *cfg.horizon;
}

inline TemporalNetwork require_input(const RunConfig& cfg)
{
    if (!cfg.input)
        throw Error(ErrorCode::InvalidArgument, "an input network file is required");
    return load_network(*cfg.input);
}

inline int run_maxflow(const Context& ctx)
{
    const TemporalNetwork net = require_input(ctx.cfg);
    const TimeStep horizon = require_horizon_flag(ctx.cfg);
    const CriticalTimeSet crit = network_critical_times(net, horizon);
    const StaticFlowNetwork ct = build_cten(net, crit, horizon);
    const MaxFlowResult result = max_flow(ct);
    if (ctx.cfg.oracle) {
        const FlowValue ten_value = max_flow(build_ten(net, horizon, resolve_budget(ctx.cfg))).value;
        if (ten_value != result.value)
            throw Error(ErrorCode::InvariantViolation,
                        "cTEN value " + result.value.to_string() + " differs from TEN value " + ten_value.to_string());
    }
    std::optional<CutFunction> phi;
    if (ctx.cfg.cut)
        phi = extract_cut_function(min_cut(ct, result.arc_flows), ct);
    if (ctx.cfg.json) {
        ordered_json doc{{"value", capacity_json(result.value)}};
        if (phi)
            doc["cut"] = cut_json(net, *phi);
        ctx.out << doc.dump() << '\n';
    } else {
        ctx.out << result.value << '\n';
        if (phi)
            ctx.out << cut_json(net, *phi).dump() << '\n';
    }
    return exit_ok;
}

inline int run_cten(const Context& ctx)
{
    const TemporalNetwork net = require_input(ctx.cfg);
    const TimeStep horizon = require_horizon_flag(ctx.cfg);
    const CriticalTimeSet crit = network_critical_times(net, horizon);
    const StaticFlowNetwork ct = build_cten(net, crit, horizon);
    const SizeReport report = cten_size_report(ct, net, crit);
    ordered_json doc = static_network_json(net, ct);
    doc["size_report"] = size_report_json(report);
    ctx.out << doc.dump() << '\n';
    return exit_ok;
}

inline int run_verify(const Context& ctx)
{
    struct Row {
        std::uint64_t instance;
        CheckResult check;
    };
    std::vector<Row> rows;
    const std::size_t budget = resolve_budget(ctx.cfg);
    if (ctx.cfg.input) {
        const TemporalNetwork net = require_input(ctx.cfg);
        const TimeStep horizon = require_horizon_flag(ctx.cfg);
        for (auto& c : verify_instance(net, horizon, budget))
            rows.push_back({0, std::move(c)});
    } else {
        for (std::uint64_t k = 0; k < ctx.cfg.count; ++k) {
            const CorpusInstance inst = corpus_instance(ctx.cfg.seed, k);
            for (auto& c : verify_instance(inst.network, inst.horizon, budget))
                rows.push_back({k, std::move(c)});
        }
    }
    bool all_pass = true;
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
        all_pass = all_pass && r.check.passed;
        if (ctx.cfg.json) {
            ordered_json row{{"instance", r.instance}, {"check", r.check.name}, {"result", r.check.passed ? "PASS" : "FAIL"}};
            if (!r.check.passed)
                row["detail"] = r.check.detail;
            doc.push_back(std::move(row));
        } else {
            ctx.out << "instance " << r.instance << ' ' << r.check.name << ' ' << (r.check.passed ? "PASS" : "FAIL");
            if (!r.check.passed)
                ctx.out << ' ' << r.check.detail;
            ctx.out << '\n';
        }
    }
    if (ctx.cfg.json)
        ctx.out << ordered_json{{"all_pass", all_pass}, {"checks", doc}}.dump() << '\n';
    return all_pass ? exit_ok : exit_internal;
}

inline int run_normalize(const Context& ctx)
{
    const TemporalNetwork net = require_input(ctx.cfg);
    const TimeStep horizon = require_horizon_flag(ctx.cfg);
    const StaticFlowNetwork ten = build_ten(net, horizon, resolve_budget(ctx.cfg));
    const MaxFlowResult flow = max_flow(ten);
    const CutFunction phi = extract_cut_function(min_cut(ten, flow.arc_flows), ten);
    const NormalizedCut norm = normalize_min_cut(net, horizon, phi);
    if (ctx.cfg.json)
        ctx.out << ordered_json{{"cost", capacity_json(norm.cost)},
                                {"iterations", norm.iterations},
                                {"cut", cut_json(net, norm.phi)}}
                       .dump()
                << '\n';
    else
        ctx.out << cut_json(net, norm.phi).dump() << '\n';
    return exit_ok;
}

inline int run_gen(const Context& ctx)
{
    GeneratorParams p = ctx.cfg.gen;
    p.seed = ctx.cfg.seed;
    if (ctx.cfg.horizon)
        p.horizon = *ctx.cfg.horizon;
    ctx.out << serialize_network(gen_random_network(p)) << '\n';
    return exit_ok;
}

inline int run_stats(const Context& ctx)
{
    const TemporalNetwork net = require_input(ctx.cfg);
    const TimeStep horizon = require_horizon_flag(ctx.cfg);
    const BreaktimeSet breaks = breaktimes(net, horizon);
    const CriticalTimeSet crit = network_critical_times(net, horizon);
    const StaticFlowNetwork ct = build_cten(net, crit, horizon);
    ordered_json doc{{"n", net.node_count()},
                     {"m", net.edge_count()},
                     {"mu", net.total_pieces()},
                     {"breaktimes", breaks.times.size()},
                     {"critical_times", crit.size()},
                     {"cten_nodes", ct.node_count()},
                     {"cten_arcs", ct.arc_count()}};
    if (ctx.cfg.json) {
        ctx.out << doc.dump() << '\n';
    } else {
        for (const auto& [key, value] : doc.items())
            ctx.out << key << ' ' << value.dump() << '\n';
    }
    return exit_ok;
}

}  // namespace detail

inline int exit_code_for(ErrorCode code)
{
    switch (category(code)) {
    case ErrorCategory::Validation: return exit_validation;
    case ErrorCategory::Budget: return exit_budget;
    case ErrorCategory::Internal: return exit_internal;
    }
    return exit_internal;
}

// Executes one subcommand. Results go to `out`; diagnostics go to `err`, or
// to `out` as a JSON error object when --json is set.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    auto report = [&](const std::string& code, const std::string& message, int status) {
        if (cfg.json)
            out << ordered_json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
        else
            err << "error: " << message << '\n';
        return status;
    };
    try {
        const detail::Context ctx{cfg, out};
        switch (cfg.subcommand) {
        case Subcommand::MaxFlow: return detail::run_maxflow(ctx);
        case Subcommand::Cten: return detail::run_cten(ctx);
        case Subcommand::Verify: return detail::run_verify(ctx);
        case Subcommand::Normalize: return detail::run_normalize(ctx);
        case Subcommand::Gen: return detail::run_gen(ctx);
        case Subcommand::Stats: return detail::run_stats(ctx);
        }
        return exit_internal;
    } catch (const Error& e) {
        return report(std::string(to_string(e.code())), e.what(), exit_code_for(e.code()));
    } catch (const std::exception& e) {
        return report("Internal", e.what(), exit_internal);
    }
}

}  // namespace tempoflow::cli

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tempoflow/critical.hpp"
#include "tempoflow/cuts.hpp"
#include "tempoflow/expand.hpp"
#include "tempoflow/maxflow.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/oracle.hpp"

namespace tempoflow {

struct CorpusRanges {
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 6;
    std::size_t max_edges = 10;
    TimeStep max_tau = 3;
    TimeStep min_horizon = 1;
    TimeStep max_horizon = 40;
    std::size_t max_pieces_per_edge = 4;
    std::int64_t max_capacity = 8;
    std::vector<TimeStep> lengths;  // non-empty: per-edge lengths drawn from here
};

struct CorpusInstance {
    TemporalNetwork network;
    TimeStep horizon = 0;
};

// Instance `index` of the corpus rooted at `seed`; independent of every
// other index.
inline CorpusInstance corpus_instance(std::uint64_t seed, std::uint64_t index, const CorpusRanges& r = {})
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    GeneratorParams p;
    p.nodes = static_cast<std::size_t>(detail::draw(rng, static_cast<std::int64_t>(r.min_nodes),
                                                    static_cast<std::int64_t>(r.max_nodes)));
    const auto edge_cap = std::min(r.max_edges, p.nodes * (p.nodes - 1));
    p.edges = static_cast<std::size_t>(detail::draw(rng, 1, static_cast<std::int64_t>(edge_cap)));
    p.tau = detail::draw(rng, 0, r.max_tau);
    p.horizon = detail::draw(rng, r.min_horizon, r.max_horizon);
    p.max_pieces_per_edge = r.max_pieces_per_edge;
    p.max_capacity = detail::draw(rng, 1, r.max_capacity);
    p.lengths = r.lengths;
    p.seed = rng();
    return {gen_random_network(p), p.horizon};
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline CheckResult run_check(const std::string& name, const std::function<std::string()>& body)
{
    try {
        std::string failure = body();
        return {name, failure.empty(), failure};
    } catch (const Error& e) {
        return {name, false, e.what()};
    }
}

}  // namespace detail

// The equivalence suite for one instance: cTEN value vs TEN value, duality,
// flow-over-time round trip, cTEN size bounds, and min-cut normalization.
inline std::vector<CheckResult> verify_instance(const TemporalNetwork& net, TimeStep horizon,
                                                std::size_t node_budget = default_node_budget)
{
    std::vector<CheckResult> out;
    const StaticFlowNetwork ten = build_ten(net, horizon, node_budget);
    const MaxFlowResult ten_flow = max_flow(ten);
    const CriticalTimeSet crit = network_critical_times(net, horizon);
    const StaticFlowNetwork ct = build_cten(net, crit, horizon);
    const MaxFlowResult ct_flow = max_flow(ct);

    out.push_back(detail::run_check("equivalence", [&]() -> std::string {
        if (ct_flow.value != ten_flow.value)
            return "cTEN " + ct_flow.value.to_string() + " vs TEN " + ten_flow.value.to_string();
        return {};
    }));
    out.push_back(detail::run_check("duality", [&]() -> std::string {
        min_cut(ten, ten_flow.arc_flows);
        min_cut(ct, ct_flow.arc_flows);
        return {};
    }));
    out.push_back(detail::run_check("round_trip", [&]() -> std::string {
        const FlowOverTime f = ten_flow_to_temporal(net, horizon, ten, ten_flow.arc_flows);
        const FlowValue v = validate_flow(net, horizon, f);
        if (v != ten_flow.value)
            return "flow over time carries " + v.to_string() + ", TEN flow is " + ten_flow.value.to_string();
        return {};
    }));
    out.push_back(detail::run_check("size_bounds", [&]() -> std::string {
        cten_size_report(ct, net, crit);
        return {};
    }));
    out.push_back(detail::run_check("normalize", [&]() -> std::string {
        const MinCut cut = min_cut(ten, ten_flow.arc_flows);
        const CutFunction phi = extract_cut_function(cut, ten);
        const NormalizedCut norm = normalize_min_cut(net, horizon, phi);
        if (norm.cost != cut.capacity)
            return "normalized cost " + norm.cost.to_string() + " vs " + cut.capacity.to_string();
        for (TimeStep t : norm.phi.range_within(horizon))
            if (!crit.contains(t))
                return "normalized cut uses non-critical time " + std::to_string(t);
        return {};
    }));
    return out;
}

}  // namespace tempoflow

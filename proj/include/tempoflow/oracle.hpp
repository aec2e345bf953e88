#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/cut_function.hpp"
#include "tempoflow/cuts.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/expand.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

// Dense per-edge, per-step flow: flow[k][t] for edge k and t in [0, T].
// Storage at nodes is implicit (non-negative holding).
struct FlowOverTime {
    std::vector<std::vector<std::int64_t>> flow;

    static FlowOverTime zero(const TemporalNetwork& net, TimeStep horizon)
    {
        return {std::vector<std::vector<std::int64_t>>(net.edge_count(),
                                                       std::vector<std::int64_t>(horizon + 1, 0))};
    }
};

// Checks capacity, non-negative holding at every node but the source, and
// zero net flow at intermediate nodes. Returns the net inflow at the sink by
// time T. The first violated constraint is reported.
inline FlowValue validate_flow(const TemporalNetwork& net, TimeStep horizon, const FlowOverTime& f)
{
    require_horizon(horizon);
    const auto& edges = net.edges();
    if (f.flow.size() != edges.size())
        throw Error(ErrorCode::InvalidArgument, "flow table does not cover every edge");
    auto edge_label = [&](std::size_t k) {
        return net.node_name(edges[k].tail) + "->" + net.node_name(edges[k].head);
    };
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (f.flow[k].size() != static_cast<std::size_t>(horizon + 1))
            throw Error(ErrorCode::InvalidArgument, "flow on " + edge_label(k) + " is not defined on [0, T]");
        for (TimeStep t = 0; t <= horizon; ++t) {
            const std::int64_t x = f.flow[k][t];
            if (x < 0 || x > edges[k].capacity.value_at(t))
                throw Error(ErrorCode::CapacityViolated,
                            "edge " + edge_label(k) + " at t=" + std::to_string(t) + " carries " + std::to_string(x));
        }
    }

    // eta[i] accumulates inflow arriving by t minus outflow departing by t.
    std::vector<std::int64_t> eta(net.node_count(), 0);
    for (TimeStep t = 0; t <= horizon; ++t) {
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Edge& e = edges[k];
            eta[e.tail] = checked_add(eta[e.tail], -f.flow[k][t]);
            const TimeStep departed = t - e.length;
            if (departed >= 0)
                eta[e.head] = checked_add(eta[e.head], f.flow[k][departed]);
        }
        for (NodeId i = 0; i < net.node_count(); ++i)
            if (i != net.source() && eta[i] < 0)
                throw Error(ErrorCode::NegativeHolding,
                            "node " + net.node_name(i) + " holds " + std::to_string(eta[i]) + " at t=" + std::to_string(t));
    }
    for (NodeId i = 0; i < net.node_count(); ++i)
        if (i != net.source() && i != net.sink() && eta[i] != 0)
            throw Error(ErrorCode::NonZeroNetFlow,
                        "node " + net.node_name(i) + " keeps " + std::to_string(eta[i]) + " units at T");
    return FlowValue(eta[net.sink()]);
}

// Reads a TEN arc flow as a flow over time: f_ij(t) is the flow on the
// transmission arc leaving (i, t). The result is validated before returning.
inline FlowOverTime ten_flow_to_temporal(const TemporalNetwork& net, TimeStep horizon, const StaticFlowNetwork& ten,
                                         std::span<const std::int64_t> arc_flows)
{
    if (arc_flows.size() != ten.arc_count())
        throw Error(ErrorCode::InvalidArgument, "arc flow vector does not match the TEN");
    if (ten.grid().size() != static_cast<std::size_t>(horizon + 1))
        throw Error(ErrorCode::InvalidArgument, "network is not the full TEN for this horizon");
    FlowOverTime f = FlowOverTime::zero(net, horizon);
    for (std::size_t k = 0; k < ten.arc_count(); ++k) {
        const Arc& a = ten.arcs()[k];
        if (a.kind != ArcKind::Transmission)
            continue;
        f.flow[a.edge][ten.nodes()[a.tail].time] += arc_flows[k];
    }
    validate_flow(net, horizon, f);
    return f;
}

inline constexpr std::uint64_t default_enumeration_budget = 1'000'000;

struct MinCutEnumeration {
    Capacity min_cost;
    std::vector<CutFunction> minimizers;  // in odometer order
    std::uint64_t evaluated = 0;
};

// Exhaustive search over all cut functions (interior nodes range over
// [0, T+1]) for the minimum cut cost and every function attaining it.
inline MinCutEnumeration enumerate_min_cuts(const TemporalNetwork& net, TimeStep horizon,
                                            std::uint64_t budget = default_enumeration_budget)
{
    require_horizon(horizon);
    std::vector<NodeId> interior;
    for (NodeId i = 0; i < net.node_count(); ++i)
        if (i != net.source() && i != net.sink())
            interior.push_back(i);
    const auto radix = static_cast<std::uint64_t>(horizon + 2);
    std::uint64_t combos = 1;
    for (std::size_t k = 0; k < interior.size(); ++k) {
        if (combos > budget / radix)
            throw Error(ErrorCode::BudgetExceeded, "cut enumeration exceeds " + std::to_string(budget) + " functions");
        combos *= radix;
    }

    std::vector<TimeStep> assignment(net.node_count(), 0);
    assignment[net.sink()] = horizon + 1;
    MinCutEnumeration out;
    out.min_cost = Capacity::infinite();
    while (true) {
        CutFunction phi(assignment);
        const Capacity cost = cut_cost(net, horizon, phi);
        ++out.evaluated;
        if (cost < out.min_cost) {
            out.min_cost = cost;
            out.minimizers.clear();
        }
        if (cost == out.min_cost)
            out.minimizers.push_back(std::move(phi));
        std::size_t k = 0;
        for (; k < interior.size(); ++k) {
            if (++assignment[interior[k]] <= horizon + 1)
                break;
            assignment[interior[k]] = 0;
        }
        if (k == interior.size())
            break;
    }
    return out;
}

struct GeneratorParams {
    std::uint64_t seed = 0;
    std::size_t nodes = 4;
    std::size_t edges = 5;
    std::size_t max_pieces_per_edge = 3;
    std::int64_t max_capacity = 8;
    TimeStep tau = 1;
    TimeStep horizon = 20;           // piece boundaries are drawn from [1, horizon]
    std::vector<TimeStep> lengths;   // when non-empty, each edge draws its length from here
};

namespace detail {

// Uniform integer in [lo, hi] by rejection; fixed algorithm so a seed gives
// the same network under every standard library.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace detail

// Seeded random network. Node 0 is the source "s", node n-1 the sink "d".
// An s-d path through random interior nodes is laid down first, then the
// remaining edges are drawn uniformly among unused ordered pairs.
inline TemporalNetwork gen_random_network(const GeneratorParams& p)
{
    const std::size_t n = p.nodes;
    if (n < 2)
        throw Error(ErrorCode::InfeasibleParameters, "need at least two nodes");
    if (p.edges > n * (n - 1))
        throw Error(ErrorCode::InfeasibleParameters,
                    std::to_string(p.edges) + " edges do not fit in a simple digraph on " + std::to_string(n) + " nodes");
    if (p.max_pieces_per_edge < 1 || p.max_capacity < 0 || p.tau < 0 || p.horizon < 0)
        throw Error(ErrorCode::InfeasibleParameters, "generator parameters out of range");

    std::mt19937_64 rng(p.seed);
    RawNetwork raw;
    for (std::size_t i = 0; i < n; ++i)
        raw.nodes.push_back(i == 0 ? "s" : i + 1 == n ? "d" : "v" + std::to_string(i));
    raw.source = "s";
    raw.sink = "d";
    raw.tau = p.tau;

    std::vector<std::pair<NodeId, NodeId>> chosen;
    std::set<std::pair<NodeId, NodeId>> used;
    auto take = [&](NodeId a, NodeId b) {
        if (a != b && used.emplace(a, b).second)
            chosen.emplace_back(a, b);
    };

    if (p.edges > 0) {
        std::vector<NodeId> interior;
        for (NodeId i = 1; i + 1 < n; ++i)
            interior.push_back(i);
        for (std::size_t k = interior.size(); k > 1; --k)
            std::swap(interior[k - 1], interior[detail::draw(rng, 0, static_cast<std::int64_t>(k) - 1)]);
        const auto hops = detail::draw(rng, 0, static_cast<std::int64_t>(std::min(interior.size(), p.edges - 1)));
        NodeId prev = 0;
        for (std::int64_t h = 0; h < hops; ++h) {
            take(prev, interior[h]);
            prev = interior[h];
        }
        take(prev, n - 1);
    }
    std::vector<std::pair<NodeId, NodeId>> pool;
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = 0; b < n; ++b)
            if (a != b && !used.contains({a, b}))
                pool.emplace_back(a, b);
    while (chosen.size() < p.edges) {
        const auto pick = detail::draw(rng, 0, static_cast<std::int64_t>(pool.size()) - 1);
        take(pool[pick].first, pool[pick].second);
        pool.erase(pool.begin() + pick);
    }

    for (const auto& [a, b] : chosen) {
        RawEdge e;
        e.from = raw.nodes[a];
        e.to = raw.nodes[b];
        const auto pieces = static_cast<std::size_t>(
            detail::draw(rng, 1, static_cast<std::int64_t>(std::min<std::uint64_t>(p.max_pieces_per_edge,
                                                                                    static_cast<std::uint64_t>(p.horizon) + 1))));
        std::set<TimeStep> starts{0};
        while (starts.size() < pieces)
            starts.insert(detail::draw(rng, 1, p.horizon));
        for (TimeStep s : starts)
            e.capacity.push_back(Piece{s, detail::draw(rng, 0, p.max_capacity)});
        if (!p.lengths.empty())
            e.length = p.lengths[detail::draw(rng, 0, static_cast<std::int64_t>(p.lengths.size()) - 1)];
        raw.edges.push_back(std::move(e));
    }
    return validate_network(raw);
}

}  // namespace tempoflow

#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/critical.hpp"
#include "tempoflow/cut_function.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/expand.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

struct MaxFlowResult {
    FlowValue value;
    std::vector<std::int64_t> arc_flows;  // indexed like net.arcs()
};

namespace detail {

// Dinic's algorithm on a private residual graph. Residual arcs come in pairs
// (2k forward, 2k+1 backward) in the input arc order.
class Dinic {
public:
    Dinic(const StaticFlowNetwork& net, std::int64_t infinite_substitute)
        : adjacency_(net.node_count()), level_(net.node_count()), cursor_(net.node_count())
    {
        to_.reserve(2 * net.arc_count());
        residual_.reserve(2 * net.arc_count());
        for (const auto& a : net.arcs()) {
            const std::int64_t cap = a.capacity.is_infinite() ? infinite_substitute : a.capacity.value();
            push(a.tail, a.head, cap);
            push(a.head, a.tail, 0);
        }
    }

    std::int64_t run(std::size_t s, std::size_t t)
    {
        std::int64_t total = 0;
        while (build_levels(s, t)) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            while (std::int64_t pushed = augment(s, t))
                total = checked_add(total, pushed);
        }
        return total;
    }

    std::int64_t flow_on(std::size_t arc) const { return residual_[2 * arc + 1]; }

private:
    void push(std::size_t from, std::size_t to, std::int64_t cap)
    {
        adjacency_[from].push_back(static_cast<int>(to_.size()));
        to_.push_back(to);
        residual_.push_back(cap);
    }

    bool build_levels(std::size_t s, std::size_t t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (int r : adjacency_[v]) {
                if (residual_[r] > 0 && level_[to_[r]] < 0) {
                    level_[to_[r]] = level_[v] + 1;
                    q.push(to_[r]);
                }
            }
        }
        return level_[t] >= 0;
    }

    // One augmenting path in the level graph, found iteratively so that deep
    // time-expanded networks do not exhaust the call stack.
    std::int64_t augment(std::size_t s, std::size_t t)
    {
        std::vector<int> path;
        std::size_t v = s;
        while (true) {
            if (v == t) {
                std::int64_t bottleneck = residual_[path.front()];
                for (int r : path)
                    bottleneck = std::min(bottleneck, residual_[r]);
                for (int r : path) {
                    residual_[r] -= bottleneck;
                    residual_[r ^ 1] += bottleneck;
                }
                return bottleneck;
            }
            bool advanced = false;
            auto& adj = adjacency_[v];
            for (auto& c = cursor_[v]; c < adj.size(); ++c) {
                const int r = adj[c];
                if (residual_[r] > 0 && level_[to_[r]] == level_[v] + 1) {
                    path.push_back(r);
                    v = to_[r];
                    advanced = true;
                    break;
                }
            }
            if (advanced)
                continue;
            if (v == s)
                return 0;
            // Dead end: prune v from this phase and retreat.
            level_[v] = -1;
            const int back = path.back();
            path.pop_back();
            v = to_[back ^ 1];
            ++cursor_[v];
        }
    }

    std::vector<std::vector<int>> adjacency_;
    std::vector<std::size_t> to_;
    std::vector<std::int64_t> residual_;
    std::vector<int> level_;
    std::vector<std::size_t> cursor_;
};

}  // namespace detail

// 1 + sum of all finite arc capacities; exceeds any finite cut.
inline std::int64_t infinite_substitute(const StaticFlowNetwork& net)
{
    std::int64_t bound = 1;
    for (const auto& a : net.arcs())
        if (a.capacity.is_finite())
            bound = checked_add(bound, a.capacity.value());
    return bound;
}

// Exact max flow. INFINITE arcs carry the substitute bound B internally; a
// value reaching B means no finite cut exists and is reported as INFINITE.
inline MaxFlowResult max_flow(const StaticFlowNetwork& net)
{
    if (net.node_count() < 2 || net.source() == net.sink())
        throw Error(ErrorCode::InvalidArgument, "max flow needs two distinct terminals");
    const std::int64_t bound = infinite_substitute(net);
    detail::Dinic solver(net, bound);
    const std::int64_t value = solver.run(net.source(), net.sink());
    MaxFlowResult out;
    out.value = value >= bound ? FlowValue::infinite() : FlowValue(value);
    out.arc_flows.resize(net.arc_count());
    for (std::size_t k = 0; k < net.arc_count(); ++k)
        out.arc_flows[k] = solver.flow_on(k);
    return out;
}

struct MinCut {
    std::vector<bool> source_side;  // indexed by network node
    FlowValue capacity;
};

// Source side = nodes reachable from the source in the residual graph of a
// maximum flow. The cut capacity is recomputed from the arcs and must match
// the flow value.
inline MinCut min_cut(const StaticFlowNetwork& net, std::span<const std::int64_t> arc_flows)
{
    if (arc_flows.size() != net.arc_count())
        throw Error(ErrorCode::InvalidArgument, "arc flow vector does not match the network");
    const std::int64_t bound = infinite_substitute(net);
    std::vector<std::vector<std::size_t>> out_arcs(net.node_count()), in_arcs(net.node_count());
    for (std::size_t k = 0; k < net.arc_count(); ++k) {
        out_arcs[net.arcs()[k].tail].push_back(k);
        in_arcs[net.arcs()[k].head].push_back(k);
    }
    auto cap_of = [&](const Arc& a) { return a.capacity.is_infinite() ? bound : a.capacity.value(); };

    MinCut cut;
    cut.source_side.assign(net.node_count(), false);
    std::queue<std::size_t> q;
    cut.source_side[net.source()] = true;
    q.push(net.source());
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t k : out_arcs[v]) {
            const Arc& a = net.arcs()[k];
            if (arc_flows[k] < cap_of(a) && !cut.source_side[a.head]) {
                cut.source_side[a.head] = true;
                q.push(a.head);
            }
        }
        for (std::size_t k : in_arcs[v]) {
            const Arc& a = net.arcs()[k];
            if (arc_flows[k] > 0 && !cut.source_side[a.tail]) {
                cut.source_side[a.tail] = true;
                q.push(a.tail);
            }
        }
    }
    if (cut.source_side[net.sink()])
        throw Error(ErrorCode::DualityViolation, "sink reachable in the residual graph; flow is not maximum");

    FlowValue capacity;
    std::int64_t flow_value = 0;
    for (std::size_t k = 0; k < net.arc_count(); ++k) {
        const Arc& a = net.arcs()[k];
        if (cut.source_side[a.tail] && !cut.source_side[a.head]) {
            capacity += a.capacity;
            flow_value = checked_add(flow_value, arc_flows[k]);
        } else if (!cut.source_side[a.tail] && cut.source_side[a.head]) {
            flow_value -= arc_flows[k];
        }
    }
    const FlowValue reported = flow_value >= bound ? FlowValue::infinite() : FlowValue(std::max<std::int64_t>(flow_value, 0));
    if (capacity != reported)
        throw Error(ErrorCode::DualityViolation,
                    "cut capacity " + capacity.to_string() + " differs from flow value " + reported.to_string());
    cut.capacity = capacity;
    return cut;
}

// Reads a cut of a TEN or cTEN as a cut function: each base node maps to its
// earliest source-side time label, or T+1 when no copy is on the source side.
inline CutFunction extract_cut_function(const MinCut& cut, const StaticFlowNetwork& net)
{
    if (!net.is_expansion())
        throw Error(ErrorCode::InvalidArgument, "cut functions exist only on time-expanded networks");
    if (cut.capacity.is_infinite())
        throw Error(ErrorCode::InvalidArgument, "cut function requires a finite cut");
    const auto& grid = net.grid();
    const std::size_t bases = net.node_count() / grid.size();
    std::vector<TimeStep> phi(bases, net.horizon() + 1);
    for (NodeId v = 0; v < bases; ++v) {
        bool inside = false;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            const bool on_source_side = cut.source_side[net.node_at(v, k)];
            if (inside && !on_source_side)
                throw Error(ErrorCode::NotMonotone, "a node leaves the source side at a later time");
            if (on_source_side && !inside) {
                inside = true;
                phi[v] = grid[k];
            }
        }
    }
    return CutFunction(std::move(phi));
}

// Maximum flow over time: one steady-state max flow on the cTEN built over
// the critical times of the network.
inline FlowValue max_flow_over_time(const TemporalNetwork& net, TimeStep horizon)
{
    const CriticalTimeSet a = network_critical_times(net, horizon);
    return max_flow(build_cten(net, a, horizon)).value;
}

}  // namespace tempoflow

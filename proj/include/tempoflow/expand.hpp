#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/critical.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

enum class ArcKind { Storage, Transmission };

inline constexpr std::size_t no_edge = std::numeric_limits<std::size_t>::max();

struct FlowNode {
    NodeId base = 0;
    TimeStep time = 0;

    friend bool operator==(const FlowNode&, const FlowNode&) = default;
};

struct Arc {
    std::size_t tail = 0;
    std::size_t head = 0;
    Capacity capacity;
    ArcKind kind = ArcKind::Transmission;
    std::size_t edge = no_edge;  // originating temporal edge, for transmission arcs
};

// Steady-state network with extended capacities. Built by build_ten and
// build_cten over a time grid, or by hand for solver tests.
class StaticFlowNetwork {
public:
    StaticFlowNetwork() = default;

    std::size_t add_node(FlowNode label)
    {
        nodes_.push_back(label);
        return nodes_.size() - 1;
    }

    std::size_t add_arc(std::size_t tail, std::size_t head, Capacity capacity, ArcKind kind = ArcKind::Transmission,
                        std::size_t edge = no_edge)
    {
        if (tail >= nodes_.size() || head >= nodes_.size())
            throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
        arcs_.push_back(Arc{tail, head, capacity, kind, edge});
        return arcs_.size() - 1;
    }

    void set_terminals(std::size_t source, std::size_t sink)
    {
        if (source >= nodes_.size() || sink >= nodes_.size())
            throw Error(ErrorCode::InvalidArgument, "terminal out of range");
        source_ = source;
        sink_ = sink;
    }

    const std::vector<FlowNode>& nodes() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    std::size_t source() const { return source_; }
    std::size_t sink() const { return sink_; }

    // Time grid and horizon are set by the expansion builders; node index is
    // base * grid.size() + grid position.
    const std::vector<TimeStep>& grid() const { return grid_; }
    TimeStep horizon() const { return horizon_; }
    bool is_expansion() const { return !grid_.empty(); }

    std::size_t node_at(NodeId base, std::size_t grid_pos) const { return base * grid_.size() + grid_pos; }

private:
    friend StaticFlowNetwork make_expansion_skeleton(const TemporalNetwork&, const std::vector<TimeStep>&, TimeStep);

    std::vector<FlowNode> nodes_;
    std::vector<Arc> arcs_;
    std::size_t source_ = 0;
    std::size_t sink_ = 0;
    std::vector<TimeStep> grid_;
    TimeStep horizon_ = 0;
};

// Nodes V x grid, storage arcs between consecutive grid points, source
// (s, 0) and sink (d, T).
inline StaticFlowNetwork make_expansion_skeleton(const TemporalNetwork& net, const std::vector<TimeStep>& grid,
                                                 TimeStep horizon)
{
    StaticFlowNetwork out;
    out.grid_ = grid;
    out.horizon_ = horizon;
    out.nodes_.reserve(net.node_count() * grid.size());
    for (NodeId v = 0; v < net.node_count(); ++v)
        for (TimeStep t : grid)
            out.nodes_.push_back(FlowNode{v, t});
    for (NodeId v = 0; v < net.node_count(); ++v)
        for (std::size_t k = 0; k + 1 < grid.size(); ++k)
            out.add_arc(out.node_at(v, k), out.node_at(v, k + 1), Capacity::infinite(), ArcKind::Storage);
    out.set_terminals(out.node_at(net.source(), 0), out.node_at(net.sink(), grid.size() - 1));
    return out;
}

inline constexpr std::size_t default_node_budget = 200000;

// Full time-expanded network on V x [0, T]. Guarded by a node budget so the
// oracle path is never attempted at scale.
inline StaticFlowNetwork build_ten(const TemporalNetwork& net, TimeStep horizon,
                                   std::size_t node_budget = default_node_budget)
{
    require_horizon(horizon);
    const auto steps = static_cast<std::uint64_t>(horizon) + 1;
    if (steps > node_budget || net.node_count() * steps > node_budget)
        throw Error(ErrorCode::BudgetExceeded, "TEN needs " + std::to_string(net.node_count()) + " x " +
                                                   std::to_string(steps) + " nodes, budget is " +
                                                   std::to_string(node_budget));
    std::vector<TimeStep> grid(steps);
    for (TimeStep t = 0; t <= horizon; ++t)
        grid[t] = t;
    StaticFlowNetwork ten = make_expansion_skeleton(net, grid, horizon);
    for (std::size_t k = 0; k < net.edges().size(); ++k) {
        const Edge& e = net.edges()[k];
        for (TimeStep t = 0; t + e.length <= horizon; ++t) {
            const std::int64_t u = e.capacity.value_at(t);
            if (u > 0)
                ten.add_arc(ten.node_at(e.tail, t), ten.node_at(e.head, t + e.length), Capacity(u),
                            ArcKind::Transmission, k);
        }
    }
    return ten;
}

// Condensed time-expanded network over the interval grid A. Interval i covers
// [t_i, t_{i+1} - 1]; the last covers [t_k, T]. Departures that cannot arrive
// by T are dropped.
inline StaticFlowNetwork build_cten(const TemporalNetwork& net, const CriticalTimeSet& intervals, TimeStep horizon)
{
    require_horizon(horizon);
    const auto& a = intervals.times();
    if (!intervals.contains(0) || !intervals.contains(horizon))
        throw Error(ErrorCode::InvalidIntervalSet, "interval set must contain 0 and the horizon");
    if (a.back() > horizon)
        throw Error(ErrorCode::InvalidIntervalSet, "interval set has times beyond the horizon");
    StaticFlowNetwork ct = make_expansion_skeleton(net, a, horizon);
    const std::size_t p = a.size();
    auto interval_end = [&](std::size_t i) { return i + 1 < p ? a[i + 1] - 1 : horizon; };

    for (std::size_t k = 0; k < net.edges().size(); ++k) {
        const Edge& e = net.edges()[k];
        if (e.length > horizon)
            continue;
        const TimeStep last_departure = horizon - e.length;
        for (std::size_t i = 0; i < p && a[i] <= last_departure; ++i) {
            const TimeStep dep_lo = a[i];
            const TimeStep dep_hi = std::min(interval_end(i), last_departure);
            // First arrival interval: the one containing dep_lo + length.
            std::size_t j = static_cast<std::size_t>(
                std::upper_bound(a.begin(), a.end(), dep_lo + e.length) - a.begin() - 1);
            for (; j < p && a[j] - e.length <= dep_hi; ++j) {
                const TimeStep lo = std::max(dep_lo, a[j] - e.length);
                const TimeStep hi = std::min(dep_hi, interval_end(j) - e.length);
                const std::int64_t total = e.capacity.window_sum(lo, hi);
                if (total > 0)
                    ct.add_arc(ct.node_at(e.tail, i), ct.node_at(e.head, j), Capacity(total),
                               ArcKind::Transmission, k);
            }
        }
    }
    return ct;
}

struct SizeReport {
    std::size_t interval_count = 0;
    std::size_t node_count = 0;
    std::size_t storage_arcs = 0;
    std::size_t transmission_arcs = 0;
    std::size_t max_arcs_per_edge = 0;
    std::size_t critical_bound = 0;  // (mu + 3) * (2n + 1)^|lengths|
};

// Counts arcs of a cTEN and enforces the structural size bounds. With
// `expect_critical_set`, |A| is also checked against the critical-time bound.
inline SizeReport cten_size_report(const StaticFlowNetwork& ct, const TemporalNetwork& net,
                                   const CriticalTimeSet& intervals, bool expect_critical_set = true)
{
    SizeReport r;
    r.interval_count = intervals.size();
    r.node_count = ct.node_count();
    std::vector<std::size_t> per_edge(net.edge_count(), 0);
    for (const auto& arc : ct.arcs()) {
        if (arc.kind == ArcKind::Storage) {
            ++r.storage_arcs;
        } else {
            ++r.transmission_arcs;
            if (arc.edge < per_edge.size())
                ++per_edge[arc.edge];
        }
    }
    for (auto c : per_edge)
        r.max_arcs_per_edge = std::max(r.max_arcs_per_edge, c);

    const std::size_t n = net.node_count();
    const std::size_t p = intervals.size();
    std::size_t factor = 1;
    for (std::size_t g = 0; g < net.distinct_lengths().size(); ++g)
        factor *= 2 * n + 1;
    r.critical_bound = (net.total_pieces() + 3) * factor;

    auto fail = [](const std::string& what) { throw Error(ErrorCode::BoundViolation, what); };
    if (r.node_count != n * p)
        fail("node count " + std::to_string(r.node_count) + " != n*|A| = " + std::to_string(n * p));
    if (r.storage_arcs > n * p)
        fail("storage arcs exceed n*|A|");
    if (r.max_arcs_per_edge > 5 * p)
        fail("an edge has " + std::to_string(r.max_arcs_per_edge) + " transmission arcs, more than 5*|A|");
    if (ct.arc_count() > n * p + 5 * net.edge_count() * p)
        fail("total arcs exceed n*|A| + 5*m*|A|");
    if (expect_critical_set && p > r.critical_bound)
        fail("|A| = " + std::to_string(p) + " exceeds the critical-time bound " + std::to_string(r.critical_bound));
    return r;
}

}  // namespace tempoflow

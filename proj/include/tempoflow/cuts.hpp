#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/critical.hpp"
#include "tempoflow/cut_function.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : in_(universe, false) {}
    NodeSet(std::size_t universe, std::initializer_list<NodeId> members) : in_(universe, false)
    {
        for (NodeId v : members)
            insert(v);
    }

    void insert(NodeId v) { in_.at(v) = true; }
    bool contains(NodeId v) const { return v < in_.size() && in_[v]; }
    std::size_t universe() const { return in_.size(); }

    std::vector<NodeId> members() const
    {
        std::vector<NodeId> out;
        for (NodeId v = 0; v < in_.size(); ++v)
            if (in_[v])
                out.push_back(v);
        return out;
    }

    std::size_t size() const { return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), true)); }
    bool empty() const { return size() == 0; }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<bool> in_;
};

// Cost of the TEN cut defined by phi: every departure t of edge ij with
// t >= phi(i), t + len < phi(j) and t + len <= T crosses the cut.
inline Capacity cut_cost(const TemporalNetwork& net, TimeStep horizon, const CutFunction& phi)
{
    require_valid_cut(net, horizon, phi);
    Capacity total;
    for (const auto& e : net.edges()) {
        const TimeStep lo = phi[e.tail];
        const TimeStep hi = std::min(phi[e.head] - e.length - 1, horizon - e.length);
        total += Capacity(e.capacity.window_sum(lo, hi));
    }
    return total;
}

// X_phi: nodes assigned 0 or T+1.
inline NodeSet pinned_nodes(const CutFunction& phi, TimeStep horizon)
{
    NodeSet x(phi.size());
    for (NodeId i = 0; i < phi.size(); ++i)
        if (phi[i] == 0 || phi[i] == horizon + 1)
            x.insert(i);
    return x;
}

// Times at which moving phi(i) by one step may change the cut cost: the
// breaktimes and their forward offsets, plus phi(j) and phi(j) -+ len for
// every neighbour j outside C. Per-edge lengths are used throughout, so the
// same code covers uniform and multi-length networks.
inline std::set<TimeStep> forbidden_set(const TemporalNetwork& net, TimeStep horizon, const CutFunction& phi,
                                        const NodeSet& c, NodeId i)
{
    if (!c.contains(i))
        throw Error(ErrorCode::NodeNotInC, "node " + std::to_string(i) + " is not in C");
    std::set<TimeStep> forb;
    const auto lengths = net.distinct_lengths();
    for (TimeStep theta : breaktimes(net, horizon).times) {
        forb.insert(theta);
        for (TimeStep g : lengths)
            forb.insert(theta + g);
    }
    for (const auto& e : net.edges()) {
        if (e.tail == i && !c.contains(e.head)) {
            forb.insert(phi[e.head] - e.length);
            forb.insert(phi[e.head]);
        }
        if (e.head == i && !c.contains(e.tail)) {
            forb.insert(phi[e.tail] + e.length);
            forb.insert(phi[e.tail]);
        }
    }
    return forb;
}

// True when phi(i) avoids forbidden_set for every i in C.
inline bool passes_forbidden_filter(const TemporalNetwork& net, TimeStep horizon, const CutFunction& phi,
                                    const NodeSet& c)
{
    for (NodeId i : c.members())
        if (forbidden_set(net, horizon, phi, c, i).contains(phi[i]))
            return false;
    return true;
}

enum class ShiftDirection { Up, Down };

inline CutFunction shift_cut(const CutFunction& phi, const NodeSet& c, ShiftDirection dir, TimeStep horizon)
{
    CutFunction out = phi;
    for (NodeId i : c.members()) {
        if (phi[i] == 0 || phi[i] == horizon + 1)
            throw Error(ErrorCode::ShiftOutOfRange, "node " + std::to_string(i) + " is pinned to 0 or T+1");
        out[i] += dir == ShiftDirection::Up ? 1 : -1;
    }
    return out;
}

// Undirected graph on V + breaktimes. Vertices 0..n-1 are network nodes;
// vertex n+k is breaktime k. Two vertices are joined when their times differ
// by 0 or by one of the network's edge lengths.
class PinnedGraph {
public:
    PinnedGraph(std::size_t node_count, std::vector<TimeStep> breaks)
        : node_count_(node_count), breaks_(std::move(breaks)), adjacency_(node_count_ + breaks_.size())
    {
    }

    void connect(std::size_t a, std::size_t b)
    {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }

    bool adjacent(std::size_t a, std::size_t b) const
    {
        const auto& adj = adjacency_.at(a);
        return std::find(adj.begin(), adj.end(), b) != adj.end();
    }

    std::size_t node_count() const { return node_count_; }
    std::size_t vertex_count() const { return adjacency_.size(); }
    const std::vector<TimeStep>& breaktimes() const { return breaks_; }
    std::size_t breaktime_vertex(std::size_t k) const { return node_count_ + k; }
    bool is_breaktime_vertex(std::size_t v) const { return v >= node_count_; }

    // Component label per vertex, labels assigned in order of lowest vertex.
    std::vector<std::size_t> components() const
    {
        const std::size_t none = adjacency_.size();
        std::vector<std::size_t> label(adjacency_.size(), none);
        std::size_t next = 0;
        for (std::size_t root = 0; root < adjacency_.size(); ++root) {
            if (label[root] != none)
                continue;
            std::vector<std::size_t> stack{root};
            label[root] = next;
            while (!stack.empty()) {
                const std::size_t v = stack.back();
                stack.pop_back();
                for (std::size_t w : adjacency_[v])
                    if (label[w] == none) {
                        label[w] = next;
                        stack.push_back(w);
                    }
            }
            ++next;
        }
        return label;
    }

private:
    std::size_t node_count_;
    std::vector<TimeStep> breaks_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

inline PinnedGraph pinned_graph(const TemporalNetwork& net, TimeStep horizon, const CutFunction& phi)
{
    require_valid_cut(net, horizon, phi);
    std::set<TimeStep> gaps{0};
    for (TimeStep g : net.distinct_lengths())
        gaps.insert(g);
    auto linked = [&](TimeStep a, TimeStep b) { return gaps.contains(a > b ? a - b : b - a); };

    PinnedGraph g(net.node_count(), breaktimes(net, horizon).times);
    const std::size_t n = net.node_count();
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j)
            if (linked(phi[i], phi[j]))
                g.connect(i, j);
        for (std::size_t k = 0; k < g.breaktimes().size(); ++k)
            if (linked(phi[i], g.breaktimes()[k]))
                g.connect(i, g.breaktime_vertex(k));
    }
    return g;
}

// Component of v, restricted to network nodes; nullopt when it contains a
// breaktime or a node of X_phi.
inline std::optional<NodeSet> free_component_of(const PinnedGraph& g, const std::vector<std::size_t>& labels,
                                                const NodeSet& pinned, NodeId v)
{
    NodeSet c(g.node_count());
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        if (labels[w] != labels[v])
            continue;
        if (g.is_breaktime_vertex(w) || pinned.contains(w))
            return std::nullopt;
        c.insert(w);
    }
    return c;
}

// A component of G_phi with no breaktime and no node of X_phi, or nullopt.
inline std::optional<NodeSet> find_free_component(const PinnedGraph& g, const CutFunction& phi, TimeStep horizon)
{
    const auto labels = g.components();
    const NodeSet pinned = pinned_nodes(phi, horizon);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (auto c = free_component_of(g, labels, pinned, v))
            return c;
    return std::nullopt;
}

struct NormalizedCut {
    CutFunction phi;
    Capacity cost;
    std::size_t iterations = 0;
};

// Moves a minimum cut function onto the critical times without changing its
// cost: while some phi(i) in [0, T] is not critical, shift the free component
// containing i up by one. Each shift is checked against the forbidden-set
// filter and the cost is recomputed. The potential sum(phi) strictly grows
// and is bounded by n*(T+1), which bounds the iteration count.
inline NormalizedCut normalize_min_cut(const TemporalNetwork& net, TimeStep horizon, const CutFunction& min_phi)
{
    const CriticalTimeSet crit = network_critical_times(net, horizon);
    NormalizedCut out{min_phi, cut_cost(net, horizon, min_phi), 0};
    const std::size_t max_iterations = net.node_count() * static_cast<std::size_t>(horizon + 1);

    auto offending = [&]() -> std::optional<NodeId> {
        for (NodeId i = 0; i < out.phi.size(); ++i)
            if (out.phi[i] <= horizon && !crit.contains(out.phi[i]))
                return i;
        return std::nullopt;
    };

    while (auto bad = offending()) {
        if (out.iterations >= max_iterations)
            throw Error(ErrorCode::InvariantViolation, "normalization exceeded n*(T+1) iterations");
        const PinnedGraph g = pinned_graph(net, horizon, out.phi);
        const auto c = free_component_of(g, g.components(), pinned_nodes(out.phi, horizon), *bad);
        if (!c)
            throw Error(ErrorCode::InvariantViolation,
                        "node " + net.node_name(*bad) + " has a non-critical time but is linked to a breaktime");
        if (!passes_forbidden_filter(net, horizon, out.phi, *c))
            throw Error(ErrorCode::InvariantViolation, "free component hits its forbidden set");
        CutFunction next = shift_cut(out.phi, *c, ShiftDirection::Up, horizon);
        const Capacity cost = cut_cost(net, horizon, next);
        if (cost > out.cost)
            throw Error(ErrorCode::CostIncreased, "shift raised the cut cost from " + out.cost.to_string() + " to " +
                                                      cost.to_string());
        if (cost < out.cost)
            throw Error(ErrorCode::NotAMinCut, "shift lowered the cut cost; the input was not a minimum cut");
        if (next.potential() <= out.phi.potential())
            throw Error(ErrorCode::InvariantViolation, "potential did not increase");
        out.phi = std::move(next);
        ++out.iterations;
    }
    return out;
}

}  // namespace tempoflow

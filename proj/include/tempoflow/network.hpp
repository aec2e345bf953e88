#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/piecewise.hpp"

namespace tempoflow {

using NodeId = std::size_t;

struct Edge {
    NodeId tail = 0;
    NodeId head = 0;
    PiecewiseConstant capacity;
    TimeStep length = 0;  // static travel time; equals the network tau unless overridden
};

// Unvalidated input, as read from a file or built by hand.
struct RawEdge {
    std::string from;
    std::string to;
    std::vector<Piece> capacity;
    std::optional<TimeStep> length;
};

struct RawNetwork {
    std::vector<std::string> nodes;
    std::string source;
    std::string sink;
    TimeStep tau = 0;
    std::vector<RawEdge> edges;
};

class TemporalNetwork;
TemporalNetwork validate_network(const RawNetwork& raw, std::vector<std::string>* warnings);

// Directed network with static edge lengths and piecewise-constant
// capacities. Immutable once built; construct through validate_network.
class TemporalNetwork {
public:
    std::size_t node_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& node_name(NodeId i) const { return names_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }
    NodeId source() const { return source_; }
    NodeId sink() const { return sink_; }
    TimeStep tau() const { return tau_; }

    std::optional<NodeId> find_node(const std::string& name) const
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end())
            return std::nullopt;
        return static_cast<NodeId>(it - names_.begin());
    }

    // Total number of constant pieces over all capacity functions.
    std::size_t total_pieces() const
    {
        std::size_t mu = 0;
        for (const auto& e : edges_)
            mu += e.capacity.piece_count();
        return mu;
    }

    bool uniform_lengths() const
    {
        return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.length == tau_; });
    }

    // Distinct static edge lengths; {tau} for a uniform network (including
    // one without edges).
    std::vector<TimeStep> distinct_lengths() const
    {
        std::set<TimeStep> lengths;
        for (const auto& e : edges_)
            lengths.insert(e.length);
        if (lengths.empty())
            lengths.insert(tau_);
        return {lengths.begin(), lengths.end()};
    }

    RawNetwork to_raw() const
    {
        RawNetwork raw;
        raw.nodes = names_;
        raw.source = names_[source_];
        raw.sink = names_[sink_];
        raw.tau = tau_;
        for (const auto& e : edges_) {
            RawEdge re{names_[e.tail], names_[e.head], {e.capacity.pieces().begin(), e.capacity.pieces().end()},
                       std::nullopt};
            if (e.length != tau_)
                re.length = e.length;
            raw.edges.push_back(std::move(re));
        }
        return raw;
    }

private:
    friend TemporalNetwork validate_network(const RawNetwork& raw, std::vector<std::string>* warnings);

    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    TimeStep tau_ = 0;
    NodeId source_ = 0;
    NodeId sink_ = 0;
};

// Resolves names, rejects malformed structure, and puts every capacity
// function in canonical form. Merging of equal adjacent pieces is repaired
// rather than rejected; a message is appended to `warnings` when non-null.
inline TemporalNetwork validate_network(const RawNetwork& raw, std::vector<std::string>* warnings = nullptr)
{
    TemporalNetwork net;
    std::map<std::string, NodeId> index;
    for (const auto& name : raw.nodes) {
        if (!index.emplace(name, net.names_.size()).second)
            throw Error(ErrorCode::DuplicateNode, "node '" + name + "' listed twice");
        net.names_.push_back(name);
    }
    auto resolve = [&](const std::string& name, const char* field) {
        auto it = index.find(name);
        if (it == index.end())
            throw Error(ErrorCode::UnknownNode, std::string(field) + " refers to unknown node '" + name + "'");
        return it->second;
    };
    net.source_ = resolve(raw.source, "source");
    net.sink_ = resolve(raw.sink, "sink");
    if (net.source_ == net.sink_)
        throw Error(ErrorCode::SourceEqualsSink, "source and sink are both '" + raw.source + "'");
    if (raw.tau < 0)
        throw Error(ErrorCode::NegativeValue, "tau must be non-negative");
    net.tau_ = raw.tau;

    std::set<std::pair<NodeId, NodeId>> seen;
    for (const auto& re : raw.edges) {
        Edge e;
        e.tail = resolve(re.from, "edge.from");
        e.head = resolve(re.to, "edge.to");
        const std::string label = re.from + "->" + re.to;
        if (e.tail == e.head)
            throw Error(ErrorCode::SelfLoop, "edge " + label + " is a self-loop");
        if (!seen.emplace(e.tail, e.head).second)
            throw Error(ErrorCode::DuplicateEdge, "edge " + label + " appears more than once");
        e.length = re.length.value_or(raw.tau);
        if (e.length < 0)
            throw Error(ErrorCode::NegativeValue, "edge " + label + " has negative length");
        CanonicalPieces canon;
        try {
            canon = canonicalize(re.capacity);
        } catch (const Error& err) {
            throw Error(err.code(), "edge " + label + ": " + err.what());
        }
        if (canon.repaired && warnings)
            warnings->push_back("edge " + label + ": merged adjacent pieces with equal values");
        e.capacity = PiecewiseConstant(canon.pieces);
        net.edges_.push_back(std::move(e));
    }
    return net;
}

}  // namespace tempoflow

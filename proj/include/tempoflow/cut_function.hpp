#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

// phi: V -> [0, T+1]. Node i is on the source side at every time t >= phi(i);
// phi(s) = 0 and phi(d) = T+1.
class CutFunction {
public:
    CutFunction() = default;
    explicit CutFunction(std::vector<TimeStep> assignment) : phi_(std::move(assignment)) {}

    TimeStep operator[](NodeId i) const { return phi_.at(i); }
    TimeStep& operator[](NodeId i) { return phi_.at(i); }
    std::size_t size() const { return phi_.size(); }
    const std::vector<TimeStep>& values() const { return phi_; }

    std::int64_t potential() const
    {
        std::int64_t sum = 0;
        for (TimeStep t : phi_)
            sum += t;
        return sum;
    }

    // The range of phi intersected with [0, T].
    std::set<TimeStep> range_within(TimeStep horizon) const
    {
        std::set<TimeStep> out;
        for (TimeStep t : phi_)
            if (t >= 0 && t <= horizon)
                out.insert(t);
        return out;
    }

    friend bool operator==(const CutFunction&, const CutFunction&) = default;

private:
    std::vector<TimeStep> phi_;
};

inline void require_valid_cut(const TemporalNetwork& net, TimeStep horizon, const CutFunction& phi)
{
    if (phi.size() != net.node_count())
        throw Error(ErrorCode::InvalidArgument, "cut function size does not match the node count");
    for (NodeId i = 0; i < phi.size(); ++i)
        if (phi[i] < 0 || phi[i] > horizon + 1)
            throw Error(ErrorCode::InvalidArgument,
                        "phi(" + net.node_name(i) + ") = " + std::to_string(phi[i]) + " is outside [0, T+1]");
    if (phi[net.source()] != 0)
        throw Error(ErrorCode::InvalidArgument, "phi(source) must be 0");
    if (phi[net.sink()] != horizon + 1)
        throw Error(ErrorCode::InvalidArgument, "phi(sink) must be T+1");
}

}  // namespace tempoflow

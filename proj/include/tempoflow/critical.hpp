#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/error.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

// Times at which some capacity changes inside [1, T], plus {0, T, T+1}.
struct BreaktimeSet {
    std::vector<TimeStep> times;  // sorted, unique
};

// Sorted, duplicate-free subset of [0, T] containing 0 and T. Used both for
// the critical-time set and for any interval grid handed to build_cten.
class CriticalTimeSet {
public:
    CriticalTimeSet() = default;
    explicit CriticalTimeSet(std::vector<TimeStep> times) : times_(std::move(times))
    {
        std::sort(times_.begin(), times_.end());
        times_.erase(std::unique(times_.begin(), times_.end()), times_.end());
    }

    // Every integer in [0, T].
    static CriticalTimeSet full(TimeStep horizon)
    {
        std::vector<TimeStep> all;
        for (TimeStep t = 0; t <= horizon; ++t)
            all.push_back(t);
        return CriticalTimeSet(std::move(all));
    }

    const std::vector<TimeStep>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    bool contains(TimeStep t) const { return std::binary_search(times_.begin(), times_.end(), t); }

    friend bool operator==(const CriticalTimeSet&, const CriticalTimeSet&) = default;

private:
    std::vector<TimeStep> times_;
};

inline void require_horizon(TimeStep horizon)
{
    if (horizon < 0)
        throw Error(ErrorCode::InvalidArgument, "horizon must be non-negative, got " + std::to_string(horizon));
}

inline BreaktimeSet breaktimes(const TemporalNetwork& net, TimeStep horizon)
{
    require_horizon(horizon);
    std::set<TimeStep> times{0, horizon, horizon + 1};
    // Canonical pieces differ from their predecessor, so every piece start
    // after the first is a change time.
    for (const auto& e : net.edges()) {
        for (const auto& p : e.capacity.pieces().subspan(1)) {
            if (p.from_time > horizon)
                break;
            times.insert(p.from_time);
        }
    }
    return {{times.begin(), times.end()}};
}

namespace detail {

inline CriticalTimeSet offset_and_clamp(const BreaktimeSet& breaks, const std::set<TimeStep>& offsets,
                                        TimeStep horizon)
{
    std::vector<TimeStep> out{0, horizon};
    for (TimeStep theta : breaks.times)
        for (TimeStep d : offsets) {
            const TimeStep t = theta + d;
            if (t >= 0 && t <= horizon)
                out.push_back(t);
        }
    return CriticalTimeSet(std::move(out));
}

}  // namespace detail

// {theta +- l*tau : theta a breaktime, l in [0, n]} clipped to [0, T].
inline CriticalTimeSet critical_times(const TemporalNetwork& net, TimeStep horizon)
{
    const BreaktimeSet breaks = breaktimes(net, horizon);
    const auto n = static_cast<std::int64_t>(net.node_count());
    std::set<TimeStep> offsets;
    for (std::int64_t l = -n; l <= n; ++l)
        offsets.insert(checked_mul(l, net.tau()));
    return detail::offset_and_clamp(breaks, offsets, horizon);
}

inline constexpr std::size_t default_max_distinct_lengths = 3;

// Multi-length variant: theta + sum over gamma of a_gamma * gamma with every
// a_gamma in [-n, n]. Size grows as (2n+1)^|lengths|, hence the bound.
inline CriticalTimeSet generalized_critical_times(const TemporalNetwork& net, std::span<const TimeStep> lengths,
                                                  TimeStep horizon,
                                                  std::size_t max_distinct = default_max_distinct_lengths)
{
    const std::set<TimeStep> gamma(lengths.begin(), lengths.end());
    if (gamma.size() > max_distinct)
        throw Error(ErrorCode::TooManyDistinctLengths, std::to_string(gamma.size()) + " distinct lengths exceed the bound " +
                                                           std::to_string(max_distinct));
    for (const auto& e : net.edges())
        if (!gamma.contains(e.length))
            throw Error(ErrorCode::InvalidArgument,
                        "edge length " + std::to_string(e.length) + " is not in the supplied length set");
    const BreaktimeSet breaks = breaktimes(net, horizon);
    const auto n = static_cast<std::int64_t>(net.node_count());
    std::set<TimeStep> offsets{0};
    for (TimeStep g : gamma) {
        if (g < 0)
            throw Error(ErrorCode::NegativeValue, "edge lengths must be non-negative");
        std::set<TimeStep> next;
        for (TimeStep o : offsets)
            for (std::int64_t a = -n; a <= n; ++a)
                next.insert(checked_add(o, checked_mul(a, g)));
        offsets = std::move(next);
    }
    return detail::offset_and_clamp(breaks, offsets, horizon);
}

// Critical times appropriate to the network: the uniform form when every edge
// has length tau, the multi-length form otherwise.
inline CriticalTimeSet network_critical_times(const TemporalNetwork& net, TimeStep horizon,
                                              std::size_t max_distinct = default_max_distinct_lengths)
{
    if (net.uniform_lengths())
        return critical_times(net, horizon);
    const auto lengths = net.distinct_lengths();
    return generalized_critical_times(net, lengths, horizon, max_distinct);
}

}  // namespace tempoflow

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace tempoflow;

namespace {

constexpr std::uint64_t corpus_seed = 20240601;
constexpr std::uint64_t corpus_size = 500;

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

std::vector<CorpusInstance> main_corpus()
{
    std::vector<CorpusInstance> out;
    for (std::uint64_t k = 0; k < corpus_size; ++k)
        out.push_back(corpus_instance(corpus_seed, k));
    return out;
}

template <class Body>
bool report(int number, const std::string& title, Body&& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << number << " " << title << ": " << (o.passed ? "PASS" : "FAIL") << " [" << timing
              << "]";
    if (!o.detail.empty())
        std::cout << " " << o.detail;
    std::cout << std::endl;
    return o.passed;
}

std::string where(std::uint64_t k) { return "instance " + std::to_string(k) + ": "; }

// 1: cTEN over the critical times gives the TEN value on every instance.
Outcome equivalence(const std::vector<CorpusInstance>& corpus, double time_limit)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t k = 0; k < corpus.size(); ++k) {
        const auto& [net, horizon] = corpus[k];
        const FlowValue fast = max_flow_over_time(net, horizon);
        const FlowValue slow = max_flow(build_ten(net, horizon)).value;
        if (fast != slow)
            o.fail(where(k) + "cTEN " + fast.to_string() + " vs TEN " + slow.to_string());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit)
        o.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(time_limit) + "s");
    if (o.passed)
        o.detail = std::to_string(corpus.size()) + " instances";
    return o;
}

// 2: for every minimum cut function phi and every C inside V \ X_phi that
// clears the forbidden-set filter, shifting C up or down keeps the cost.
Outcome shift_invariance()
{
    CorpusRanges tiny;
    tiny.max_nodes = 4;
    tiny.max_edges = 8;
    tiny.max_horizon = 8;
    Outcome o;
    std::uint64_t cuts = 0, sets = 0;
    const std::uint64_t instances = 60;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint64_t k = 0; k < instances; ++k) {
        const auto [net, horizon] = corpus_instance(corpus_seed + 2, k, tiny);
        const MinCutEnumeration all = enumerate_min_cuts(net, horizon);
        const FlowValue ten_value = max_flow(build_ten(net, horizon)).value;
        if (all.min_cost != ten_value)
            o.fail(where(k) + "enumerated minimum " + all.min_cost.to_string() + " vs TEN " + ten_value.to_string());
        for (const CutFunction& phi : all.minimizers) {
            ++cuts;
            const NodeSet pinned = pinned_nodes(phi, horizon);
            std::vector<NodeId> free;
            for (NodeId i = 0; i < net.node_count(); ++i)
                if (!pinned.contains(i))
                    free.push_back(i);
            for (std::uint64_t mask = 1; mask < (1ULL << free.size()); ++mask) {
                NodeSet c(net.node_count());
                for (std::size_t b = 0; b < free.size(); ++b)
                    if (mask >> b & 1)
                        c.insert(free[b]);
                if (!passes_forbidden_filter(net, horizon, phi, c))
                    continue;
                ++sets;
                const Capacity up = cut_cost(net, horizon, shift_cut(phi, c, ShiftDirection::Up, horizon));
                const Capacity down = cut_cost(net, horizon, shift_cut(phi, c, ShiftDirection::Down, horizon));
                if (up != all.min_cost || down != all.min_cost)
                    o.fail(where(k) + "shift changes cost " + all.min_cost.to_string() + " to up " + up.to_string() +
                           " / down " + down.to_string());
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 120)
        o.fail("took " + std::to_string(secs) + "s, limit 120s");
    if (o.passed)
        o.detail = std::to_string(instances) + " instances, " + std::to_string(cuts) + " min cuts, " +
                   std::to_string(sets) + " filtered sets";
    return o;
}

// 3: normalization of TEN min cuts: the solver's source-minimal cut and the
// sink-maximal cut of the same flow.
Outcome normalization(const std::vector<CorpusInstance>& corpus)
{
    Outcome o;
    std::size_t cuts = 0, moved = 0;
    for (std::uint64_t k = 0; k < corpus.size(); ++k) {
        const auto& [net, horizon] = corpus[k];
        const StaticFlowNetwork ten = build_ten(net, horizon);
        const MaxFlowResult flow = max_flow(ten);
        const CriticalTimeSet crit = critical_times(net, horizon);
        const MinCut extremes[] = {min_cut(ten, flow.arc_flows),
                                   tempoflow::testing::sink_side_min_cut(ten, flow.arc_flows)};
        for (const MinCut& cut : extremes) {
            if (cut.capacity != flow.value)
                o.fail(where(k) + "cut capacity " + cut.capacity.to_string() + " vs flow " + flow.value.to_string());
            const CutFunction phi = extract_cut_function(cut, ten);
            const NormalizedCut norm = normalize_min_cut(net, horizon, phi);
            ++cuts;
            if (norm.iterations > net.node_count() * static_cast<std::size_t>(horizon + 1))
                o.fail(where(k) + std::to_string(norm.iterations) + " iterations");
            if (norm.cost != cut.capacity || cut_cost(net, horizon, norm.phi) != cut.capacity)
                o.fail(where(k) + "cost changed from " + cut.capacity.to_string() + " to " + norm.cost.to_string());
            for (TimeStep t : norm.phi.range_within(horizon))
                if (!crit.contains(t))
                    o.fail(where(k) + "time " + std::to_string(t) + " is not critical");
            moved += norm.iterations > 0 ? 1 : 0;
        }
    }
    if (o.passed)
        o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(cuts) + " cuts, " +
                   std::to_string(moved) + " needed shifts";
    return o;
}

// 4: structural size of the cTEN over the critical times.
Outcome size_bounds(const std::vector<CorpusInstance>& corpus)
{
    Outcome o;
    std::size_t worst_per_edge = 0, worst_p = 0;
    for (std::uint64_t k = 0; k < corpus.size(); ++k) {
        const auto& [net, horizon] = corpus[k];
        const CriticalTimeSet crit = critical_times(net, horizon);
        const StaticFlowNetwork ct = build_cten(net, crit, horizon);
        const SizeReport r = cten_size_report(ct, net, crit);
        const std::size_t n = net.node_count(), m = net.edge_count(), p = crit.size();
        // Recheck independently of the report.
        if (ct.node_count() != n * p)
            o.fail(where(k) + "node count");
        if (p > (2 * n + 1) * (net.total_pieces() + 3))
            o.fail(where(k) + "|A| = " + std::to_string(p) + " too large");
        if (r.max_arcs_per_edge > 5 * p)
            o.fail(where(k) + "per-edge arcs " + std::to_string(r.max_arcs_per_edge));
        if (ct.arc_count() > n * p + 5 * m * p)
            o.fail(where(k) + "total arcs " + std::to_string(ct.arc_count()));
        worst_per_edge = std::max(worst_per_edge, r.max_arcs_per_edge);
        worst_p = std::max(worst_p, p);
    }
    if (o.passed)
        o.detail = std::to_string(corpus.size()) + " instances, max |A| " + std::to_string(worst_p) +
                   ", max arcs per edge " + std::to_string(worst_per_edge);
    return o;
}

// 5: every time step as its own interval reproduces the TEN arc for arc.
Outcome degenerate_identity(const std::vector<CorpusInstance>& corpus)
{
    Outcome o;
    const std::uint64_t count = 100;
    for (std::uint64_t k = 0; k < count; ++k) {
        const auto& [net, horizon] = corpus[k];
        const StaticFlowNetwork ct = build_cten(net, CriticalTimeSet::full(horizon), horizon);
        const StaticFlowNetwork ten = build_ten(net, horizon);
        if (ct.node_count() != ten.node_count() || ct.nodes() != ten.nodes())
            o.fail(where(k) + "node sets differ");
        if (tempoflow::testing::arc_keys(ct) != tempoflow::testing::arc_keys(ten))
            o.fail(where(k) + "arc multisets differ");
        if (ct.source() != ten.source() || ct.sink() != ten.sink())
            o.fail(where(k) + "terminals differ");
    }
    if (o.passed)
        o.detail = std::to_string(count) + " instances";
    return o;
}

// 6: TEN max flow read back as a flow over time.
Outcome round_trip(const std::vector<CorpusInstance>& corpus)
{
    Outcome o;
    for (std::uint64_t k = 0; k < corpus.size(); ++k) {
        const auto& [net, horizon] = corpus[k];
        const StaticFlowNetwork ten = build_ten(net, horizon);
        const MaxFlowResult flow = max_flow(ten);
        const FlowOverTime f = ten_flow_to_temporal(net, horizon, ten, flow.arc_flows);
        const FlowValue v = validate_flow(net, horizon, f);
        if (v != flow.value)
            o.fail(where(k) + "flow over time " + v.to_string() + " vs " + flow.value.to_string());
    }
    if (o.passed)
        o.detail = std::to_string(corpus.size()) + " instances";
    return o;
}

// 7: a five-node chain whose edges are open for one step each, in an order
// no flow can follow. Merging the window times into one coarse interval
// lets the cTEN route flow the TEN cannot.
Outcome coarse_grid()
{
    using tempoflow::testing::edge;
    const std::int64_t c = 7;
    auto window = [&](TimeStep t) { return std::vector<Piece>{{0, 0}, {t, c}, {t + 1, 0}}; };
    const TemporalNetwork net = tempoflow::testing::make_network(
        {"s", "a", "b", "c", "d"}, "s", "d", 1,
        {edge("s", "a", window(2)), edge("a", "b", window(1)), edge("b", "c", window(2)), edge("c", "d", window(3))});
    const TimeStep horizon = 4;
    Outcome o;

    const StaticFlowNetwork ten = build_ten(net, horizon);
    const MaxFlowResult ten_flow = max_flow(ten);
    const MinCut ten_cut = min_cut(ten, ten_flow.arc_flows);
    const Capacity enumerated = enumerate_min_cuts(net, horizon).min_cost;
    if (ten_cut.capacity != Capacity(0) || enumerated != Capacity(0))
        o.fail("TEN min cut is " + ten_cut.capacity.to_string() + ", enumeration " + enumerated.to_string());

    const CriticalTimeSet coarse({0, 1, 4});
    const FlowValue coarse_value = max_flow(build_cten(net, coarse, horizon)).value;
    if (!(coarse_value > ten_cut.capacity))
        o.fail("coarse cTEN gives " + coarse_value.to_string() + ", no discrepancy");

    const CriticalTimeSet crit = critical_times(net, horizon);
    const FlowValue exact = max_flow(build_cten(net, crit, horizon)).value;
    if (exact != ten_cut.capacity)
        o.fail("cTEN over the critical times gives " + exact.to_string());

    const CutFunction phi = extract_cut_function(ten_cut, ten);
    bool uncovered = false;
    for (TimeStep t : phi.range_within(horizon))
        uncovered = uncovered || !coarse.contains(t);
    if (o.passed) {
        std::ostringstream os;
        os << "TEN " << ten_cut.capacity << ", cTEN{0,1,4} " << coarse_value << ", cTEN(crit) " << exact
           << (uncovered ? ", min cut uses times outside {0,1,4}" : "");
        o.detail = os.str();
    }
    return o;
}

// 8: two distinct edge lengths, generalized critical times.
Outcome two_lengths()
{
    CorpusRanges r;
    r.max_nodes = 4;
    r.max_edges = 8;
    r.max_horizon = 30;
    r.lengths = {1, 2};
    Outcome o;
    const std::uint64_t count = 100;
    std::size_t mixed = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        const auto [net, horizon] = corpus_instance(corpus_seed + 8, k, r);
        const std::vector<TimeStep> gamma{1, 2};
        const CriticalTimeSet crit = generalized_critical_times(net, gamma, horizon);
        const FlowValue fast = max_flow(build_cten(net, crit, horizon)).value;
        const FlowValue slow = max_flow(build_ten(net, horizon)).value;
        if (fast != slow)
            o.fail(where(k) + "cTEN " + fast.to_string() + " vs TEN " + slow.to_string());
        cten_size_report(build_cten(net, crit, horizon), net, crit);
        mixed += net.distinct_lengths().size() == 2 ? 1 : 0;
    }
    if (o.passed)
        o.detail = std::to_string(count) + " instances, " + std::to_string(mixed) + " use both lengths";
    return o;
}

}  // namespace

int main()
{
    const std::vector<CorpusInstance> corpus = main_corpus();
    bool all = true;
    all &= report(1, "cTEN value equals TEN value", [&] { return equivalence(corpus, 60.0); });
    all &= report(2, "filtered shifts preserve min cut cost", shift_invariance);
    all &= report(3, "min cut normalization", [&] { return normalization(corpus); });
    all &= report(4, "cTEN size bounds", [&] { return size_bounds(corpus); });
    all &= report(5, "full grid cTEN is the TEN", [&] { return degenerate_identity(corpus); });
    all &= report(6, "flow over time round trip", [&] { return round_trip(corpus); });
    all &= report(7, "coarse interval grid overestimates", coarse_grid);
    all &= report(8, "two edge lengths", two_lengths);
    std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
    return all ? 0 : 1;
}

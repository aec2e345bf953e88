#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace tempoflow;
using tempoflow::testing::brute_cut_cost;
using tempoflow::testing::edge;
using tempoflow::testing::make_network;
using tempoflow::testing::path_network;

namespace {

// s, i, j, d with a single edge between i and j.
TemporalNetwork lone_edge(bool i_to_j, TimeStep tau)
{
    return make_network({"s", "i", "j", "d"}, "s", "d", tau,
                        {i_to_j ? edge("i", "j", {{0, 1}}) : edge("j", "i", {{0, 1}})});
}

std::set<TimeStep> minus(std::set<TimeStep> a, const std::set<TimeStep>& b)
{
    for (TimeStep t : b)
        a.erase(t);
    return a;
}

CutFunction random_cut(std::mt19937_64& rng, const TemporalNetwork& net, TimeStep horizon)
{
    std::vector<TimeStep> phi(net.node_count());
    for (auto& t : phi)
        t = static_cast<TimeStep>(rng() % static_cast<std::uint64_t>(horizon + 2));
    phi[net.source()] = 0;
    phi[net.sink()] = horizon + 1;
    return CutFunction(std::move(phi));
}

}  // namespace

TEST(CutCost, SingleEdgeFullCut)
{
    const auto net = make_network({"s", "d"}, "s", "d", 1, {edge("s", "d", {{0, 4}})});
    EXPECT_EQ(cut_cost(net, 9, CutFunction({0, 10})), Capacity(36));
}

TEST(CutCost, InteriorOnSourceSideFromZero)
{
    const auto net = path_network(5, 1);
    EXPECT_EQ(cut_cost(net, 6, CutFunction({0, 0, 7})), Capacity(30));
    EXPECT_EQ(cut_cost(net, 6, CutFunction({0, 0, 7})), brute_cut_cost(net, 6, CutFunction({0, 0, 7})));
}

TEST(CutCost, RejectsInvalidFunctions)
{
    const auto net = path_network();
    EXPECT_THROW(cut_cost(net, 6, CutFunction({1, 0, 7})), Error);
    EXPECT_THROW(cut_cost(net, 6, CutFunction({0, 0, 6})), Error);
    EXPECT_THROW(cut_cost(net, 6, CutFunction({0, 8, 7})), Error);
    EXPECT_THROW(cut_cost(net, 6, CutFunction({0, 7})), Error);
}

TEST(CutCostProperty, MatchesArcEnumeration)
{
    std::mt19937_64 rng(401);
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto inst = corpus_instance(401, k);
        for (int rep = 0; rep < 10; ++rep) {
            const auto phi = random_cut(rng, inst.network, inst.horizon);
            ASSERT_EQ(cut_cost(inst.network, inst.horizon, phi), brute_cut_cost(inst.network, inst.horizon, phi))
                << "instance " << k;
        }
    }
}

TEST(Forbidden, InteriorWithoutOutsideNeighbours)
{
    const CutFunction phi({0, 4, 11});
    const NodeSet c(3, {1});
    const auto iso = make_network({"s", "a", "d"}, "s", "d", 1, {edge("s", "d", {{0, 2}, {5, 1}})});
    EXPECT_EQ(forbidden_set(iso, 10, phi, c, 1), (std::set<TimeStep>{0, 1, 5, 6, 10, 11, 12}));
}

TEST(Forbidden, OutEdgeToOutsideNode)
{
    const auto net = lone_edge(true, 2);
    const CutFunction phi({0, 3, 7, 21});
    const std::set<TimeStep> base{0, 2, 20, 21, 22, 23};
    EXPECT_EQ(minus(forbidden_set(net, 20, phi, NodeSet(4, {1}), 1), base), (std::set<TimeStep>{5, 7}));
}

TEST(Forbidden, InEdgeFromOutsideNode)
{
    const auto net = lone_edge(false, 2);
    const CutFunction phi({0, 3, 7, 21});
    const std::set<TimeStep> base{0, 2, 20, 21, 22, 23};
    EXPECT_EQ(minus(forbidden_set(net, 20, phi, NodeSet(4, {1}), 1), base), (std::set<TimeStep>{9, 7}));
}

TEST(Forbidden, NeighbourInsideCContributesNothing)
{
    const auto net = lone_edge(true, 2);
    const CutFunction phi({0, 3, 7, 21});
    const std::set<TimeStep> base{0, 2, 20, 21, 22, 23};
    EXPECT_EQ(forbidden_set(net, 20, phi, NodeSet(4, {1, 2}), 1), base);
}

TEST(Forbidden, NodeMustBeInC)
{
    const auto net = lone_edge(true, 2);
    try {
        forbidden_set(net, 20, CutFunction({0, 3, 7, 21}), NodeSet(4, {2}), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NodeNotInC);
    }
}

TEST(Shift, EmptySetIsIdentity)
{
    const CutFunction phi({0, 3, 9});
    EXPECT_EQ(shift_cut(phi, NodeSet(3), ShiftDirection::Up, 8), phi);
}

TEST(Shift, UpMovesOnlyMembers)
{
    const CutFunction phi({0, 3, 5, 9});
    EXPECT_EQ(shift_cut(phi, NodeSet(4, {1}), ShiftDirection::Up, 8), CutFunction({0, 4, 5, 9}));
}

TEST(Shift, DownThenUpIsIdentity)
{
    const CutFunction phi({0, 3, 5, 9});
    const NodeSet c(4, {1, 2});
    EXPECT_EQ(shift_cut(shift_cut(phi, c, ShiftDirection::Down, 8), c, ShiftDirection::Up, 8), phi);
}

TEST(Shift, PinnedNodesCannotMove)
{
    try {
        shift_cut(CutFunction({0, 0, 9}), NodeSet(3, {1}), ShiftDirection::Up, 8);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShiftOutOfRange);
    }
}

TEST(PinnedGraphTest, Adjacency)
{
    const auto net = make_network({"s", "a", "b", "d"}, "s", "d", 1,
                                  {edge("s", "a", {{0, 2}, {3, 1}}), edge("b", "d", {{0, 2}})});
    const auto g = pinned_graph(net, 20, CutFunction({0, 3, 4, 21}));
    EXPECT_TRUE(g.adjacent(1, 2));  // 3 and 4 differ by tau
    ASSERT_EQ(g.breaktimes(), (std::vector<TimeStep>{0, 3, 20, 21}));
    EXPECT_TRUE(g.adjacent(1, g.breaktime_vertex(1)));  // phi(a) = 3 = theta
    const auto far = pinned_graph(net, 20, CutFunction({0, 3, 6, 21}));
    EXPECT_FALSE(far.adjacent(1, 2));
}

TEST(FreeComponent, NoneWhenEverythingIsPinned)
{
    const auto net = make_network({"s", "a", "b", "d"}, "s", "d", 1,
                                  {edge("s", "a", {{0, 2}, {5, 1}}), edge("b", "d", {{0, 2}, {12, 1}})});
    const CutFunction phi({0, 5, 12, 21});
    EXPECT_FALSE(find_free_component(pinned_graph(net, 20, phi), phi, 20).has_value());
}

TEST(FreeComponent, IsolatedNode)
{
    const auto net = make_network({"s", "a", "b", "d"}, "s", "d", 1,
                                  {edge("s", "a", {{0, 2}, {5, 1}}), edge("b", "d", {{0, 2}, {12, 1}})});
    const CutFunction phi({0, 5, 9, 21});
    const auto c = find_free_component(pinned_graph(net, 20, phi), phi, 20);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->members(), std::vector<NodeId>{2});
}

TEST(FreeComponent, ZeroLengthLinksOnlyEqualTimes)
{
    const auto net = make_network({"s", "a", "b", "d"}, "s", "d", 0, {edge("s", "a", {{0, 2}})});
    const CutFunction phi({0, 7, 7, 21});
    const auto c = find_free_component(pinned_graph(net, 20, phi), phi, 20);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->members(), (std::vector<NodeId>{1, 2}));
}

TEST(Normalize, CriticalCutIsAFixedPoint)
{
    const auto net = path_network(5, 1);
    const auto ten = build_ten(net, 6);
    const auto r = max_flow(ten);
    const auto phi = extract_cut_function(min_cut(ten, r.arc_flows), ten);
    const auto norm = normalize_min_cut(net, 6, phi);
    EXPECT_EQ(norm.phi, phi);
    EXPECT_EQ(norm.iterations, 0u);
    EXPECT_EQ(norm.cost, Capacity(25));
}

TEST(Normalize, MovesFreeNodeUpToCriticalTime)
{
    // Both edges at a carry nothing, so every phi(a) gives the same cost.
    const auto net = make_network({"s", "a", "d"}, "s", "d", 1,
                                  {edge("s", "a", {{0, 0}}), edge("a", "d", {{0, 0}}), edge("s", "d", {{0, 1}})});
    const TimeStep horizon = 30;
    const auto norm = normalize_min_cut(net, horizon, CutFunction({0, 10, 31}));
    EXPECT_EQ(norm.cost, Capacity(30));
    EXPECT_TRUE(critical_times(net, horizon).contains(norm.phi[1]) || norm.phi[1] == horizon + 1);
    EXPECT_GT(norm.phi[1], 10);
    EXPECT_GT(norm.iterations, 0u);
}

TEST(Normalize, ReportsNonMinimalInput)
{
    // Raising phi(a) from 10 removes a crossing departure of a->d.
    const auto net = make_network({"s", "a", "d"}, "s", "d", 1,
                                  {edge("s", "a", {{0, 0}}), edge("a", "d", {{0, 1}})});
    try {
        normalize_min_cut(net, 30, CutFunction({0, 10, 31}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAMinCut);
    }
}

TEST(NormalizeProperty, TenMinCutsLandOnCriticalTimes)
{
    for (std::uint64_t k = 0; k < 150; ++k) {
        const auto inst = corpus_instance(402, k);
        const auto& net = inst.network;
        const auto ten = build_ten(net, inst.horizon);
        const auto r = max_flow(ten);
        const auto cut = min_cut(ten, r.arc_flows);
        const auto norm = normalize_min_cut(net, inst.horizon, extract_cut_function(cut, ten));
        EXPECT_EQ(norm.cost, cut.capacity);
        EXPECT_LE(norm.iterations, net.node_count() * static_cast<std::size_t>(inst.horizon + 1));
        const auto crit = critical_times(net, inst.horizon);
        for (TimeStep t : norm.phi.range_within(inst.horizon))
            EXPECT_TRUE(crit.contains(t)) << "instance " << k << " t=" << t;
    }
}

// Every minimum cut function, not only the one the solver finds, normalizes.
// Longer horizons and lengths leave gaps in the critical times, so many
// minimizers have to move.
TEST(NormalizeProperty, EveryEnumeratedMinimizerNormalizes)
{
    CorpusRanges tiny;
    tiny.max_nodes = 4;
    tiny.max_edges = 6;
    tiny.max_tau = 4;
    tiny.min_horizon = 8;
    tiny.max_horizon = 14;
    tiny.max_pieces_per_edge = 2;
    std::size_t moved = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const auto inst = corpus_instance(403, k, tiny);
        const auto all = enumerate_min_cuts(inst.network, inst.horizon);
        const auto crit = critical_times(inst.network, inst.horizon);
        for (const auto& phi : all.minimizers) {
            const auto norm = normalize_min_cut(inst.network, inst.horizon, phi);
            EXPECT_EQ(norm.cost, all.min_cost);
            EXPECT_GE(norm.phi.potential(), phi.potential());
            for (TimeStep t : norm.phi.range_within(inst.horizon))
                EXPECT_TRUE(crit.contains(t)) << "instance " << k;
            moved += norm.iterations > 0 ? 1 : 0;
        }
    }
    EXPECT_GT(moved, 100u);
}

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <hotelcoda/graph.hpp>

#include "oracles.hpp"

using namespace hotelcoda;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> skeleton(const LogRatioGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : g.edges()) out.emplace_back(*g.index_of(e.numerator()), *g.index_of(e.denominator()));
    return out;
}

std::string node_name(std::size_t i) { return "n" + std::to_string(i); }

// Every simple path from s to t as signed edge sequences, by exhaustive DFS.
std::vector<std::vector<PathStep>> all_paths(const LogRatioGraph& g, std::size_t s, std::size_t t) {
    std::vector<std::vector<PathStep>> found;
    std::vector<PathStep> current;
    std::vector<bool> on_path(g.nodes().size(), false);
    auto dfs = [&](auto&& self, std::size_t at) -> void {
        if (at == t) {
            found.push_back(current);
            return;
        }
        on_path[at] = true;
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            const auto head = *g.index_of(g.edges()[e].numerator());
            const auto tail = *g.index_of(g.edges()[e].denominator());
            if (tail == at && !on_path[head]) {
                current.push_back({e, +1});
                self(self, head);
                current.pop_back();
            } else if (head == at && !on_path[tail]) {
                current.push_back({e, -1});
                self(self, tail);
                current.pop_back();
            }
        }
        on_path[at] = false;
    };
    dfs(dfs, s);
    return found;
}

} // namespace

TEST(ValidateGraph, DefaultHotelGraphIsATree) {
    auto g = default_hotel_graph();
    auto r = validate_graph(g);
    EXPECT_TRUE(r.valid);
    EXPECT_TRUE(r.connected);
    EXPECT_TRUE(r.acyclic);
    EXPECT_TRUE(r.unique_paths);
    EXPECT_EQ(r.node_count, 5u);
    EXPECT_EQ(r.edge_count, 4u);
    EXPECT_TRUE(r.cycle.empty());
}

TEST(ValidateGraph, TwoIsolatedNodesAreDisconnected) {
    LogRatioGraph g({}, {"a", "b"});
    auto r = validate_graph(g);
    EXPECT_FALSE(r.valid);
    EXPECT_FALSE(r.connected);
    EXPECT_TRUE(r.acyclic);
    EXPECT_EQ(r.unreachable, std::vector<std::string>{"b"});
}

TEST(ValidateGraph, ExtraEdgeClosesACycle) {
    auto g = default_hotel_graph().with_edge({"X", parts::assets, parts::expenses});
    auto r = validate_graph(g);
    EXPECT_FALSE(r.valid);
    EXPECT_TRUE(r.connected);
    EXPECT_FALSE(r.acyclic);
    EXPECT_FALSE(r.unique_paths);
    // assets - revenue - expenses - assets
    ASSERT_EQ(r.cycle.size(), 4u);
    EXPECT_EQ(r.cycle.front(), r.cycle.back());
    EXPECT_EQ(oracle::count_simple_paths(g.nodes().size(), skeleton(g), *g.index_of(parts::expenses),
                                         *g.index_of(parts::assets)),
              2u);
}

TEST(ValidateGraph, EmptyGraphIsInvalid) {
    LogRatioGraph g({});
    EXPECT_FALSE(validate_graph(g).valid);
}

TEST(LogRatioGraph, RejectsParallelEdgesAndRepeatedNames) {
    EXPECT_THROW(LogRatioGraph({{"a", "x", "y"}, {"b", "y", "x"}}), std::invalid_argument);
    EXPECT_THROW(LogRatioGraph({{"a", "x", "y"}, {"a", "y", "z"}}), std::invalid_argument);
}

TEST(LogRatioGraph, WithEdgeLeavesOriginalUntouched) {
    auto g = default_hotel_graph();
    auto h = g.with_edge({"X", parts::assets, parts::expenses});
    EXPECT_EQ(g.edges().size(), 4u);
    EXPECT_EQ(h.edges().size(), 5u);
    EXPECT_TRUE(validate_graph(g).valid);
}

TEST(DerivePathRatio, AvailableToRevenue) {
    auto g = default_hotel_graph();
    auto p = derive_path_ratio(g, parts::available_room_nights, parts::revenue);
    std::vector<PathStep> expected{{0, +1}, {1, +1}};
    EXPECT_EQ(p.steps, expected);
}

TEST(DerivePathRatio, ReversalNegatesOrientation) {
    auto g = default_hotel_graph();
    auto p = derive_path_ratio(g, parts::revenue, parts::available_room_nights);
    std::vector<PathStep> expected{{1, -1}, {0, -1}};
    EXPECT_EQ(p.steps, expected);
}

// expenses -> revenue runs denominator to numerator of P3 (+1); revenue -> assets
// runs numerator to denominator of P4 (-1). The sum is ln(assets / expenses).
TEST(DerivePathRatio, ExpensesToAssetsMatchesBruteForce) {
    auto g = default_hotel_graph();
    auto paths = all_paths(g, *g.index_of(parts::expenses), *g.index_of(parts::assets));
    ASSERT_EQ(paths.size(), 1u);
    std::vector<PathStep> expected{{2, +1}, {3, -1}};
    EXPECT_EQ(paths[0], expected);
    auto p = derive_path_ratio(g, parts::expenses, parts::assets);
    EXPECT_EQ(p.steps, expected);
    PartVector v{{parts::available_room_nights, 3.0}, {parts::occupied_room_nights, 2.0}, {parts::revenue, 10.0},
                 {parts::expenses, 4.0},              {parts::assets, 25.0}};
    EXPECT_NEAR(evaluate_path_ratio(v, g, p), std::log(25.0 / 4.0), 1e-15);
}

TEST(DerivePathRatio, Errors) {
    auto g = default_hotel_graph();
    EXPECT_THROW(derive_path_ratio(g, "staff", parts::revenue), UnknownPart);
    EXPECT_THROW(derive_path_ratio(g, parts::revenue, "staff"), UnknownPart);
    EXPECT_THROW(derive_path_ratio(g, parts::revenue, parts::revenue), std::invalid_argument);
    auto cyclic = g.with_edge({"X", parts::assets, parts::expenses});
    EXPECT_THROW(derive_path_ratio(cyclic, parts::revenue, parts::assets), InvalidGraph);
}

TEST(EvaluatePathRatio, TelescopesToDirectQuotient) {
    auto g = default_hotel_graph();
    PartVector v{{parts::available_room_nights, 100.0}, {parts::occupied_room_nights, 50.0}, {parts::revenue, 200.0},
                 {parts::expenses, 1.0},                {parts::assets, 1.0}};
    auto p = derive_path_ratio(g, parts::available_room_nights, parts::revenue);
    EXPECT_NEAR(evaluate_path_ratio(v, g, p), std::log(2.0), 1e-15);
    EXPECT_NEAR(evaluate_path_ratio(v, g, p), 0.693147, 1e-6);

    auto back = derive_path_ratio(g, parts::revenue, parts::available_room_nights);
    EXPECT_NEAR(evaluate_path_ratio(v, g, p) + evaluate_path_ratio(v, g, back), 0.0, 1e-15);
}

TEST(EvaluatePathRatio, NonPositivePartPropagates) {
    auto g = default_hotel_graph();
    PartVector v{{parts::available_room_nights, 100.0}, {parts::occupied_room_nights, 0.0}, {parts::revenue, 200.0},
                 {parts::expenses, 1.0},                {parts::assets, 1.0}};
    auto p = derive_path_ratio(g, parts::available_room_nights, parts::revenue);
    EXPECT_THROW(evaluate_path_ratio(v, g, p), NonPositivePart);
}

// All simple graphs on up to 6 labelled nodes: the validator's three predicates
// must match brute-force path counting.
TEST(ValidateGraphProperties, ExhaustiveUpToSixNodes) {
    std::size_t trees = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            std::vector<LogRatioSpec> edges;
            std::vector<std::pair<std::size_t, std::size_t>> sk;
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i));
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (!(mask >> i & 1u)) continue;
                // Alternate orientation; it must not matter.
                auto [a, b] = pairs[i];
                if (i % 2) std::swap(a, b);
                edges.emplace_back("e" + std::to_string(i), node_name(a), node_name(b));
                sk.emplace_back(a, b);
            }
            LogRatioGraph g(edges, names);
            auto r = validate_graph(g);
            ASSERT_EQ(r.connected, oracle::connected(n, sk)) << "n=" << n << " mask=" << mask;
            ASSERT_EQ(r.acyclic, oracle::acyclic(n, sk)) << "n=" << n << " mask=" << mask;
            ASSERT_EQ(r.valid, oracle::every_pair_has_one_path(n, sk)) << "n=" << n << " mask=" << mask;
            ASSERT_EQ(r.valid, r.connected && r.edge_count + 1 == r.node_count);
            trees += r.valid;
        }
    }
    // Cayley: n^(n-2) labelled trees -> 1 + 1 + 3 + 16 + 125 + 1296.
    EXPECT_EQ(trees, 1442u);
}

// Random sparse graphs up to 12 nodes, plus path uniqueness and telescoping on the trees.
TEST(ValidateGraphProperties, RandomGraphsUpToTwelveNodes) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_value(-5.0, 5.0);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        std::vector<std::pair<std::size_t, std::size_t>> sk;
        std::vector<LogRatioSpec> edges;
        std::size_t next_name = 0;
        auto add = [&](std::size_t a, std::size_t b) {
            for (auto [x, y] : sk)
                if ((x == a && y == b) || (x == b && y == a)) return;
            if (rng() % 2) std::swap(a, b);
            edges.emplace_back("e" + std::to_string(next_name++), node_name(a), node_name(b));
            sk.emplace_back(a, b);
        };
        // Random tree, then perturb: drop an edge, add an edge, or both.
        for (std::size_t i = 1; i < n; ++i) add(i, rng() % i);
        const int mode = static_cast<int>(rng() % 4);
        if (mode == 1 || mode == 3) {
            sk.erase(sk.begin());
            edges.erase(edges.begin());
        }
        if (mode >= 2) {
            std::size_t a = rng() % n, b = rng() % n;
            if (a != b) add(a, b);
        }
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(node_name(i));
        LogRatioGraph g(edges, names);
        // Node indices in g are sorted by name, so map the oracle through the names.
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        for (auto [a, b] : sk) mapped.emplace_back(*g.index_of(node_name(a)), *g.index_of(node_name(b)));

        auto r = validate_graph(g);
        ASSERT_EQ(r.connected, oracle::connected(n, mapped));
        ASSERT_EQ(r.acyclic, oracle::acyclic(n, mapped));
        ASSERT_EQ(r.valid, oracle::every_pair_has_one_path(n, mapped));
        ASSERT_EQ(r.valid, r.connected && r.edge_count + 1 == r.node_count);
        if (!r.valid) continue;

        PartVector v;
        for (const auto& name : g.nodes()) v.set(name, std::exp(log_value(rng)));
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t t = 0; t < n; ++t) {
                if (s == t) continue;
                auto brute = all_paths(g, s, t);
                ASSERT_EQ(brute.size(), 1u);
                auto p = derive_path_ratio(g, g.nodes()[s], g.nodes()[t]);
                ASSERT_EQ(p.steps, brute[0]);
                const double direct = std::log(v.at(g.nodes()[t])) - std::log(v.at(g.nodes()[s]));
                ASSERT_NEAR(evaluate_path_ratio(v, g, p), direct, 1e-12);
            }
        }
    }
}

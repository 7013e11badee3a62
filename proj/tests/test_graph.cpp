#include "nnbox/graph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace nnbox;
using namespace nnbox::testing;

namespace {

SmallGraph random_graph(std::mt19937 &rng, int n, double p)
{
    std::bernoulli_distribution edge(p);
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng))
                g.add_edge(i, j);
    return g;
}

} // namespace

TEST(SmallGraph, Basics)
{
    SmallGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_FALSE(g.has_edge(0, 2));
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_THROW(g.add_edge(3, 3), std::invalid_argument);
    EXPECT_THROW(SmallGraph(65), std::invalid_argument);
}

TEST(SmallGraph, CliqueAndIndependentSetAgainstSubsets)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 4 + t % 11;
        auto g = random_graph(rng, n, 0.2 + 0.05 * (t % 12));
        std::vector<int> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 0);
        auto adj = [&](int a, int b) { return g.has_edge(a, b); };
        auto c = max_clique(g);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                EXPECT_TRUE(g.has_edge(c[i], c[j]));
        EXPECT_EQ(clique_number(g), brute_omega(vs, adj));
        std::vector<long> ones(static_cast<std::size_t>(n), 1);
        EXPECT_EQ(max_weight_independent_set(g, ones), brute_alpha(vs, adj));
    }
}

TEST(SmallGraph, WeightedIndependentSet)
{
    // path 0-1-2 with a heavy middle vertex
    SmallGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_EQ(max_weight_independent_set(g, {1, 5, 1}), 5);
    EXPECT_EQ(max_weight_independent_set(g, {3, 5, 3}), 6);
    EXPECT_THROW(max_weight_independent_set(g, {1, 2}), std::invalid_argument);
}

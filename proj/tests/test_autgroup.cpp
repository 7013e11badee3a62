#include "nnbox/autgroup.hpp"
#include "nnbox/profiles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nnbox;
using namespace nnbox::testing;

namespace {

const AutTables &tables()
{
    static const auto t = AutTables::load(fixture("appendix_a.txt"));
    return t;
}

// Permutations of I(s) preserving adjacency, by trying all n! maps (s <= 3).
std::size_t factorial_count(int s)
{
    const auto &sys = interval_system(s);
    std::vector<int> p(static_cast<std::size_t>(sys.size()));
    std::iota(p.begin(), p.end(), 0);
    std::size_t n = 0;
    do
        n += is_automorphism(VertexPerm{s, p});
    while (std::next_permutation(p.begin(), p.end()));
    return n;
}

} // namespace

TEST(AutIntervalGraph, SmallOrders)
{
    EXPECT_EQ(aut_brute_force(1).size(), 2U);
    EXPECT_EQ(aut_brute_force(2).size(), 2U);
    EXPECT_EQ(aut_brute_force(3).size(), 10U);
    for (int s = 1; s <= 3; ++s)
        EXPECT_EQ(aut_brute_force(s).size(), factorial_count(s)) << "s=" << s;
}

TEST(AutIntervalGraph, ClosedFormMatchesBruteForce)
{
    for (int s = 4; s <= 9; ++s) {
        auto brute = aut_brute_force(s);
        auto closed = aut_interval_graph(s, &tables());
        EXPECT_EQ(brute.size(), 8U) << "s=" << s;
        EXPECT_EQ(closed, brute) << "s=" << s;
        EXPECT_TRUE(tables().h_tables_consistent(s));
        EXPECT_EQ(order_profile(brute), dih4_profile());
        for (const auto &g : closed)
            EXPECT_TRUE(is_automorphism(g));
        EXPECT_EQ(tables().element(tables().reflection_row(), s), reflection_perm(s));
    }
}

TEST(AutIntervalGraph, DegreeLemma)
{
    for (int s = 4; s <= 9; ++s) {
        auto deg = degree_profile(s);
        for (const auto &[v, d] : deg)
            EXPECT_EQ(lemma_degree(s, v.lo / 2, v.hi / 2), d) << to_string(v) << " s=" << s;
        for (const auto &g : aut_cached(s))
            for (const auto &[v, d] : deg)
                EXPECT_EQ(deg.at(g(v)), d);
    }
}

TEST(AutIntervalGraph, Expressions)
{
    EXPECT_EQ(eval_expr("s+1-i", 7, 3, 0), 5);
    EXPECT_EQ(eval_expr("2", 7, 3, 0), 2);
    EXPECT_EQ(eval_vertex("s-1:s", 6), iv(5, 6));
    EXPECT_THROW(eval_vertex("s", 6), std::invalid_argument);
}

TEST(ProductGroup, Orders)
{
    EXPECT_EQ(product_group(4, GroupFlavor::A3).size(), 3072U);
    EXPECT_EQ(product_group(5, GroupFlavor::Aut3).size(), 512U);
    auto iso = product_group(5, GroupFlavor::Iso3);
    auto plus = product_group(5, GroupFlavor::Iso3Plus);
    EXPECT_EQ(iso.size(), 48U);
    EXPECT_EQ(plus.size(), 24U);
    EXPECT_TRUE(is_closed(iso));
    EXPECT_TRUE(is_closed(plus));
    EXPECT_TRUE(is_closed(product_group(4, GroupFlavor::Aut3)));
    auto a3_list = product_group(5, GroupFlavor::A3);
    std::set<BoxSymmetry> a3(a3_list.begin(), a3_list.end());
    for (const auto &g : iso)
        EXPECT_TRUE(a3.count(g));
    EXPECT_THROW(product_group(3, GroupFlavor::A3), std::out_of_range);
}

TEST(ProductGroup, ActionIsHomomorphism)
{
    auto g = product_group(4, GroupFlavor::Iso3);
    auto b = parse_box<3>("[0,1]x[1,3]x[2,4]");
    for (const auto &x : g)
        for (const auto &y : g)
            EXPECT_EQ(x.compose(y)(b), x(y(b)));
}

TEST(ProductGroup, OrientationSign)
{
    EXPECT_EQ(perm_sign({0, 1, 2}), 1);
    EXPECT_EQ(perm_sign({1, 0, 2}), -1);
    EXPECT_EQ(perm_sign({1, 2, 0}), 1);
}

TEST(Orbits, IntegersModuloRotation)
{
    // Z4 acting on {0..7} by x -> x + 2 mod 8
    std::vector<int> group{0, 2, 4, 6};
    std::vector<int> targets{0, 1, 2, 3, 4, 5, 6, 7};
    auto os = orbits(group, targets, [](int g, int x) { return (x + g) % 8; });
    ASSERT_EQ(os.size(), 2U);
    EXPECT_EQ(os[0].members, (std::vector<int>{0, 2, 4, 6}));
    EXPECT_EQ(os[0].stabilizer_order, 1U);
    EXPECT_THROW(orbits(group, std::vector<int>{0, 1}, [](int g, int x) { return (x + g) % 8; }), std::runtime_error);
}

TEST(CanonicalRep, NamedProfilesInvariant)
{
    auto named = load_named_profiles(fixture("profiles.txt"));
    EXPECT_EQ(canonical_rep(named.at("clubs"), 4), canonical_rep(named.at("clubs"), 4));
    for (const auto &g : aut_cached(4))
        EXPECT_EQ(named.at("clubs").pushforward([&](const Interval &i) { return g(i); }), named.at("clubs"));
    for (const auto &g : aut_cached(5))
        EXPECT_EQ(named.at("spades").pushforward([&](const Interval &i) { return g(i); }), named.at("spades"));
}

TEST(CanonicalRep, ReflectedTableRow)
{
    auto t = load_profile_table(fixture("appendix_b.txt"), 5, 12);
    ASSERT_TRUE(t.has_value());
    const auto &row = t->rows.front().profile.lambda;
    auto refl = row.pushforward([](const Interval &i) { return reflect(i, 5); });
    EXPECT_EQ(canonical_rep(refl, 5), canonical_rep(row, 5));
    for (const auto &g : aut_cached(5))
        EXPECT_EQ(canonical_rep(row.pushforward([&](const Interval &i) { return g(i); }), 5), canonical_rep(row, 5));
}

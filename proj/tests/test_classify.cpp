#include "nnbox/stages.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nnbox;
using namespace nnbox::testing;

namespace {

const FixtureBundle &fx()
{
    static const auto b = FixtureBundle::load(fixture_dir());
    return b;
}

const std::vector<BoxList> &family(const std::string &suit)
{
    static std::map<std::string, std::vector<BoxList>> cache;
    auto it = cache.find(suit);
    if (it == cache.end())
        it = cache.emplace(suit, clique_family(fx(), suit)).first;
    return it->second;
}

std::vector<Perm> listed_group(const std::string &name)
{
    std::vector<Perm> out;
    for (const auto &r : fx().automorphisms.section(name))
        out.push_back(parse_cycles(join_row(r), 12));
    std::sort(out.begin(), out.end());
    return out;
}

// Direct check that pi preserves the matrix for some axis relabelling.
bool preserves(const CodeMatrix &a, const Perm &pi)
{
    for (const auto &sg : all_axis_perms())
        if (witness_valid(a, a, IsoWitness{pi, sg}))
            return true;
    return false;
}

int perm_order_of(const Perm &p)
{
    Perm id(p.size());
    std::iota(id.begin(), id.end(), 0);
    Perm q = p;
    int k = 1;
    while (q != id) {
        q = compose(p, q);
        ++k;
    }
    return k;
}

} // namespace

TEST(Matrices, EqualTabulated)
{
    for (const std::string name : {"d1", "d2", "c1", "c2"})
        EXPECT_EQ(adjacency_matrix(load_clique(fx().cliques, name)), load_matrix(fx().matrices, name)) << name;
    auto d1 = adjacency_matrix(load_clique(fx().cliques, "d1"));
    EXPECT_EQ(d1[0][7], 4);
    EXPECT_EQ(zero_entries(d1), 0U);
    EXPECT_GT(zero_entries(adjacency_matrix(load_clique(fx().cliques, "c1_printed"))), 0U);
}

TEST(Automorphisms, ListedGroupsOfD)
{
    for (const std::string name : {"d1", "d2"}) {
        auto a = adjacency_matrix(load_clique(fx().cliques, name));
        auto perms = automorphism_perms(automorphisms(a));
        EXPECT_EQ(perms, listed_group(name)) << name;
        EXPECT_EQ(perms.size(), 24U);
        EXPECT_TRUE(is_group(perms));
        for (const auto &p : perms)
            EXPECT_TRUE(preserves(a, p));
        EXPECT_EQ(protoautomorphisms(a).size(), 48U) << name;
    }
    auto orders = [](const std::string &n) {
        std::set<int> o;
        for (const auto &p : listed_group(n))
            o.insert(perm_order_of(p));
        return o;
    };
    EXPECT_TRUE(orders("d2").count(12));
    EXPECT_FALSE(orders("d1").count(12));
    EXPECT_EQ(center_size(listed_group("d1")), 2U);
    EXPECT_EQ(center_size(listed_group("d2")), 6U);
}

TEST(Automorphisms, ExampleOne)
{
    auto c = load_clique(fx().cliques, "example1");
    auto a = adjacency_matrix(c);
    auto perms = automorphism_perms(automorphisms(a));
    EXPECT_EQ(perms.size(), 48U);
    std::vector<Perm> gens;
    for (const auto &r : fx().automorphisms.section("example1_generators"))
        gens.push_back(parse_cycles(join_row(r), 12));
    auto g = generate_group(gens);
    EXPECT_EQ(std::vector<Perm>(g.begin(), g.end()), perms);
}

TEST(Protoautomorphisms, GroupContainingAutomorphisms)
{
    auto a = adjacency_matrix(load_clique(fx().cliques, "example1"));
    auto proto = protoautomorphisms(a);
    auto aut = automorphism_perms(automorphisms(a));
    EXPECT_TRUE(is_group(proto));
    EXPECT_TRUE(std::includes(proto.begin(), proto.end(), aut.begin(), aut.end()));
    // Lagrange: the order is a multiple of |Aut| = 48
    EXPECT_EQ(proto.size() % aut.size(), 0U);
    EXPECT_EQ(proto.size(), 3072U);
    auto b = proto_matrix(a);
    for (std::size_t k = 0; k < proto.size(); k += 37)
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j)
                ASSERT_EQ(b[static_cast<std::size_t>(proto[k][i])][static_cast<std::size_t>(proto[k][j])], b[i][j]);
}

TEST(Families, EquivalenceClassesAndOrbits)
{
    EXPECT_EQ(family("clubs").size(), 64U);
    EXPECT_EQ(family("spades").size(), 256U);
    EXPECT_EQ(equivalence_classes(family("clubs")).size(), 1U);
    auto sp = equivalence_classes(family("spades"));
    EXPECT_EQ(sp.size(), 2U);
    auto a3 = clique_orbits(product_group(4, GroupFlavor::A3), family("clubs"));
    ASSERT_EQ(a3.size(), 1U);
    EXPECT_EQ(a3[0].stabilizer_order, 48U);
    EXPECT_EQ(clique_orbits(product_group(5, GroupFlavor::A3), family("spades")).size(), 2U);
    std::vector<std::size_t> lens;
    for (const auto &o : clique_orbits(product_group(5, GroupFlavor::Aut3), family("spades")))
        lens.push_back(o.members.size());
    std::sort(lens.begin(), lens.end());
    EXPECT_EQ(lens, (std::vector<std::size_t>{64, 64, 128}));
    // the clubs and spades cliques are never equivalent
    EXPECT_FALSE(are_isomorphic(family("clubs")[0], family("spades")[0]));
}

TEST(Families, WitnessesConjugateMatrices)
{
    const auto &f = family("spades");
    auto cls = equivalence_classes(f);
    for (const auto &c : cls)
        for (std::size_t k = 1; k < c.size(); k += 17) {
            auto w = are_isomorphic(f[c[0]], f[c[k]]);
            ASSERT_TRUE(w);
            EXPECT_TRUE(witness_valid(adjacency_matrix(f[c[0]]), adjacency_matrix(f[c[k]]), *w));
        }
}

TEST(Chirality, Tables)
{
    for (const std::string suit : {"clubs", "spades"}) {
        const int s = suit_level(suit);
        auto rep = chirality_report(family(suit), s);
        auto rows = load_chirality_rows(fx().chirality, suit, DigitCode::load(fx().chirality, "digits_" + suit));
        EXPECT_EQ(rows.size(), rep.proper.size());
        auto plus = clique_orbits(product_group(s, GroupFlavor::Iso3Plus), family(suit));
        std::set<std::size_t> used;
        std::map<std::string, std::set<std::size_t>> full_of_block;
        std::set<int> achiral;
        std::size_t total = 0;
        for (const auto &r : rows) {
            total += r.length;
            bool found = false;
            for (std::size_t k = 0; k < plus.size(); ++k) {
                const auto &m = plus[k].members;
                if (!std::binary_search(m.begin(), m.end(), r.clique))
                    continue;
                found = true;
                EXPECT_TRUE(used.insert(k).second) << suit << " row " << r.number;
                EXPECT_EQ(m.size(), r.length) << suit << " row " << r.number;
                full_of_block[r.sub_block].insert(rep.proper[k].full_orbit);
                if (rep.proper[k].achiral)
                    achiral.insert(r.number);
            }
            EXPECT_TRUE(found) << suit << " row " << r.number;
        }
        EXPECT_EQ(total, family(suit).size());
        for (const auto &[b, fulls] : full_of_block)
            EXPECT_EQ(fulls.size(), 1U) << suit << " sub-block " << b;
        if (suit == "clubs")
            EXPECT_TRUE(achiral.empty());
        else
            EXPECT_EQ(achiral, (std::set<int>{15, 16}));
    }
}

TEST(Chirality, DigitCodeRoundTrip)
{
    auto code = DigitCode::load(fx().chirality, "digits_spades");
    auto b = code.decode("177");
    EXPECT_EQ(code.encode(b), "177");
    EXPECT_THROW(code.decode("19"), std::invalid_argument);
    EXPECT_THROW(code.decode("199"), std::invalid_argument);
}

TEST(Compressible, Examples)
{
    for (const std::string k : {"1", "2"}) {
        auto c = load_clique(fx().cliques, "c" + k);
        auto d = load_clique(fx().cliques, "d" + k);
        auto r = verify_compressible(c, load_matrix(fx().matrices, "c" + k), d);
        EXPECT_TRUE(r.cliques);
        EXPECT_TRUE(r.matrices_match);
        EXPECT_TRUE(r.below);
        EXPECT_TRUE(r.maps_onto);
        EXPECT_EQ(r.aut_order, 8U);
        EXPECT_EQ(r.aut_profile, dih4_profile());
    }
    EXPECT_FALSE(are_isomorphic(load_clique(fx().cliques, "c1"), load_clique(fx().cliques, "c2")));
    EXPECT_FALSE(is_clique(load_clique(fx().cliques, "c1_printed")));
}

TEST(Compressible, DegenerationsGiveFiveTypes)
{
    std::vector<BoxList> all = family("clubs");
    all.insert(all.end(), family("spades").begin(), family("spades").end());
    const std::size_t incompressible = equivalence_classes(all).size();
    EXPECT_EQ(incompressible, 3U);
    for (const std::string k : {"1", "2"}) {
        auto deg = explore_degenerations(load_clique(fx().cliques, "d" + k));
        auto c = load_clique(fx().cliques, "c" + k);
        EXPECT_TRUE(std::any_of(deg.begin(), deg.end(), [&](const BoxList &x) { return are_isomorphic(x, c).has_value(); }))
            << "c" << k;
        all.insert(all.end(), deg.begin(), deg.end());
    }
    EXPECT_EQ(equivalence_classes(all).size(), 5U);
}

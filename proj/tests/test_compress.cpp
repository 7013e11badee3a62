#include "nnbox/compress.hpp"
#include "nnbox/planar.hpp"
#include "nnbox/profiles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nnbox;
using namespace nnbox::testing;

namespace {

const auto &named()
{
    static const auto m = load_named_profiles(fixture("profiles.txt"));
    return m;
}

// Exhaustive: is there any map of the support into I(t) preserving adjacency?
bool brute_has_homomorphism(const std::vector<Interval> &src, int t)
{
    const auto &sys = interval_system(t);
    std::vector<int> img(src.size(), 0);
    const auto n = static_cast<std::size_t>(sys.size());
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < src.size() && ok; ++i)
            for (std::size_t j = i + 1; j < src.size() && ok; ++j)
                if (adjacent(src[i], src[j]) &&
                    !adjacent(sys.vertex(img[i]), sys.vertex(img[j])))
                    ok = false;
        if (ok)
            return true;
        std::size_t k = 0;
        while (k < img.size() && static_cast<std::size_t>(++img[k]) == n)
            img[k++] = 0;
        if (k == img.size())
            return false;
    }
}

} // namespace

TEST(Skeleton, Members)
{
    auto s3 = skeleton(3).members;
    EXPECT_EQ(s3, (std::vector<Interval>{iv(0, 1), iv(1, 2), iv(1, 3), iv(2, 3), iv(3, 4)}));
    auto s4 = skeleton(4).members;
    EXPECT_EQ(s4.size(), 7U);
    EXPECT_TRUE(std::count(s4.begin(), s4.end(), iv(2, 4)));
    auto s9 = skeleton(9).members;
    EXPECT_EQ(s9.size(), 12U);
    EXPECT_TRUE(std::count(s9.begin(), s9.end(), iv(7, 9)));
    EXPECT_THROW(skeleton(2), std::invalid_argument);
}

TEST(Normalize, SmallCases)
{
    auto r = normalize(std::vector<Interval>{iv(0, 1), iv(1, 2), iv(2, 3)});
    EXPECT_EQ(r.s, 1);
    EXPECT_TRUE(is_homomorphism(r.image));
    EXPECT_EQ(normalize(std::vector<Interval>{iv(0, 1)}).s, 0);
    // odd-length intervals: [a,b] -> [a mod 2, a mod 2 + 1]
    auto odd = normalize(std::vector<Interval>{iv(0, 1), iv(1, 4), iv(4, 7), iv(2, 5), iv(0, 3)});
    EXPECT_EQ(odd.s, 1);
}

TEST(Normalize, ShomPropertiesOnRandomFamilies)
{
    std::mt19937 rng(17);
    for (int t = 0; t < 400; ++t) {
        std::vector<Interval> fam;
        for (int k = 0; k < 2 + t % 6; ++k)
            fam.push_back(random_interval(rng, 8));
        auto r = normalize(fam);
        EXPECT_TRUE(is_homomorphism(r.image));
        auto img = r.image_set();
        for (int i = 0; i <= r.s; ++i)
            EXPECT_TRUE(img.count(iv(i, i + 1))) << "unit " << i << " missing at s=" << r.s;
        if (r.s >= 3) {
            EXPECT_TRUE(img.count(iv(1, 3)));
            EXPECT_TRUE(img.count(iv(r.s - 2, r.s)));
        }
        if (r.s >= 1 && fam.size() <= 5 && r.s <= 4) {
            std::set<Interval> d(fam.begin(), fam.end());
            EXPECT_FALSE(brute_has_homomorphism({d.begin(), d.end()}, r.s - 1));
        }
    }
}

TEST(Incompressible, NamedProfiles)
{
    EXPECT_TRUE(is_incompressible(named().at("clubs"), 4));
    EXPECT_TRUE(is_incompressible(named().at("spades"), 5));
    EXPECT_TRUE(is_incompressible(named().at("bar"), 9));
    EXPECT_FALSE(is_incompressible(parse_combination("[0,1] [1,2] [2,3]"), 2));
    EXPECT_THROW(is_incompressible(parse_combination("[0,2]"), 3), std::invalid_argument);
}

TEST(Incompressible, SkeletonInsideSupport)
{
    for (const auto &[name, c] : named()) {
        auto r = normalize(c);
        if (r.s < 3)
            continue;
        auto sup = c.support();
        for (const auto &i : skeleton(r.s).members)
            EXPECT_TRUE(std::count(sup.begin(), sup.end(), i)) << name << " misses " << to_string(i);
    }
}

TEST(Bounds, Suite)
{
    std::mt19937 rng(23);
    BoundSamples samples;
    for (int t = 0; t < 200; ++t)
        samples.combinations.push_back(random_combination(rng, 4 + t % 4, 6 + t % 7));
    auto g = five_cycle(0, 1, 2, 3, 4);
    for (const auto &l : derive_labelings())
        samples.cliques2.push_back(clique_from_labeling(g, g, l));
    samples.cliques3.push_back(parse_boxes<3>(fixture("cliques.txt").section("example1")));
    EXPECT_TRUE(check_bounds_suite(samples).empty());
}

TEST(Bounds, ProductClique)
{
    auto g = five_cycle(0, 1, 2, 3, 4);
    auto a = clique_from_labeling(g, g, derive_labelings().front());
    auto p = product_family(a, a);
    EXPECT_EQ(p.size(), 25U);
    EXPECT_TRUE(is_clique(p));
    EXPECT_EQ(known_b(2) * known_b(2), 25);
}

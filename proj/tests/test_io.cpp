#include "nnbox/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nnbox;
using namespace nnbox::testing;

TEST(Hash, FnvVectors)
{
    EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
    EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
    EXPECT_EQ(hex64(fnv1a64("foobar")), "85944171f73967e8");
    EXPECT_NE(content_hash(json::array({1, 2})), content_hash(json::array({2, 1})));
}

TEST(Json, CliqueRoundTrip)
{
    auto c = parse_boxes<3>(fixture("cliques.txt").section("c1"));
    auto j = to_json(c);
    EXPECT_EQ(j[8][0], json::array({5, 10}));
    EXPECT_EQ(boxes_from_json(json::parse(j.dump())), c);
}

TEST(Json, ProfileAndMatrix)
{
    auto named = load_named_profiles(fixture("profiles.txt"));
    auto p = make_profile(5, named.at("star"));
    auto j = to_json(p);
    EXPECT_EQ(j["edges"], 22);
    EXPECT_EQ(j["type"], "II");
    EXPECT_EQ(j["lambda"][0]["vertex"], json::array({0, 2}));
    EXPECT_EQ(j["lambda"][0]["count"], 1);
    EXPECT_EQ(matrix_csv({{0, 1}, {1, 0}}), "0,1\n1,0\n");
}

TEST(Obj, CentredCuboids)
{
    auto c = parse_boxes<3>(fixture("cliques.txt").section("example1"));
    auto obj = boxes_obj(c, "example1");
    std::istringstream in(obj);
    std::size_t verts = 0;
    std::size_t faces = 0;
    std::size_t objects = 0;
    std::array<double, 3> lo{1e9, 1e9, 1e9};
    std::array<double, 3> hi{-1e9, -1e9, -1e9};
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            ++verts;
            for (std::size_t k = 0; k < 3; ++k) {
                double x = 0;
                ls >> x;
                lo[k] = std::min(lo[k], x);
                hi[k] = std::max(hi[k], x);
            }
        } else if (tag == "f") {
            ++faces;
            int a = 0;
            int n = 0;
            while (ls >> a) {
                EXPECT_GE(a, 1);
                EXPECT_LE(a, static_cast<int>(8 * c.size()));
                ++n;
            }
            EXPECT_EQ(n, 4);
        } else if (tag == "o") {
            ++objects;
        }
    }
    EXPECT_EQ(verts, 96U);
    EXPECT_EQ(faces, 72U);
    EXPECT_EQ(objects, 12U);
    for (std::size_t k = 0; k < 3; ++k)
        EXPECT_DOUBLE_EQ(lo[k], -hi[k]);
    EXPECT_THROW(boxes_obj({}, "x"), std::invalid_argument);
}

TEST(Stage, WritesDocumentAndRecord)
{
    auto dir = std::filesystem::temp_directory_path() / "nnbox-io-test";
    std::filesystem::remove_all(dir);
    json items = json::array({"a", "b", "c"});
    auto rec = write_stage(dir, "demo", json{{"v", 12}}, items, 0.5);
    EXPECT_EQ(rec.count, 3U);
    EXPECT_EQ(rec.hash, content_hash(items));
    auto doc = json::parse(read_text(dir / "demo.json"));
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["items"], items);
    EXPECT_EQ(doc["parameters"]["v"], 12);
    std::filesystem::remove_all(dir);
    EXPECT_THROW(read_text(dir / "missing.json"), std::runtime_error);
}

TEST(Svg, WellFormedShapes)
{
    auto svg = profile_svg(parse_combination("2[0,1] [1,3]"), "demo");
    EXPECT_EQ(svg.rfind("<svg", 0), 0U);
    std::size_t rects = 0;
    for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1))
        ++rects;
    EXPECT_EQ(rects, 3U);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

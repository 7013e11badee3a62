#pragma once

// Serialisation of stage artifacts: JSON, CSV, Wavefront OBJ and SVG, plus
// a 64-bit FNV-1a content hash.

#include "classify.hpp"
#include "core.hpp"
#include "pipeline.hpp"
#include "planar.hpp"
#include "profiles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace nnbox {

using json = nlohmann::ordered_json;

inline std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t h)
{
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

inline std::string content_hash(const json &j) { return hex64(fnv1a64(j.dump())); }

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const Interval &i) { return json::array({i.lo, i.hi}); }

template <std::size_t N>
json to_json(const Box<N> &b)
{
    json a = json::array();
    for (const auto &i : b)
        a.push_back(to_json(i));
    return a;
}

template <class V>
json to_json(const Combination<V> &c)
{
    json a = json::array();
    for (const auto &[x, k] : c.terms())
        a.push_back(json{{"vertex", to_json(x)}, {"count", k}});
    return a;
}

inline json to_json(const BoxList &c)
{
    json a = json::array();
    for (const auto &b : c)
        a.push_back(to_json(b));
    return a;
}

inline json to_json(const FiveCycle &g)
{
    json a = json::array();
    for (int x : g.a)
        a.push_back(x);
    return a;
}

inline json to_json(const Profile &p)
{
    return json{{"s", p.s}, {"lambda", to_json(p.lambda)}, {"edges", p.edges},
        {"type", p.type == ProfileType::I ? "I" : "II"}};
}

inline json to_json(const Quadruple &q)
{
    return json{{"lambda1", to_json(q.l1)}, {"lambda2", to_json(q.l2)}, {"lambda3", to_json(q.l3)},
        {"lambda", to_json(q.lambda)}};
}

inline json to_json(const FlatQuadruple &f)
{
    return json{{"phi1", to_json(f.phi1)}, {"phi2", to_json(f.phi2)}, {"phi3", to_json(f.phi3)}};
}

inline json to_json(const CyclePair &p) { return json::array({to_json(p.first), to_json(p.second)}); }

template <class T>
json to_json(const std::vector<T> &v)
{
    json a = json::array();
    for (const auto &x : v)
        a.push_back(to_json(x));
    return a;
}

inline json to_json(const CodeMatrix &m) { return json(m); }

inline std::string matrix_csv(const CodeMatrix &m)
{
    std::ostringstream o;
    for (const auto &row : m) {
        for (std::size_t j = 0; j < row.size(); ++j)
            o << (j ? "," : "") << row[j];
        o << '\n';
    }
    return o.str();
}

inline BoxList boxes_from_json(const json &j)
{
    BoxList out;
    for (const auto &b : j) {
        Box<3> x;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto &i = b.at(k);
            x[k] = i.is_string() ? parse_interval(i.get<std::string>()) : Interval{i.at(0).get<int>(), i.at(1).get<int>()};
            if (x[k].lo >= x[k].hi)
                throw std::invalid_argument("boxes_from_json: empty interval");
        }
        out.push_back(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Manifest

struct StageRecord {
    std::string stage;
    json parameters;
    std::size_t count = 0;
    std::string hash;
    double seconds = 0;
};

inline json to_json(const StageRecord &r)
{
    return json{{"stage", r.stage}, {"parameters", r.parameters}, {"count", r.count}, {"hash", r.hash},
        {"seconds", r.seconds}};
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void write_text(const std::filesystem::path &p, const std::string &text)
{
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    out << text;
}

inline std::string read_text(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Writes {"schema": 1, "stage": ..., "items": ...} and returns its record.
inline StageRecord write_stage(const std::filesystem::path &dir, const std::string &stage, const json &params,
    const json &items, double seconds)
{
    json doc{{"schema", 1}, {"stage", stage}, {"parameters", params}, {"items", items}};
    write_text(dir / (stage + ".json"), doc.dump(1) + "\n");
    return StageRecord{stage, params, items.size(), content_hash(items), seconds};
}

// ---------------------------------------------------------------------------
// Geometry

/// Wavefront OBJ with one cuboid object per box, translated so that the
/// circumscribed box is centred at the origin.
inline std::string boxes_obj(const BoxList &c, const std::string &name)
{
    if (c.empty())
        throw std::invalid_argument("boxes_obj: empty family");
    std::array<int, 3> lo{};
    std::array<int, 3> hi{};
    for (std::size_t k = 0; k < 3; ++k) {
        lo[k] = c[0][k].lo;
        hi[k] = c[0][k].hi;
        for (const auto &b : c) {
            lo[k] = std::min(lo[k], b[k].lo);
            hi[k] = std::max(hi[k], b[k].hi);
        }
    }
    std::ostringstream o;
    o << "# " << name << ": " << c.size() << " boxes\n";
    auto coord = [&](int doubled, std::size_t k) { return (2.0 * doubled - lo[k] - hi[k]) / 4.0; };
    // corner bit k set means the upper end on axis k
    static constexpr int faces[6][4] = {
        {0, 2, 6, 4}, {1, 5, 7, 3}, {0, 4, 5, 1}, {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 6, 7, 5}};
    for (std::size_t n = 0; n < c.size(); ++n) {
        o << "o box" << n + 1 << '\n';
        for (int corner = 0; corner < 8; ++corner) {
            o << 'v';
            for (std::size_t k = 0; k < 3; ++k)
                o << ' ' << coord((corner >> k) & 1 ? c[n][k].hi : c[n][k].lo, k);
            o << '\n';
        }
        const auto base = static_cast<int>(8 * n) + 1;
        for (const auto &f : faces)
            o << "f " << base + f[0] << ' ' << base + f[1] << ' ' << base + f[2] << ' ' << base + f[3] << '\n';
    }
    return o.str();
}

namespace detail {

    inline constexpr const char *palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
        "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#d62728"};

    inline void svg_clique_group(std::ostringstream &o, const Clique2 &c, double x0, double y0, double unit,
        const std::string &caption)
    {
        int hi_y = 0;
        for (const auto &b : c)
            hi_y = std::max(hi_y, b[1].hi);
        o << "<g>\n";
        for (std::size_t k = 0; k < c.size(); ++k) {
            const auto &b = c[k];
            double x = x0 + unit * b[0].lo / 2.0;
            double y = y0 + unit * (hi_y - b[1].hi) / 2.0;
            o << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << unit * (b[0].hi - b[0].lo) / 2.0
              << "\" height=\"" << unit * (b[1].hi - b[1].lo) / 2.0 << "\" fill=\"" << palette[k % 12]
              << "\" fill-opacity=\"0.45\" stroke=\"black\"/>\n";
        }
        o << "<text x=\"" << x0 << "\" y=\"" << y0 + unit * hi_y / 2.0 + 16 << "\" font-size=\"12\">" << caption
          << "</text>\n</g>\n";
    }

} // namespace detail

/// Planar cliques drawn side by side, one panel each.
inline std::string cliques_svg(const std::vector<Clique2> &cliques, const std::vector<std::string> &captions)
{
    const double unit = 30;
    const double panel = 6 * unit;
    const std::size_t per_row = 5;
    const std::size_t rows = (cliques.size() + per_row - 1) / per_row;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel * static_cast<double>(std::min(per_row, cliques.size()))
      << "\" height=\"" << (panel + 20) * static_cast<double>(rows) << "\">\n";
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        double x0 = 10 + panel * static_cast<double>(k % per_row);
        double y0 = 10 + (panel + 20) * static_cast<double>(k / per_row);
        detail::svg_clique_group(o, cliques[k], x0, y0, unit, k < captions.size() ? captions[k] : "");
    }
    o << "</svg>\n";
    return o.str();
}

/// A combination drawn as stacked horizontal bars, one per copy of an interval.
inline std::string profile_svg(const IntervalCombination &c, const std::string &caption)
{
    const double unit = 40;
    const double bar = 12;
    int right = 0;
    for (const auto &i : c.support())
        right = std::max(right, i.hi);
    auto items = c.expand();
    std::ostringstream o;
    const double width = unit * right / 2.0 + 40;
    const double height = (bar + 4) * static_cast<double>(items.size()) + 50;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    for (int t = 0; t <= right / 2; ++t)
        o << "<line x1=\"" << 20 + unit * t << "\" y1=\"10\" x2=\"" << 20 + unit * t << "\" y2=\"" << height - 30
          << "\" stroke=\"#ccc\"/>\n";
    for (std::size_t k = 0; k < items.size(); ++k) {
        const auto &i = items[k];
        o << "<rect x=\"" << 20 + unit * i.lo / 2.0 << "\" y=\"" << 14 + (bar + 4) * static_cast<double>(k)
          << "\" width=\"" << unit * (i.hi - i.lo) / 2.0 << "\" height=\"" << bar
          << "\" fill=\"#4e79a7\" stroke=\"black\"/>\n";
    }
    o << "<text x=\"20\" y=\"" << height - 10 << "\" font-size=\"12\">" << caption << "</text>\n</svg>\n";
    return o.str();
}

} // namespace nnbox

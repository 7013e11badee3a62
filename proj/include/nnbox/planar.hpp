#pragma once

// 5-cycles in the interval graph, the planar construction problem and its
// ten labelings, and the maximum clique size in dimension two.

#include "compress.hpp"
#include "core.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "interval_graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnbox {

/// Gamma = {[a_k, a_{k+1}] : k = 0..3} u {[a_1, a_3]}, in pentagon order.
struct FiveCycle {
    std::array<int, 5> a{}; // doubled endpoints, strictly increasing

    std::array<Interval, 5> intervals() const
    {
        return {Interval{a[0], a[1]}, Interval{a[1], a[2]}, Interval{a[2], a[3]}, Interval{a[3], a[4]},
            Interval{a[1], a[3]}};
    }

    IntervalCombination combination() const
    {
        auto iv5 = intervals();
        return IntervalCombination::from_range(iv5);
    }

    auto operator<=>(const FiveCycle &) const = default;
};

inline FiveCycle five_cycle(int a0, int a1, int a2, int a3, int a4)
{
    if (!(a0 < a1 && a1 < a2 && a2 < a3 && a3 < a4))
        throw std::invalid_argument("breakpoints must increase");
    return FiveCycle{{2 * a0, 2 * a1, 2 * a2, 2 * a3, 2 * a4}};
}

/// Whether the intervals are five distinct vertices inducing a 5-cycle.
inline bool is_five_cycle(const std::vector<Interval> &v)
{
    std::set<Interval> d(v.begin(), v.end());
    if (d.size() != 5 || v.size() != 5)
        return false;
    std::vector<Interval> x(d.begin(), d.end());
    auto g = SmallGraph::from_vertices(x, [](const Interval &p, const Interval &q) { return adjacent(p, q); });
    for (int k = 0; k < 5; ++k)
        if (popcount(g.neighbours(k)) != 2)
            return false;
    // 2-regular on five vertices is a 5-cycle unless it splits into smaller
    // cycles, which needs a triangle
    return clique_number(g) == 2;
}

/// The unique FiveCycle whose combination equals the given one.
inline std::optional<FiveCycle> as_five_cycle(const IntervalCombination &c)
{
    if (c.size() != 5 || c.support_size() != 5)
        return std::nullopt;
    auto sup = c.support();
    if (!is_five_cycle(sup))
        return std::nullopt;
    std::set<int> ends;
    for (const auto &i : sup) {
        ends.insert(i.lo);
        ends.insert(i.hi);
    }
    if (ends.size() != 5)
        return std::nullopt;
    FiveCycle f;
    std::copy(ends.begin(), ends.end(), f.a.begin());
    if (f.combination() != c)
        return std::nullopt;
    return f;
}

/// All 5-cycles with support in I(s), from the breakpoint description.
inline std::vector<FiveCycle> enumerate_5cycles(int s)
{
    if (s < 0 || s > max_level)
        throw std::out_of_range("enumerate_5cycles: level out of range");
    const auto &sys = interval_system(s);
    std::vector<FiveCycle> out;
    for (int a0 = 0; a0 <= s + 1; ++a0)
        for (int a1 = a0 + 1; a1 <= s + 1; ++a1)
            for (int a2 = a1 + 1; a2 <= s + 1; ++a2)
                for (int a3 = a2 + 1; a3 <= s + 1; ++a3)
                    for (int a4 = a3 + 1; a4 <= s + 1; ++a4) {
                        auto f = five_cycle(a0, a1, a2, a3, a4);
                        bool inside = true;
                        for (const auto &i : f.intervals())
                            inside = inside && sys.contains(i);
                        if (inside)
                            out.push_back(f);
                    }
    return out;
}

/// All induced 5-cycles among the vertices of I(s), by subset search.
inline std::vector<IntervalCombination> enumerate_5cycles_brute(int s)
{
    const auto &sys = interval_system(s);
    const int n = sys.size();
    std::vector<IntervalCombination> out;
    std::vector<int> pick;
    auto rec = [&](auto &&self, int from) -> void {
        if (pick.size() == 5) {
            std::vector<Interval> v;
            for (int k : pick)
                v.push_back(sys.vertex(k));
            if (is_five_cycle(v))
                out.push_back(IntervalCombination::from_range(v));
            return;
        }
        for (int k = from; k < n; ++k) {
            // degree inside the chosen set never exceeds two
            int deg = 0;
            bool ok = true;
            for (int j : pick) {
                if ((sys.neighbours(k) >> j) & 1U) {
                    ++deg;
                    int dj = 0;
                    for (int t : pick)
                        dj += static_cast<int>((sys.neighbours(j) >> t) & 1U);
                    if (dj >= 2)
                        ok = false;
                }
            }
            if (!ok || deg > 2)
                continue;
            pick.push_back(k);
            self(self, k + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest s with supp Gamma inside I(s): a3 if a4 = a3 + 1, else a4.
inline int sep(const FiveCycle &g)
{
    int a3 = g.a[3] / 2;
    int a4 = g.a[4] / 2;
    return a4 == a3 + 1 ? a3 : a4;
}

// ---------------------------------------------------------------------------
// Labelings

using Labeling = std::array<int, 5>; // l_1..l_5, values 1..5

inline Labeling parse_labeling(const std::string &digits)
{
    if (digits.size() != 5)
        throw std::invalid_argument("labeling needs five digits");
    Labeling l{};
    std::set<int> seen;
    for (std::size_t k = 0; k < 5; ++k) {
        l[k] = digits[k] - '0';
        if (l[k] < 1 || l[k] > 5 || !seen.insert(l[k]).second)
            throw std::invalid_argument("labeling must be a permutation of 12345: " + digits);
    }
    return l;
}

inline std::string labeling_string(const Labeling &l)
{
    std::string s;
    for (int x : l)
        s += static_cast<char>('0' + x);
    return s;
}

inline std::vector<Labeling> load_labelings(const FixtureFile &f)
{
    std::vector<Labeling> out;
    for (const auto &r : f.section("labelings"))
        out.push_back(parse_labeling(r.at(0)));
    return out;
}

/// Pentagon adjacency on labels 1..5.
inline bool pentagon_adjacent(int x, int y)
{
    int d = (x - y + 5) % 5;
    return d == 1 || d == 4;
}

/// Cyclic sequences l_1..l_5 whose consecutive labels are never pentagon
/// neighbours: the Hamiltonian cycles of the pentagram, with every starting
/// point and direction.
inline std::vector<Labeling> derive_labelings()
{
    std::vector<Labeling> out;
    Labeling p{1, 2, 3, 4, 5};
    do {
        bool ok = true;
        for (std::size_t k = 0; k < 5 && ok; ++k)
            ok = !pentagon_adjacent(p[k], p[(k + 1) % 5]);
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

using Clique2 = std::vector<Box<2>>;

/// The clique built from a labeling: the m-th interval of Gamma2 is paired
/// with the interval of Gamma1 carrying label l_m.
inline Clique2 clique_from_labeling(const FiveCycle &g1, const FiveCycle &g2, const Labeling &l)
{
    auto x = g1.intervals();
    auto y = g2.intervals();
    Clique2 c;
    for (std::size_t m = 0; m < 5; ++m)
        c.push_back(Box<2>{x[static_cast<std::size_t>(l[m] - 1)], y[m]});
    std::sort(c.begin(), c.end());
    return c;
}

/// All 5-cliques C in I^2 with C_1 = Gamma1 and C_2 = Gamma2, by trying
/// every bijection between the two cycles.
inline std::vector<Clique2> solve_construction_2d(const FiveCycle &g1, const FiveCycle &g2)
{
    auto x = g1.intervals();
    auto y = g2.intervals();
    std::array<int, 5> p{0, 1, 2, 3, 4};
    std::set<Clique2> out;
    do {
        Clique2 c;
        for (std::size_t k = 0; k < 5; ++k)
            c.push_back(Box<2>{x[k], y[static_cast<std::size_t>(p[k])]});
        if (is_clique(c)) {
            std::sort(c.begin(), c.end());
            out.insert(c);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return {out.begin(), out.end()};
}

/// Maximum clique in I(s) x I(s), found by exact branch and bound.
inline Clique2 max_clique_2d(int s = 3)
{
    const auto &sys = interval_system(s);
    std::vector<Box<2>> boxes;
    for (const auto &a : sys.vertices())
        for (const auto &b : sys.vertices())
            boxes.push_back(Box<2>{a, b});
    if (boxes.size() > 64)
        throw std::out_of_range("max_clique_2d: too many boxes");
    auto g = SmallGraph::from_vertices(boxes, [](const Box<2> &p, const Box<2> &q) { return box_adjacent(p, q); });
    Clique2 out;
    for (int k : max_clique(g))
        out.push_back(boxes[static_cast<std::size_t>(k)]);
    std::sort(out.begin(), out.end());
    return out;
}

struct Decomposition2 {
    FiveCycle first;
    FiveCycle second;
    std::vector<std::pair<int, int>> e1; // pairs touching along axis 1
    std::vector<std::pair<int, int>> e2;
};

/// Splits a 5-clique of I^2 into the two 5-cycles of its projections.
inline Decomposition2 decompose_2d_clique(const Clique2 &c)
{
    if (c.size() != 5 || !is_clique(c))
        throw std::invalid_argument("decompose_2d_clique: not a 5-clique");
    Decomposition2 d;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool a = adjacent(c[static_cast<std::size_t>(i)][0], c[static_cast<std::size_t>(j)][0]);
            bool b = adjacent(c[static_cast<std::size_t>(i)][1], c[static_cast<std::size_t>(j)][1]);
            if (a == b)
                throw std::invalid_argument("decompose_2d_clique: edge sets overlap");
            (a ? d.e1 : d.e2).emplace_back(i, j);
        }
    auto f = as_five_cycle(project_axis(c, 0));
    auto g = as_five_cycle(project_axis(c, 1));
    if (!f || !g || d.e1.size() != 5 || d.e2.size() != 5)
        throw std::invalid_argument("decompose_2d_clique: projections are not 5-cycles");
    d.first = *f;
    d.second = *g;
    return d;
}

/// The eight symmetries of the square I(s) x I(s) generated by the axis swap
/// and the reflections of each axis.
inline std::vector<Clique2> square_images(const Clique2 &c, int s)
{
    std::vector<Clique2> out;
    for (int swap = 0; swap < 2; ++swap)
        for (int r0 = 0; r0 < 2; ++r0)
            for (int r1 = 0; r1 < 2; ++r1) {
                Clique2 d;
                for (const auto &b : c) {
                    Box<2> x = b;
                    if (r0)
                        x[0] = reflect(x[0], s);
                    if (r1)
                        x[1] = reflect(x[1], s);
                    if (swap)
                        std::swap(x[0], x[1]);
                    d.push_back(x);
                }
                std::sort(d.begin(), d.end());
                out.push_back(d);
            }
    return out;
}

inline bool square_equivalent(const Clique2 &a, const Clique2 &b, int s)
{
    auto imgs = square_images(a, s);
    auto sb = b;
    std::sort(sb.begin(), sb.end());
    return std::find(imgs.begin(), imgs.end(), sb) != imgs.end();
}

} // namespace nnbox

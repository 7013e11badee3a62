#pragma once

// Graph homomorphisms of finite interval families into I(s), the minimal
// compression level s(G), incompressibility and the inequality suite that
// bounds cliques of boxes.

#include "core.hpp"
#include "graph.hpp"
#include "interval_graph.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nnbox {

struct CompressionResult {
    int s = 0;
    std::map<Interval, Interval> image;

    std::set<Interval> image_set() const
    {
        std::set<Interval> out;
        for (const auto &[from, to] : image)
            out.insert(to);
        return out;
    }
};

/// S(s) = {[i,i+1] : 0 <= i <= s} u {[1,3], [s-2,s]}. For s = 3 the two
/// extra intervals coincide.
struct Skeleton {
    int s = 0;
    std::vector<Interval> members;
};

inline Skeleton skeleton(int s)
{
    if (s < 3)
        throw std::invalid_argument("skeleton requires s >= 3");
    std::set<Interval> m;
    for (int i = 0; i <= s; ++i)
        m.insert(iv(i, i + 1));
    m.insert(iv(1, 3));
    m.insert(iv(s - 2, s));
    return Skeleton{s, {m.begin(), m.end()}};
}

/// Reflection [a,b] -> [s+1-b, s+1-a], an automorphism of I(s).
inline Interval reflect(const Interval &i, int s) { return Interval{2 * (s + 1) - i.hi, 2 * (s + 1) - i.lo}; }

namespace detail {

    // Both moves assume the image lies in I(s) with integer endpoints.
    inline Interval drop_first_unit(const Interval &i)
    {
        int a = i.lo / 2;
        int b = i.hi / 2;
        if (a == 0 || (a == 1 && b > 2))
            return iv(1, b - 1);
        return iv(a - 1, b - 1);
    }

    inline Interval drop_inner_unit(const Interval &i, int k)
    {
        int a = i.lo / 2;
        int b = i.hi / 2;
        if (b <= k)
            return iv(a, b);
        if (a <= k)
            return iv(a, b - 1);
        return iv(a - 1, b - 1);
    }

    class HomomorphismSearch {
    public:
        HomomorphismSearch(const std::vector<Interval> &source, const IntervalSystem &target)
            : source_(source), target_(target),
              graph_(SmallGraph::from_vertices(source, [](const Interval &a, const Interval &b) { return adjacent(a, b); })),
              assigned_(source.size(), -1)
        {
            if (target.size() > 64)
                throw std::out_of_range("homomorphism target too large");
            build_order();
        }

        std::optional<std::vector<int>> run()
        {
            if (dfs(0))
                return assigned_;
            return std::nullopt;
        }

    private:
        void build_order()
        {
            const int n = graph_.size();
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (int step = 0; step < n; ++step) {
                int pick = -1;
                int pick_key_a = -1;
                int pick_key_b = -1;
                for (int v = 0; v < n; ++v) {
                    if (used[static_cast<std::size_t>(v)])
                        continue;
                    int placed = 0;
                    for (int u : order_)
                        if (graph_.has_edge(u, v))
                            ++placed;
                    int deg = popcount(graph_.neighbours(v));
                    if (placed > pick_key_a || (placed == pick_key_a && deg > pick_key_b)) {
                        pick = v;
                        pick_key_a = placed;
                        pick_key_b = deg;
                    }
                }
                used[static_cast<std::size_t>(pick)] = true;
                order_.push_back(pick);
            }
        }

        Mask domain(int v) const
        {
            Mask d = target_.size() == 64 ? ~Mask{0} : (Mask{1} << target_.size()) - 1;
            for (Mask q = graph_.neighbours(v); q; q &= q - 1) {
                int u = lowest(q);
                int img = assigned_[static_cast<std::size_t>(u)];
                if (img >= 0)
                    d &= target_.neighbours(img);
            }
            return d;
        }

        bool dfs(std::size_t pos)
        {
            if (pos == order_.size())
                return true;
            int v = order_[pos];
            Mask d = domain(v);
            for (; d; d &= d - 1) {
                int t = lowest(d);
                assigned_[static_cast<std::size_t>(v)] = t;
                bool ok = true;
                for (Mask q = graph_.neighbours(v); q && ok; q &= q - 1) {
                    int u = lowest(q);
                    if (assigned_[static_cast<std::size_t>(u)] < 0 && domain(u) == 0)
                        ok = false;
                }
                if (ok && dfs(pos + 1))
                    return true;
            }
            assigned_[static_cast<std::size_t>(v)] = -1;
            return false;
        }

        const std::vector<Interval> &source_;
        const IntervalSystem &target_;
        SmallGraph graph_;
        std::vector<int> order_;
        std::vector<int> assigned_;
    };

} // namespace detail

/// A graph homomorphism from the family into I(t), if one exists.
inline std::optional<std::map<Interval, Interval>> find_homomorphism(const std::vector<Interval> &family, int t)
{
    std::set<Interval> distinct(family.begin(), family.end());
    std::vector<Interval> src(distinct.begin(), distinct.end());
    const auto &sys = interval_system(t);
    auto found = detail::HomomorphismSearch(src, sys).run();
    if (!found)
        return std::nullopt;
    std::map<Interval, Interval> out;
    for (std::size_t k = 0; k < src.size(); ++k)
        out.emplace(src[k], sys.vertex((*found)[k]));
    return out;
}

/// Whether the map preserves adjacency on the family.
inline bool is_homomorphism(const std::map<Interval, Interval> &f)
{
    for (auto a = f.begin(); a != f.end(); ++a)
        for (auto b = std::next(a); b != f.end(); ++b)
            if (adjacent(a->first, b->first) && !adjacent(a->second, b->second))
                return false;
    return true;
}

/// Minimal level s(G) together with a homomorphism of G into I(s(G)).
///
/// The endpoints are first rank-compressed, which places the family inside
/// I(m). Missing unit intervals [i,i+1] are then removed one at a time
/// (lowest index first), each removal being a homomorphism I(s) -> I(s-1).
/// Once every unit interval is present the level is certified minimal by an
/// exhaustive search for a homomorphism into I(s-1); if the search succeeds
/// the reduction continues from the homomorphism it found.
inline CompressionResult normalize(const std::vector<Interval> &family)
{
    if (family.empty())
        throw std::invalid_argument("cannot normalize an empty family");
    std::set<Interval> distinct(family.begin(), family.end());
    std::set<int> ends;
    for (const auto &i : distinct) {
        ends.insert(i.lo);
        ends.insert(i.hi);
    }
    std::map<int, int> rank;
    for (int e : ends)
        rank.emplace(e, static_cast<int>(rank.size()) + 1);

    CompressionResult r;
    r.s = static_cast<int>(ends.size());
    for (const auto &i : distinct)
        r.image.emplace(i, iv(rank[i.lo], rank[i.hi]));

    auto apply = [&r](auto g) {
        for (auto &[from, to] : r.image)
            to = g(to);
    };

    for (;;) {
        for (;;) {
            auto img = r.image_set();
            int missing = -1;
            for (int i = 0; i <= r.s; ++i)
                if (!img.count(iv(i, i + 1))) {
                    missing = i;
                    break;
                }
            if (missing < 0)
                break;
            const int s = r.s;
            if (missing == 0)
                apply(detail::drop_first_unit);
            else if (missing == s)
                apply([s](const Interval &i) { return reflect(detail::drop_first_unit(reflect(i, s)), s - 1); });
            else
                apply([missing](const Interval &i) { return detail::drop_inner_unit(i, missing); });
            r.s = s - 1;
        }
        if (r.s == 2) {
            // I(2) is a path; fold [2,3] onto [0,1]
            apply([](const Interval &i) { return i == iv(2, 3) ? iv(0, 1) : i; });
            r.s = 1;
            continue;
        }
        if (r.s == 0)
            break;
        auto lower = find_homomorphism(std::vector<Interval>(distinct.begin(), distinct.end()), r.s - 1);
        if (!lower)
            break;
        r.image = std::move(*lower);
        r.s -= 1;
    }
    return r;
}

inline CompressionResult normalize(const IntervalCombination &c) { return normalize(c.support()); }

/// True iff supp gamma, viewed inside I(s), admits no homomorphism into a
/// smaller I(s').
inline bool is_incompressible(const IntervalCombination &c, int s)
{
    const auto &sys = interval_system(s);
    for (const auto &[v, k] : c.terms())
        sys.require_index(v);
    if (c.empty())
        return s == 0;
    return normalize(c).s == s;
}

// ---------------------------------------------------------------------------
// Inequality suite

/// Known maximum clique sizes b_1 = 2, b_2 = 5, b_3 = 12.
inline int known_b(int n)
{
    switch (n) {
    case 1: return 2;
    case 2: return 5;
    case 3: return 12;
    default: throw std::out_of_range("b_n only known for n <= 3");
    }
}

struct BoundSamples {
    std::vector<IntervalCombination> combinations;
    std::vector<std::vector<Box<2>>> cliques2;
    std::vector<std::vector<Box<3>>> cliques3;
};

/// Checks, on every sample, the chain of inequalities bounding clique sizes:
///   |gamma| <= 4 alpha - 3 (alpha > 1),  alpha >= floor(s/2) + 1,
///   s <= 2 alpha - 1 for incompressible gamma,  |C| <= 4 b_{n-1} - 3,
///   and b_k b_l <= b_{k+l} via product cliques.
/// Returns a description of every violation found.
inline std::vector<std::string> check_bounds_suite(const BoundSamples &samples)
{
    std::vector<std::string> violations;
    for (const auto &g : samples.combinations) {
        if (g.empty())
            continue;
        const int a = alpha_general(g);
        if (a > 1 && g.size() > 4 * a - 3)
            violations.push_back("|gamma| <= 4 alpha - 3 fails for " + to_string(g));
        auto r = normalize(g);
        if (a < r.s / 2 + 1)
            violations.push_back("alpha >= floor(s/2) + 1 fails for " + to_string(g));
        auto f_gamma = g.pushforward([&](const Interval &i) { return r.image.at(i); });
        if (alpha(f_gamma, r.s) > a)
            violations.push_back("alpha(f_* gamma) <= alpha(gamma) fails for " + to_string(g));
        // f_* gamma is incompressible at level r.s
        if (r.s > 2 * alpha(f_gamma, r.s) - 1 && r.s > 0)
            violations.push_back("s <= 2 alpha - 1 fails for " + to_string(f_gamma));
    }
    auto clique_check = [&](std::size_t n, std::size_t size, bool clique, const std::string &what) {
        if (!clique)
            violations.push_back(what + " is not a clique");
        if (static_cast<int>(size) > 4 * known_b(static_cast<int>(n) - 1) - 3)
            violations.push_back(what + " exceeds 4 b_{n-1} - 3");
    };
    for (std::size_t k = 0; k < samples.cliques2.size(); ++k)
        clique_check(2, samples.cliques2[k].size(), is_clique(samples.cliques2[k]), "2-D sample " + std::to_string(k));
    for (std::size_t k = 0; k < samples.cliques3.size(); ++k)
        clique_check(3, samples.cliques3[k].size(), is_clique(samples.cliques3[k]), "3-D sample " + std::to_string(k));
    for (const auto &a : samples.cliques2)
        for (const auto &b : samples.cliques2) {
            auto p = product_family(a, b);
            if (!is_clique(p) || p.size() != a.size() * b.size())
                violations.push_back("product of 2-D cliques is not a clique");
        }
    return violations;
}

} // namespace nnbox

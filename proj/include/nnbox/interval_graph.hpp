#pragma once

// The finite interval graphs I(s) = {[0,1], [s,s+1]} u {[i,j] : 1 <= i < j <= s},
// and the independence / clique numbers of combinations of intervals.

#include "core.hpp"
#include "graph.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nnbox {

// I(10) has 47 vertices, the most that fit the 64-bit vertex masks used below.
inline constexpr int max_level = 10;

class IntervalSystem {
public:
    explicit IntervalSystem(int s) : s_(s)
    {
        if (s < 0 || s > max_level)
            throw std::out_of_range("interval system level out of range");
        vertices_.push_back(iv(0, 1));
        for (int i = 1; i <= s; ++i)
            for (int j = i + 1; j <= s; ++j)
                vertices_.push_back(iv(i, j));
        if (s >= 1)
            vertices_.push_back(iv(s, s + 1));
        std::sort(vertices_.begin(), vertices_.end());
        index_.assign(static_cast<std::size_t>((s + 2) * (s + 2)), -1);
        for (std::size_t k = 0; k < vertices_.size(); ++k)
            index_[slot(vertices_[k].lo / 2, vertices_[k].hi / 2)] = static_cast<int>(k);
        adj_.assign(vertices_.size(), 0);
        for (std::size_t a = 0; a < vertices_.size(); ++a)
            for (std::size_t b = 0; b < vertices_.size(); ++b)
                if (adjacent(vertices_[a], vertices_[b]))
                    adj_[a] |= Mask{1} << b;
        if (s >= 1)
            build_eps_families();
    }

    int level() const { return s_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Interval> &vertices() const { return vertices_; }
    const Interval &vertex(int k) const { return vertices_[static_cast<std::size_t>(k)]; }
    Mask neighbours(int k) const { return adj_[static_cast<std::size_t>(k)]; }

    std::optional<int> index_of(const Interval &i) const
    {
        if (i.lo % 2 || i.hi % 2)
            return std::nullopt;
        int a = i.lo / 2;
        int b = i.hi / 2;
        if (a < 0 || b > s_ + 1)
            return std::nullopt;
        int k = index_[slot(a, b)];
        if (k < 0)
            return std::nullopt;
        return k;
    }

    bool contains(const Interval &i) const { return index_of(i).has_value(); }

    int require_index(const Interval &i) const
    {
        auto k = index_of(i);
        if (!k)
            throw std::invalid_argument(to_string(i) + " is not a vertex of I(" + std::to_string(s_) + ")");
        return *k;
    }

    /// Dense multiplicity vector indexed like vertices().
    std::vector<int> dense(const IntervalCombination &c) const
    {
        std::vector<int> out(vertices_.size(), 0);
        for (const auto &[v, k] : c.terms())
            out[static_cast<std::size_t>(require_index(v))] = k;
        return out;
    }

    IntervalCombination sparse(const std::vector<int> &counts) const
    {
        IntervalCombination c;
        for (std::size_t k = 0; k < counts.size(); ++k)
            c.add(vertices_[k], counts[k]);
        return c;
    }

    /// Masks of the maximal independent families I(s, eps), one per eps in {0,1}^s
    /// (bit u-1 of the index is eps_u).
    const std::vector<Mask> &eps_families() const { return eps_; }

    /// For every vertex, the indices of the families I(s, eps) containing it.
    const std::vector<std::vector<int>> &families_of_vertex() const { return families_of_; }

    bool in_family(const Interval &i, unsigned eps) const
    {
        int u = i.lo / 2;
        int v = i.hi / 2;
        auto bit = [eps](int k) { return (eps >> (k - 1)) & 1U; };
        if (u == 0)
            return bit(1) == 1;
        if (u == s_)
            return bit(s_) == 0;
        return bit(u) == 0 && bit(v) == 1;
    }

private:
    std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a * (s_ + 2) + b); }

    void build_eps_families()
    {
        const unsigned n = 1U << s_;
        eps_.assign(n, 0);
        families_of_.assign(vertices_.size(), {});
        for (unsigned e = 0; e < n; ++e)
            for (std::size_t k = 0; k < vertices_.size(); ++k)
                if (in_family(vertices_[k], e)) {
                    eps_[e] |= Mask{1} << k;
                    families_of_[k].push_back(static_cast<int>(e));
                }
    }

    int s_;
    std::vector<Interval> vertices_;
    std::vector<int> index_;
    std::vector<Mask> adj_;
    std::vector<Mask> eps_;
    std::vector<std::vector<int>> families_of_;
};

/// Shared immutable instance of I(s).
inline const IntervalSystem &interval_system(int s)
{
    static const auto systems = [] {
        std::vector<std::unique_ptr<IntervalSystem>> v;
        for (int k = 0; k <= max_level; ++k)
            v.push_back(std::make_unique<IntervalSystem>(k));
        return v;
    }();
    if (s < 0 || s > max_level)
        throw std::out_of_range("interval system level out of range");
    return *systems[static_cast<std::size_t>(s)];
}

/// Independence number of G_gamma for supp gamma inside I(s): the largest
/// multiplicity mass carried by one of the families I(s, eps).
inline int alpha(const IntervalCombination &c, int s)
{
    const auto &sys = interval_system(s);
    auto counts = sys.dense(c);
    if (s == 0)
        return counts.empty() ? 0 : counts[0];
    int best = 0;
    for (Mask fam : sys.eps_families()) {
        int mass = 0;
        for (Mask q = fam; q; q &= q - 1)
            mass += counts[static_cast<std::size_t>(lowest(q))];
        best = std::max(best, mass);
    }
    return best;
}

/// Independence number of G_gamma for an arbitrary finite combination of
/// intervals, by exact branch and bound on the support.
inline int alpha_general(const IntervalCombination &c)
{
    auto support = c.support();
    auto g = SmallGraph::from_vertices(support, [](const Interval &a, const Interval &b) { return adjacent(a, b); });
    std::vector<long> w;
    for (const auto &v : support)
        w.push_back(c.count(v));
    return static_cast<int>(max_weight_independent_set(g, w));
}

template <std::size_t N>
int alpha_boxes(const Combination<Box<N>> &c)
{
    auto support = c.support();
    auto g = SmallGraph::from_vertices(support, [](const Box<N> &a, const Box<N> &b) { return box_adjacent(a, b); });
    std::vector<long> w;
    for (const auto &v : support)
        w.push_back(c.count(v));
    return static_cast<int>(max_weight_independent_set(g, w));
}

/// Clique number of G_gamma; copies are pairwise non-adjacent so only the
/// support matters.
template <class V, class Adj>
int omega(const Combination<V> &c, Adj adj)
{
    if (c.empty())
        return 0;
    return clique_number(SmallGraph::from_vertices(c.support(), adj));
}

inline int omega(const IntervalCombination &c)
{
    return omega(c, [](const Interval &a, const Interval &b) { return adjacent(a, b); });
}

template <std::size_t N>
int omega(const Combination<Box<N>> &c)
{
    return omega(c, [](const Box<N> &a, const Box<N> &b) { return box_adjacent(a, b); });
}

/// Smallest s with supp gamma inside I(s), if any.
inline std::optional<int> containing_level(const IntervalCombination &c)
{
    for (int s = 0; s <= max_level; ++s) {
        const auto &sys = interval_system(s);
        bool ok = true;
        for (const auto &[v, k] : c.terms())
            if (!sys.contains(v)) {
                ok = false;
                break;
            }
        if (ok)
            return s;
    }
    return std::nullopt;
}

} // namespace nnbox

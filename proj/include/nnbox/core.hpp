#pragma once

// Intervals, boxes, adjacency and formal combinations (finite multisets).

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nnbox {

/// Closed interval with endpoints on the half-integer grid. Endpoints are
/// stored doubled: the interval [1, 5/2] is held as {2, 5}.
struct Interval {
    int lo = 0;
    int hi = 2;

    Interval() = default;
    Interval(int lo2, int hi2) : lo(lo2), hi(hi2)
    {
        if (lo2 >= hi2)
            throw std::invalid_argument("interval must have positive length");
    }

    auto operator<=>(const Interval &) const = default;
};

/// Interval with integer endpoints [a, b].
inline Interval iv(int a, int b) { return Interval{2 * a, 2 * b}; }

inline std::string endpoint_string(int doubled)
{
    if (doubled % 2 == 0)
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

inline std::string to_string(const Interval &i)
{
    return "[" + endpoint_string(i.lo) + "," + endpoint_string(i.hi) + "]";
}

/// Two intervals are adjacent when they share exactly one point.
inline bool adjacent(const Interval &a, const Interval &b) { return a.hi == b.lo || b.hi == a.lo; }

template <std::size_t N>
using Box = std::array<Interval, N>;

template <std::size_t N>
std::string to_string(const Box<N> &b)
{
    std::string out;
    for (std::size_t i = 0; i < N; ++i) {
        if (i)
            out += "x";
        out += to_string(b[i]);
    }
    return out;
}

/// Per-axis adjacency bits of a pair of boxes. Bit i is set iff the i-th
/// coordinate intervals meet in exactly one point; the integer code of the
/// vector (e1, e2, e3) is e1 + 2 e2 + 4 e3.
struct EpsVector {
    unsigned code = 0;
    std::size_t n = 0;

    bool operator[](std::size_t i) const { return (code >> i) & 1U; }
    bool any() const { return code != 0; }
    auto operator<=>(const EpsVector &) const = default;
};

template <std::size_t N>
unsigned eps_code(const Box<N> &a, const Box<N> &b)
{
    unsigned code = 0;
    for (std::size_t i = 0; i < N; ++i)
        if (adjacent(a[i], b[i]))
            code |= 1U << i;
    return code;
}

template <std::size_t N>
EpsVector eps_vector(const Box<N> &a, const Box<N> &b)
{
    return EpsVector{eps_code(a, b), N};
}

inline EpsVector eps_vector(std::span<const Interval> a, std::span<const Interval> b)
{
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("box dimension mismatch");
    EpsVector e{0, a.size()};
    for (std::size_t i = 0; i < a.size(); ++i)
        if (adjacent(a[i], b[i]))
            e.code |= 1U << i;
    return e;
}

template <std::size_t N>
bool box_adjacent(const Box<N> &a, const Box<N> &b)
{
    return eps_code(a, b) != 0;
}

inline bool box_adjacent(std::span<const Interval> a, std::span<const Interval> b)
{
    return eps_vector(a, b).any();
}

template <std::size_t N>
bool is_clique(std::span<const Box<N>> family)
{
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!box_adjacent(family[i], family[j]))
                return false;
    return true;
}

template <std::size_t N>
bool is_clique(const std::vector<Box<N>> &family)
{
    return is_clique(std::span<const Box<N>>(family));
}

/// Finite formal sum of vertices with positive multiplicities.
template <class V>
class Combination {
public:
    using map_type = std::map<V, int>;

    Combination() = default;
    Combination(std::initializer_list<std::pair<V, int>> terms)
    {
        for (const auto &[v, k] : terms)
            add(v, k);
    }
    template <class It>
    static Combination from_range(It first, It last)
    {
        Combination c;
        for (; first != last; ++first)
            c.add(*first);
        return c;
    }
    template <class R>
    static Combination from_range(const R &r)
    {
        return from_range(std::begin(r), std::end(r));
    }

    void add(const V &v, int k = 1)
    {
        if (k < 0)
            throw std::invalid_argument("negative multiplicity");
        if (k > 0)
            mult_[v] += k;
    }

    void remove(const V &v, int k = 1)
    {
        auto it = mult_.find(v);
        if (it == mult_.end() || it->second < k)
            throw std::invalid_argument("removing more than present");
        it->second -= k;
        if (it->second == 0)
            mult_.erase(it);
    }

    int count(const V &v) const
    {
        auto it = mult_.find(v);
        return it == mult_.end() ? 0 : it->second;
    }

    /// |gamma|, the total multiplicity.
    int size() const
    {
        int n = 0;
        for (const auto &[v, k] : mult_)
            n += k;
        return n;
    }

    bool empty() const { return mult_.empty(); }
    std::size_t support_size() const { return mult_.size(); }
    const map_type &terms() const { return mult_; }

    std::vector<V> support() const
    {
        std::vector<V> out;
        out.reserve(mult_.size());
        for (const auto &[v, k] : mult_)
            out.push_back(v);
        return out;
    }

    /// Every vertex repeated by its multiplicity, in canonical order.
    std::vector<V> expand() const
    {
        std::vector<V> out;
        for (const auto &[v, k] : mult_)
            out.insert(out.end(), static_cast<std::size_t>(k), v);
        return out;
    }

    /// delta <= gamma in the componentwise order.
    bool is_sub_of(const Combination &other) const
    {
        for (const auto &[v, k] : mult_)
            if (other.count(v) < k)
                return false;
        return true;
    }

    /// The subcombination carrying the full multiplicities of the given vertices.
    template <class Pred>
    Combination induced(Pred keep) const
    {
        Combination out;
        for (const auto &[v, k] : mult_)
            if (keep(v))
                out.mult_.emplace(v, k);
        return out;
    }

    Combination &operator+=(const Combination &o)
    {
        for (const auto &[v, k] : o.mult_)
            mult_[v] += k;
        return *this;
    }

    Combination &operator-=(const Combination &o)
    {
        for (const auto &[v, k] : o.mult_)
            remove(v, k);
        return *this;
    }

    friend Combination operator+(Combination a, const Combination &b) { return a += b; }
    friend Combination operator-(Combination a, const Combination &b) { return a -= b; }

    /// f_*(gamma) = sum k_x f(x).
    template <class F>
    auto pushforward(F f) const
    {
        using W = std::decay_t<decltype(f(std::declval<const V &>()))>;
        Combination<W> out;
        for (const auto &[v, k] : mult_)
            out.add(f(v), k);
        return out;
    }

    bool operator==(const Combination &) const = default;
    bool operator<(const Combination &o) const { return mult_ < o.mult_; }

private:
    map_type mult_;
};

using IntervalCombination = Combination<Interval>;

inline std::string to_string(const IntervalCombination &c)
{
    std::string out;
    for (const auto &[v, k] : c.terms()) {
        if (!out.empty())
            out += "+";
        if (k > 1)
            out += std::to_string(k);
        out += to_string(v);
    }
    return out.empty() ? "0" : out;
}

struct GraphCounts {
    int vertices = 0;
    long edges = 0;
    bool operator==(const GraphCounts &) const = default;
};

/// Vertex and edge counts of the graph G_gamma: copies of one vertex are
/// never adjacent, and an edge {x, y} of the base graph contributes k_x k_y.
template <class V, class Adj>
GraphCounts graph_counts(const Combination<V> &c, Adj adj)
{
    GraphCounts g;
    g.vertices = c.size();
    const auto &t = c.terms();
    for (auto i = t.begin(); i != t.end(); ++i)
        for (auto j = std::next(i); j != t.end(); ++j)
            if (adj(i->first, j->first))
                g.edges += static_cast<long>(i->second) * j->second;
    return g;
}

inline GraphCounts graph_counts(const IntervalCombination &c)
{
    return graph_counts(c, [](const Interval &a, const Interval &b) { return adjacent(a, b); });
}

template <std::size_t N>
GraphCounts graph_counts(const Combination<Box<N>> &c)
{
    return graph_counts(c, [](const Box<N> &a, const Box<N> &b) { return box_adjacent(a, b); });
}

inline long edge_count(const IntervalCombination &c) { return graph_counts(c).edges; }

/// gamma_K: push each box forward to the coordinates listed in axes.
template <std::size_t K, std::size_t N>
Combination<Box<K>> project(const Combination<Box<N>> &c, const std::array<std::size_t, K> &axes)
{
    for (std::size_t a : axes)
        if (a >= N)
            throw std::out_of_range("projection axis out of range");
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = i + 1; j < K; ++j)
            if (axes[i] == axes[j])
                throw std::invalid_argument("repeated projection axis");
    return c.pushforward([&](const Box<N> &b) {
        Box<K> out;
        for (std::size_t i = 0; i < K; ++i)
            out[i] = b[axes[i]];
        return out;
    });
}

/// gamma_i for a single axis, as a combination of intervals.
template <std::size_t N>
IntervalCombination project_axis(const Combination<Box<N>> &c, std::size_t axis)
{
    if (axis >= N)
        throw std::out_of_range("projection axis out of range");
    return c.pushforward([axis](const Box<N> &b) { return b[axis]; });
}

template <std::size_t N>
IntervalCombination project_axis(const std::vector<Box<N>> &family, std::size_t axis)
{
    if (axis >= N)
        throw std::out_of_range("projection axis out of range");
    IntervalCombination out;
    for (const auto &b : family)
        out.add(b[axis]);
    return out;
}

template <std::size_t N>
Combination<Box<N>> as_combination(const std::vector<Box<N>> &family)
{
    return Combination<Box<N>>::from_range(family);
}

/// The product family {I x J}: boxes of dimension K + L.
template <std::size_t K, std::size_t L>
std::vector<Box<K + L>> product_family(const std::vector<Box<K>> &a, const std::vector<Box<L>> &b)
{
    std::vector<Box<K + L>> out;
    for (const auto &x : a)
        for (const auto &y : b) {
            Box<K + L> z;
            std::copy(x.begin(), x.end(), z.begin());
            std::copy(y.begin(), y.end(), z.begin() + K);
            out.push_back(z);
        }
    return out;
}

} // namespace nnbox

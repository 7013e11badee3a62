#pragma once

// Aut(I(s)) by brute force and from the closed-form tables, the product
// groups acting on 3-boxes, and orbit machinery.

#include "compress.hpp"
#include "core.hpp"
#include "fixtures.hpp"
#include "interval_graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnbox {

/// Bijection on the vertices of I(s), stored as images of vertex indices.
struct VertexPerm {
    int s = 0;
    std::vector<int> image;

    Interval operator()(const Interval &i) const
    {
        const auto &sys = interval_system(s);
        return sys.vertex(image[static_cast<std::size_t>(sys.require_index(i))]);
    }

    VertexPerm compose(const VertexPerm &inner) const
    {
        VertexPerm out{s, {}};
        for (int k : inner.image)
            out.image.push_back(image[static_cast<std::size_t>(k)]);
        return out;
    }

    VertexPerm inverse() const
    {
        VertexPerm out{s, std::vector<int>(image.size())};
        for (std::size_t k = 0; k < image.size(); ++k)
            out.image[static_cast<std::size_t>(image[k])] = static_cast<int>(k);
        return out;
    }

    bool is_identity() const
    {
        for (std::size_t k = 0; k < image.size(); ++k)
            if (image[k] != static_cast<int>(k))
                return false;
        return true;
    }

    auto operator<=>(const VertexPerm &) const = default;
};

inline VertexPerm identity_perm(int s)
{
    VertexPerm p{s, std::vector<int>(static_cast<std::size_t>(interval_system(s).size()))};
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

inline VertexPerm reflection_perm(int s)
{
    const auto &sys = interval_system(s);
    VertexPerm p{s, {}};
    for (const auto &v : sys.vertices())
        p.image.push_back(sys.require_index(reflect(v, s)));
    return p;
}

inline bool is_automorphism(const VertexPerm &p)
{
    const auto &sys = interval_system(p.s);
    const int n = sys.size();
    if (static_cast<int>(p.image.size()) != n)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int k : p.image) {
        if (k < 0 || k >= n || seen[static_cast<std::size_t>(k)])
            return false;
        seen[static_cast<std::size_t>(k)] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool e = (sys.neighbours(a) >> b) & 1U;
            bool f = (sys.neighbours(p.image[static_cast<std::size_t>(a)]) >> p.image[static_cast<std::size_t>(b)]) & 1U;
            if (e != f)
                return false;
        }
    return true;
}

/// Order of a permutation given as an image vector.
inline int perm_order(const std::vector<int> &p)
{
    std::vector<bool> seen(p.size(), false);
    int order = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (seen[k])
            continue;
        int len = 0;
        for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

/// Multiset of element orders, as order -> count.
template <class Perms, class Image>
std::map<int, int> order_profile(const Perms &group, Image image)
{
    std::map<int, int> out;
    for (const auto &g : group)
        ++out[perm_order(image(g))];
    return out;
}

inline std::map<int, int> order_profile(const std::vector<VertexPerm> &group)
{
    return order_profile(group, [](const VertexPerm &p) { return p.image; });
}

inline const std::map<int, int> &dih4_profile()
{
    static const std::map<int, int> p{{1, 1}, {2, 5}, {4, 2}};
    return p;
}

namespace detail {

    inline void aut_search(const IntervalSystem &sys, const std::vector<int> &deg, std::vector<int> &img,
        std::vector<bool> &used, int k, std::vector<VertexPerm> &out)
    {
        const int n = sys.size();
        if (k == n) {
            out.push_back(VertexPerm{sys.level(), img});
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[static_cast<std::size_t>(t)] || deg[static_cast<std::size_t>(t)] != deg[static_cast<std::size_t>(k)])
                continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                bool e = (sys.neighbours(k) >> j) & 1U;
                bool f = (sys.neighbours(t) >> img[static_cast<std::size_t>(j)]) & 1U;
                ok = e == f;
            }
            if (!ok)
                continue;
            img[static_cast<std::size_t>(k)] = t;
            used[static_cast<std::size_t>(t)] = true;
            aut_search(sys, deg, img, used, k + 1, out);
            used[static_cast<std::size_t>(t)] = false;
        }
    }

} // namespace detail

/// Aut(I(s)) by exhaustive backtracking over degree-preserving vertex maps.
inline std::vector<VertexPerm> aut_brute_force(int s)
{
    if (s < 1 || s > 9)
        throw std::out_of_range("aut_brute_force: s must be in 1..9");
    const auto &sys = interval_system(s);
    std::vector<int> deg;
    for (int k = 0; k < sys.size(); ++k)
        deg.push_back(popcount(sys.neighbours(k)));
    std::vector<int> img(static_cast<std::size_t>(sys.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(sys.size()), false);
    std::vector<VertexPerm> out;
    detail::aut_search(sys, deg, img, used, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form tables

/// Integer affine expression in s, i, j such as "s+1-i".
inline int eval_expr(const std::string &e, int s, int i, int j)
{
    int total = 0;
    int sign = 1;
    std::size_t pos = 0;
    if (e.empty())
        throw std::invalid_argument("empty expression");
    while (pos < e.size()) {
        char ch = e[pos];
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t end = pos;
            while (end < e.size() && std::isdigit(static_cast<unsigned char>(e[end])))
                ++end;
            total += sign * std::stoi(e.substr(pos, end - pos));
            pos = end;
        } else if (ch == 's' || ch == 'i' || ch == 'j') {
            total += sign * (ch == 's' ? s : ch == 'i' ? i : j);
            ++pos;
        } else {
            throw std::invalid_argument("bad expression " + e);
        }
        sign = 1;
    }
    return total;
}

/// "p:q" with affine endpoint expressions.
inline Interval eval_vertex(const std::string &tok, int s, int i = 0, int j = 0)
{
    auto colon = tok.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad vertex " + tok);
    return iv(eval_expr(tok.substr(0, colon), s, i, j), eval_expr(tok.substr(colon + 1), s, i, j));
}

/// The eight automorphisms of I(s), s >= 4, read from the tables.
class AutTables {
public:
    static AutTables load(const FixtureFile &f)
    {
        AutTables t;
        for (const auto &r : f.section("names"))
            t.names_[r.at(0)] = r.at(1);
        auto letters = [&](const std::string &sec, std::size_t width) {
            std::vector<std::vector<std::string>> rows;
            for (const auto &r : f.section(sec)) {
                if (r.size() != width + 1)
                    throw std::runtime_error("appendix A: bad row in @" + sec);
                rows.emplace_back(r.begin() + 1, r.end());
            }
            return rows;
        };
        t.g_ = letters("g", 4);
        t.h_ = letters("h", 4);
        t.h_intervals_ = letters("h_intervals", 4);
        t.rest_ = letters("rest", 5);
        t.rest_columns_ = f.section("rest_columns").at(0);
        t.reflection_row_ = std::stoi(f.section("reflection").at(0).at(0));
        if (t.g_.size() != 8 || t.h_.size() != 8 || t.rest_.size() != 8 || t.rest_columns_.size() != 5)
            throw std::runtime_error("appendix A: expected eight rows");
        return t;
    }

    int reflection_row() const { return reflection_row_; }

    /// Automorphism number row (1..8) of I(s).
    VertexPerm element(int row, int s) const
    {
        if (s < 4 || s > 9)
            throw std::out_of_range("closed-form automorphisms need 4 <= s <= 9");
        if (row < 1 || row > 8)
            throw std::out_of_range("row must be 1..8");
        const auto r = static_cast<std::size_t>(row - 1);
        std::map<Interval, Interval> m;
        const std::array<std::string, 4> gl{"a", "b", "c", "d"};
        const std::array<std::string, 4> hl{"u", "v", "w", "x"};
        for (std::size_t k = 0; k < 4; ++k) {
            m[name(gl[k], s)] = name(g_[r][k], s);
            m[name(hl[k], s)] = name(h_[r][k], s);
        }
        const auto &sys = interval_system(s);
        for (const auto &vtx : sys.vertices()) {
            if (m.count(vtx))
                continue;
            int p = vtx.lo / 2;
            int q = vtx.hi / 2;
            int col = -1;
            int i = 0;
            int j = 0;
            if (p == 1 && 2 < q && q < s - 1) {
                col = 0;
                i = q;
            } else if (p == 2 && 2 < q && q < s - 1) {
                col = 1;
                i = q;
            } else if (q == s - 1 && 2 < p && p < s - 1) {
                col = 2;
                j = p;
            } else if (q == s && 2 < p && p < s - 1) {
                col = 3;
                j = p;
            } else if (2 < p && p < q && q < s - 1) {
                col = 4;
                i = p;
                j = q;
            }
            if (col < 0)
                throw std::logic_error("vertex " + to_string(vtx) + " not covered by the tables");
            // the column header must evaluate back to the vertex itself
            if (eval_vertex(rest_columns_[static_cast<std::size_t>(col)], s, i, j) != vtx)
                throw std::runtime_error("appendix A: column header mismatch");
            m[vtx] = eval_vertex(rest_[r][static_cast<std::size_t>(col)], s, i, j);
        }
        VertexPerm out{s, {}};
        for (const auto &vtx : sys.vertices())
            out.image.push_back(sys.require_index(m.at(vtx)));
        return out;
    }

    std::vector<VertexPerm> group(int s) const
    {
        std::vector<VertexPerm> out;
        for (int r = 1; r <= 8; ++r)
            out.push_back(element(r, s));
        return out;
    }

    /// Images of u, v, w, x as letters and as explicit intervals agree.
    bool h_tables_consistent(int s) const
    {
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t k = 0; k < 4; ++k)
                if (name(h_[r][k], s) != eval_vertex(h_intervals_[r][k], s))
                    return false;
        return true;
    }

private:
    Interval name(const std::string &letter, int s) const
    {
        auto it = names_.find(letter);
        if (it == names_.end())
            throw std::runtime_error("appendix A: unknown vertex name " + letter);
        return eval_vertex(it->second, s);
    }

    std::map<std::string, std::string> names_;
    std::vector<std::vector<std::string>> g_, h_, h_intervals_, rest_;
    std::vector<std::string> rest_columns_;
    int reflection_row_ = 0;
};

/// Aut(I(s)) for 1 <= s <= 9; the closed form is used for s >= 4 when tables
/// are supplied, otherwise brute force.
inline std::vector<VertexPerm> aut_interval_graph(int s, const AutTables *tables = nullptr)
{
    if (s < 1 || s > 9)
        throw std::out_of_range("aut_interval_graph: s must be in 1..9");
    if (tables && s >= 4) {
        auto g = tables->group(s);
        std::sort(g.begin(), g.end());
        return g;
    }
    return aut_brute_force(s);
}

/// Cached brute-force groups.
inline const std::vector<VertexPerm> &aut_cached(int s)
{
    static const auto groups = [] {
        std::vector<std::vector<VertexPerm>> v(10);
        for (int k = 1; k <= 9; ++k)
            v[static_cast<std::size_t>(k)] = aut_brute_force(k);
        return v;
    }();
    if (s < 1 || s > 9)
        throw std::out_of_range("aut_cached: s must be in 1..9");
    return groups[static_cast<std::size_t>(s)];
}

/// Degrees of the vertices of I(s) as given by the closed-form lemma.
inline int lemma_degree(int s, int i, int j)
{
    if (s < 4)
        throw std::out_of_range("degree lemma needs s >= 4");
    if (i == 1 && j == s)
        return 2;
    if ((i == 0 && j == 1) || (i == 1 && j <= s - 1) || (2 <= i && j == s) || (i == s && j == s + 1))
        return s - (j - i);
    if (2 <= i && j <= s - 1)
        return s - (j - i) - 1;
    throw std::invalid_argument("not a vertex of I(s)");
}

/// Degrees of all vertices of I(s), counted in the graph.
inline std::map<Interval, int> degree_profile(int s)
{
    if (s < 4)
        throw std::out_of_range("degree_profile needs s >= 4");
    const auto &sys = interval_system(s);
    std::map<Interval, int> out;
    for (int k = 0; k < sys.size(); ++k)
        out[sys.vertex(k)] = popcount(sys.neighbours(k));
    return out;
}

// ---------------------------------------------------------------------------
// Product groups acting on 3-boxes

enum class GroupFlavor { Aut3, A3, Iso3, Iso3Plus };

inline int perm_sign(const std::array<int, 3> &p)
{
    int inv = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)])
                ++inv;
    return inv % 2 ? -1 : 1;
}

/// s_sigma o (f1 x f2 x f3). Axis k is moved to position sigma[k].
struct BoxSymmetry {
    std::array<int, 3> sigma{0, 1, 2};
    std::array<VertexPerm, 3> f;

    Box<3> operator()(const Box<3> &b) const
    {
        Box<3> out;
        for (std::size_t k = 0; k < 3; ++k)
            out[static_cast<std::size_t>(sigma[k])] = f[k](b[k]);
        return out;
    }

    /// (this o other)
    BoxSymmetry compose(const BoxSymmetry &o) const
    {
        BoxSymmetry r;
        for (std::size_t k = 0; k < 3; ++k) {
            auto mid = static_cast<std::size_t>(o.sigma[k]);
            r.sigma[k] = sigma[mid];
            r.f[k] = f[mid].compose(o.f[k]);
        }
        return r;
    }

    auto operator<=>(const BoxSymmetry &) const = default;
};

/// Builds one of the four groups for 4 <= s <= 9.
inline std::vector<BoxSymmetry> product_group(int s, GroupFlavor flavor)
{
    if (s < 4 || s > 9)
        throw std::out_of_range("product_group needs 4 <= s <= 9");
    std::vector<VertexPerm> axis_maps;
    const auto id = identity_perm(s);
    const auto refl = reflection_perm(s);
    if (flavor == GroupFlavor::Aut3 || flavor == GroupFlavor::A3)
        axis_maps = aut_cached(s);
    else
        axis_maps = {id, refl};
    std::vector<std::array<int, 3>> sigmas;
    std::array<int, 3> p{0, 1, 2};
    do {
        if (flavor == GroupFlavor::Aut3 && p != std::array<int, 3>{0, 1, 2})
            continue;
        sigmas.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<BoxSymmetry> out;
    for (const auto &sg : sigmas)
        for (const auto &a : axis_maps)
            for (const auto &b : axis_maps)
                for (const auto &c : axis_maps) {
                    if (flavor == GroupFlavor::Iso3Plus) {
                        int refl_count = (a == refl) + (b == refl) + (c == refl);
                        if (perm_sign(sg) * (refl_count % 2 ? -1 : 1) != 1)
                            continue;
                    }
                    out.push_back(BoxSymmetry{sg, {a, b, c}});
                }
    return out;
}

/// Whether the finite set of symmetries is closed under composition.
inline bool is_closed(const std::vector<BoxSymmetry> &g)
{
    std::set<BoxSymmetry> all(g.begin(), g.end());
    for (const auto &a : g)
        for (const auto &b : g)
            if (!all.count(a.compose(b)))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Orbits

template <class X>
struct Orbit {
    X representative;
    std::vector<X> members;
    std::size_t stabilizer_order = 0;
};

/// Partition of the targets into orbits of the group. Targets must be closed
/// under the action; the representative is the least member. Throws when an
/// image leaves the target set or orbit-stabilizer fails.
template <class X, class G, class Act>
std::vector<Orbit<X>> orbits(const std::vector<G> &group, const std::vector<X> &targets, Act act)
{
    std::set<X> pending(targets.begin(), targets.end());
    const std::set<X> universe = pending;
    std::vector<Orbit<X>> out;
    while (!pending.empty()) {
        X seed = *pending.begin();
        std::set<X> orbit;
        std::size_t stab = 0;
        for (const auto &g : group) {
            X y = act(g, seed);
            if (!universe.count(y))
                throw std::runtime_error("orbits: target set not closed under the action");
            if (y == seed)
                ++stab;
            orbit.insert(std::move(y));
        }
        if (orbit.size() * stab != group.size())
            throw std::logic_error("orbit-stabilizer violated");
        for (const auto &y : orbit)
            pending.erase(y);
        Orbit<X> o{*orbit.begin(), {orbit.begin(), orbit.end()}, stab};
        out.push_back(std::move(o));
    }
    return out;
}

/// Least image of x under the group.
template <class X, class G, class Act>
X canonical_rep(const X &x, const std::vector<G> &group, Act act)
{
    X best = x;
    for (const auto &g : group) {
        X y = act(g, x);
        if (y < best)
            best = std::move(y);
    }
    return best;
}

/// Canonical form of a combination over I(s) under Aut(I(s)): the orbit
/// member with the lexicographically least dense count vector.
inline std::vector<int> canonical_counts(const std::vector<int> &counts, int s)
{
    const auto &grp = aut_cached(s);
    std::vector<int> best = counts;
    std::vector<int> y(counts.size());
    for (const auto &g : grp) {
        for (std::size_t k = 0; k < counts.size(); ++k)
            y[static_cast<std::size_t>(g.image[k])] = counts[k];
        if (y < best)
            best = y;
    }
    return best;
}

inline IntervalCombination canonical_rep(const IntervalCombination &c, int s)
{
    const auto &sys = interval_system(s);
    return sys.sparse(canonical_counts(sys.dense(c), s));
}

/// A clique as a sorted list of boxes.
using BoxList = std::vector<Box<3>>;

inline BoxList sorted(BoxList b)
{
    std::sort(b.begin(), b.end());
    return b;
}

inline BoxList act_on(const BoxSymmetry &g, const BoxList &c)
{
    BoxList out;
    out.reserve(c.size());
    for (const auto &b : c)
        out.push_back(g(b));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nnbox

#pragma once

// Classification of 12-cliques of I^3: adjacency matrices of eps-codes,
// protoautomorphisms, automorphism groups, combinatorial equivalence,
// isometry orbits and chirality, and the compressible examples.

#include "autgroup.hpp"
#include "core.hpp"
#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnbox {

using CodeMatrix = std::vector<std::vector<int>>;

/// a_ij = e1 + 2 e2 + 4 e3 of eps(I_i, I_j); zero on the diagonal.
inline CodeMatrix adjacency_matrix(const BoxList &c)
{
    const std::size_t m = c.size();
    CodeMatrix a(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j)
                a[i][j] = static_cast<int>(eps_code(c[i], c[j]));
    return a;
}

/// Off-diagonal zero entries, i.e. non-adjacent pairs.
inline std::size_t zero_entries(const CodeMatrix &a)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j && a[i][j] == 0)
                ++n;
    return n;
}

/// b_ij = |{k : eps_ik = eps_jk}|.
inline CodeMatrix proto_matrix(const CodeMatrix &a)
{
    const std::size_t m = a.size();
    CodeMatrix b(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                b[i][j] += a[i][k] == a[j][k];
    return b;
}

inline CodeMatrix load_matrix(const FixtureFile &f, const std::string &name)
{
    return parse_int_rows(f.section(name));
}

inline BoxList load_clique(const FixtureFile &f, const std::string &name) { return parse_boxes<3>(f.section(name)); }

using Perm = std::vector<int>;

inline std::array<int, 8> permute_code_table(const std::array<int, 3> &sigma)
{
    std::array<int, 8> t{};
    for (int c = 0; c < 8; ++c) {
        int out = 0;
        for (int k = 0; k < 3; ++k)
            if ((c >> k) & 1)
                out |= 1 << sigma[static_cast<std::size_t>(k)];
        t[static_cast<std::size_t>(c)] = out;
    }
    return t;
}

inline std::vector<std::array<int, 3>> all_axis_perms()
{
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> p{0, 1, 2};
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace detail {

    // Backtracking for permutations pi with rel(a[pi i][pi j]) == b[i][j];
    // rel is a relabelling of matrix entries. Collects all, or the first.
    template <class Rel>
    void match_search(const CodeMatrix &a, const CodeMatrix &b, Rel rel, bool first_only, std::vector<Perm> &out)
    {
        const std::size_t m = b.size();
        if (a.size() != m)
            return;
        auto profile = [](const std::vector<int> &row, auto f) {
            std::vector<int> r;
            for (int x : row)
                r.push_back(f(x));
            std::sort(r.begin(), r.end());
            return r;
        };
        std::vector<std::vector<int>> pa(m);
        std::vector<std::vector<int>> pb(m);
        for (std::size_t i = 0; i < m; ++i) {
            pa[i] = profile(a[i], rel);
            pb[i] = profile(b[i], [](int x) { return x; });
        }
        Perm pi(m, -1);
        std::vector<bool> used(m, false);
        bool done = false;
        auto rec = [&](auto &&self, std::size_t i) -> void {
            if (done)
                return;
            if (i == m) {
                out.push_back(pi);
                if (first_only)
                    done = true;
                return;
            }
            for (std::size_t t = 0; t < m; ++t) {
                if (used[t] || pa[t] != pb[i])
                    continue;
                bool ok = rel(a[t][t]) == b[i][i];
                for (std::size_t j = 0; j < i && ok; ++j) {
                    auto pj = static_cast<std::size_t>(pi[j]);
                    ok = rel(a[t][pj]) == b[i][j] && rel(a[pj][t]) == b[j][i];
                }
                if (!ok)
                    continue;
                pi[i] = static_cast<int>(t);
                used[t] = true;
                self(self, i + 1);
                used[t] = false;
                pi[i] = -1;
            }
        };
        rec(rec, 0);
    }

} // namespace detail

/// Permutations fixing B.
inline std::vector<Perm> protoautomorphisms(const CodeMatrix &a)
{
    auto b = proto_matrix(a);
    std::vector<Perm> out;
    detail::match_search(b, b, [](int x) { return x; }, false, out);
    std::sort(out.begin(), out.end());
    return out;
}

struct IsoWitness {
    Perm pi;
    std::array<int, 3> sigma{0, 1, 2};
    auto operator<=>(const IsoWitness &) const = default;
};

/// Witnesses (pi, sigma) with s_sigma(eps^D_{pi(i) pi(j)}) = eps^C_{ij}.
inline std::vector<IsoWitness> isomorphisms(const CodeMatrix &c, const CodeMatrix &d, bool first_only)
{
    std::vector<IsoWitness> out;
    for (const auto &sg : all_axis_perms()) {
        auto t = permute_code_table(sg);
        std::vector<Perm> found;
        detail::match_search(d, c, [&t](int x) { return t[static_cast<std::size_t>(x)]; }, first_only, found);
        for (auto &p : found)
            out.push_back(IsoWitness{std::move(p), sg});
        if (first_only && !out.empty())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<IsoWitness> automorphisms(const CodeMatrix &a) { return isomorphisms(a, a, false); }

inline std::optional<IsoWitness> are_isomorphic(const BoxList &c, const BoxList &d)
{
    if (c.size() != d.size())
        return std::nullopt;
    auto w = isomorphisms(adjacency_matrix(c), adjacency_matrix(d), true);
    if (w.empty())
        return std::nullopt;
    return w.front();
}

/// The permutations underlying the automorphism witnesses.
inline std::vector<Perm> automorphism_perms(const std::vector<IsoWitness> &w)
{
    std::set<Perm> s;
    for (const auto &x : w)
        s.insert(x.pi);
    return {s.begin(), s.end()};
}

/// Whether the witness conjugates the adjacency matrices.
inline bool witness_valid(const CodeMatrix &c, const CodeMatrix &d, const IsoWitness &w)
{
    auto t = permute_code_table(w.sigma);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (t[static_cast<std::size_t>(d[static_cast<std::size_t>(w.pi[i])][static_cast<std::size_t>(w.pi[j])])] != c[i][j])
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Permutation groups on clique members

inline Perm compose(const Perm &a, const Perm &b)
{
    Perm r(b.size());
    for (std::size_t k = 0; k < b.size(); ++k)
        r[k] = a[static_cast<std::size_t>(b[k])];
    return r;
}

inline std::set<Perm> generate_group(const std::vector<Perm> &gens)
{
    if (gens.empty())
        return {};
    Perm id(gens[0].size());
    for (std::size_t k = 0; k < id.size(); ++k)
        id[k] = static_cast<int>(k);
    std::set<Perm> g{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto &x : frontier)
            for (const auto &s : gens) {
                auto y = compose(s, x);
                if (g.insert(y).second)
                    next.push_back(y);
            }
        frontier = std::move(next);
    }
    return g;
}

inline bool is_group(const std::vector<Perm> &g)
{
    std::set<Perm> s(g.begin(), g.end());
    for (const auto &a : g)
        for (const auto &b : g)
            if (!s.count(compose(a, b)))
                return false;
    return true;
}

inline std::map<int, int> order_profile(const std::vector<Perm> &g)
{
    return order_profile(g, [](const Perm &p) { return p; });
}

inline std::size_t center_size(const std::vector<Perm> &g)
{
    std::size_t n = 0;
    for (const auto &a : g) {
        bool central = true;
        for (const auto &b : g)
            if (compose(a, b) != compose(b, a)) {
                central = false;
                break;
            }
        n += central;
    }
    return n;
}

// ---------------------------------------------------------------------------
// Equivalence classes and orbits

/// An invariant of combinatorial equivalence: sorted rows of popcounts.
inline std::vector<std::vector<int>> equivalence_invariant(const BoxList &c)
{
    auto a = adjacency_matrix(c);
    std::vector<std::vector<int>> rows;
    for (const auto &r : a) {
        std::vector<int> x;
        for (int v : r)
            x.push_back(std::popcount(static_cast<unsigned>(v)));
        std::sort(x.begin(), x.end());
        rows.push_back(std::move(x));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

/// Partition into combinatorial equivalence classes (indices into the input).
inline std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<BoxList> &cliques)
{
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::vector<std::vector<int>>> inv;
    for (std::size_t k = 0; k < cliques.size(); ++k) {
        auto iv_k = equivalence_invariant(cliques[k]);
        bool placed = false;
        for (std::size_t c = 0; c < classes.size() && !placed; ++c)
            if (inv[c] == iv_k && are_isomorphic(cliques[classes[c].front()], cliques[k])) {
                classes[c].push_back(k);
                placed = true;
            }
        if (!placed) {
            classes.push_back({k});
            inv.push_back(iv_k);
        }
    }
    return classes;
}

inline std::vector<Orbit<BoxList>> clique_orbits(const std::vector<BoxSymmetry> &group, const std::vector<BoxList> &cliques)
{
    return orbits(group, cliques, [](const BoxSymmetry &g, const BoxList &c) { return act_on(g, c); });
}

struct ChiralOrbit {
    BoxList representative;
    std::size_t length = 0;
    std::size_t full_orbit = 0; // index of the Iso3 orbit containing it
    bool achiral = false;
};

struct ChiralityReport {
    std::vector<ChiralOrbit> proper;      // Iso3+ orbits
    std::vector<Orbit<BoxList>> improper; // Iso3 orbits
};

/// Iso3+ and Iso3 orbits; an orbit is achiral when the two coincide.
inline ChiralityReport chirality_report(const std::vector<BoxList> &cliques, int s)
{
    ChiralityReport r;
    auto plus = clique_orbits(product_group(s, GroupFlavor::Iso3Plus), cliques);
    r.improper = clique_orbits(product_group(s, GroupFlavor::Iso3), cliques);
    for (const auto &o : plus) {
        ChiralOrbit c{o.representative, o.members.size(), 0, false};
        for (std::size_t k = 0; k < r.improper.size(); ++k) {
            const auto &m = r.improper[k].members;
            if (std::binary_search(m.begin(), m.end(), o.representative)) {
                c.full_orbit = k;
                c.achiral = m.size() == o.members.size();
            }
        }
        r.proper.push_back(std::move(c));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Digit labels

class DigitCode {
public:
    static DigitCode load(const FixtureFile &f, const std::string &section)
    {
        DigitCode d;
        for (const auto &r : f.section(section)) {
            int digit = std::stoi(r.at(0));
            auto i = parse_interval(r.at(1));
            d.to_interval_[digit] = i;
            d.to_digit_[i] = digit;
        }
        return d;
    }

    Box<3> decode(const std::string &label) const
    {
        if (label.size() != 3)
            throw std::invalid_argument("digit label needs three digits: " + label);
        Box<3> b;
        for (std::size_t k = 0; k < 3; ++k) {
            auto it = to_interval_.find(label[k] - '0');
            if (it == to_interval_.end())
                throw std::invalid_argument("unknown digit in " + label);
            b[k] = it->second;
        }
        return b;
    }

    std::string encode(const Box<3> &b) const
    {
        std::string s;
        for (const auto &i : b) {
            auto it = to_digit_.find(i);
            if (it == to_digit_.end())
                throw std::invalid_argument("interval has no digit: " + to_string(i));
            s += static_cast<char>('0' + it->second);
        }
        return s;
    }

private:
    std::map<int, Interval> to_interval_;
    std::map<Interval, int> to_digit_;
};

struct ChiralityRow {
    int number = 0;
    std::string block;
    std::string sub_block;
    std::size_t length = 0;
    BoxList clique;
};

inline std::vector<ChiralityRow> load_chirality_rows(const FixtureFile &f, const std::string &section, const DigitCode &code)
{
    std::vector<ChiralityRow> out;
    for (const auto &r : f.section(section)) {
        if (r.size() != 16)
            throw std::runtime_error("chirality row needs 16 fields");
        ChiralityRow row{std::stoi(r[0]), r[1], r[2], std::stoul(r[3]), {}};
        for (std::size_t k = 4; k < 16; ++k)
            row.clique.push_back(code.decode(r[k]));
        row.clique = sorted(std::move(row.clique));
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Compressible cliques

/// Componentwise order of eps-vectors: every touching axis of C also touches in D.
inline bool codes_below(const CodeMatrix &c, const CodeMatrix &d)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if ((c[i][j] & ~d[i][j]) != 0)
                return false;
    return true;
}

/// Rounds every half-integer endpoint up to the next integer.
inline BoxList round_half_up(const BoxList &c)
{
    BoxList out;
    for (auto b : c) {
        for (auto &i : b)
            i = Interval{i.lo + (i.lo & 1), i.hi + (i.hi & 1)};
        out.push_back(b);
    }
    return out;
}

struct CompressibleReport {
    bool cliques = false;
    bool matrices_match = false;
    bool below = false;
    bool maps_onto = false;
    std::size_t aut_order = 0;
    std::map<int, int> aut_profile;
};

/// Checks one compressible example against its tabulated matrix and the
/// incompressible clique it degenerates from.
inline CompressibleReport verify_compressible(const BoxList &c, const CodeMatrix &table, const BoxList &d)
{
    CompressibleReport r;
    r.cliques = c.size() == 12 && is_clique(c) && std::set<Box<3>>(c.begin(), c.end()).size() == 12;
    auto a = adjacency_matrix(c);
    r.matrices_match = a == table;
    r.below = codes_below(a, adjacency_matrix(d));
    auto rounded = round_half_up(c);
    r.maps_onto = rounded == d;
    for (std::size_t ax = 0; ax < 3 && r.maps_onto; ++ax) {
        std::map<Interval, Interval> f;
        for (std::size_t k = 0; k < c.size(); ++k)
            f[c[k][ax]] = rounded[k][ax];
        r.maps_onto = is_homomorphism(f);
    }
    auto perms = automorphism_perms(automorphisms(a));
    r.aut_order = perms.size();
    r.aut_profile = order_profile(perms);
    return r;
}

/// Single-step degenerations: on one axis, move the endpoint p of a proper
/// subset of the intervals ending or starting at p by half a unit. Returns
/// the cliques found whose adjacency matrix differs from the source.
inline std::vector<BoxList> explore_degenerations(const BoxList &d)
{
    std::set<BoxList> out;
    auto ad = adjacency_matrix(d);
    for (std::size_t ax = 0; ax < 3; ++ax) {
        std::set<int> ends;
        for (const auto &b : d) {
            ends.insert(b[ax].lo);
            ends.insert(b[ax].hi);
        }
        for (int p : ends) {
            std::vector<std::pair<std::size_t, bool>> touch; // (box, is_lo)
            for (std::size_t k = 0; k < d.size(); ++k) {
                if (d[k][ax].lo == p)
                    touch.emplace_back(k, true);
                if (d[k][ax].hi == p)
                    touch.emplace_back(k, false);
            }
            const std::size_t n = touch.size();
            if (n < 2 || n > 16)
                continue;
            for (unsigned mask = 1; mask + 1 < (1U << n); ++mask)
                for (int dir : {-1, 1}) {
                    BoxList c = d;
                    bool valid = true;
                    for (std::size_t t = 0; t < n && valid; ++t) {
                        if (!((mask >> t) & 1U))
                            continue;
                        auto &iv_ = c[touch[t].first][ax];
                        int lo = iv_.lo;
                        int hi = iv_.hi;
                        (touch[t].second ? lo : hi) += dir;
                        if (lo >= hi)
                            valid = false;
                        else
                            iv_ = Interval{lo, hi};
                    }
                    if (!valid || !is_clique(c))
                        continue;
                    if (adjacency_matrix(c) != ad)
                        out.insert(c);
                }
        }
    }
    return {out.begin(), out.end()};
}

} // namespace nnbox

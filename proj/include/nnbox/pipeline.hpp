#pragma once

// Reconstruction of the maximum cliques of I^3 from their axis profiles:
// pairs of 5-cycles (Cp5), quadruples (Mc), flat candidates for the planar
// projection (Fl, Flat) and the final 3-D cliques (Cq). A direct search for
// cliques with prescribed projections serves as an independent check.

#include "autgroup.hpp"
#include "core.hpp"
#include "planar.hpp"
#include "profiles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nnbox {

using CyclePair = std::pair<FiveCycle, FiveCycle>;

inline int skeleton_deficit(const FiveCycle &g, const FiveCycle &d)
{
    const int s = std::max(sep(g), sep(d));
    auto u = g.combination() + d.combination();
    int miss = 0;
    for (const auto &i : skeleton(s).members)
        if (!u.count(i))
            ++miss;
    return miss;
}

/// Ordered pairs of 5-cycles whose union misses at most v - 10 skeleton
/// intervals at level max(sep).
inline std::vector<CyclePair> build_Cp5(const std::vector<FiveCycle> &co5, int v, bool ordered = true)
{
    std::vector<CyclePair> out;
    for (std::size_t i = 0; i < co5.size(); ++i)
        for (std::size_t j = ordered ? 0 : i; j < co5.size(); ++j)
            if (skeleton_deficit(co5[i], co5[j]) <= v - 10)
                out.emplace_back(co5[i], co5[j]);
    return out;
}

struct Quadruple {
    FiveCycle l1;
    FiveCycle l2;
    IntervalCombination l3;
    Profile lambda;

    auto key() const { return std::tie(l1, l2, l3, lambda.s, lambda.lambda); }
    bool operator<(const Quadruple &o) const { return key() < o.key(); }
    bool operator==(const Quadruple &o) const { return key() == o.key(); }
};

inline std::vector<Quadruple> build_Mc(const std::vector<CyclePair> &cp5, const std::vector<Profile> &Lhat)
{
    std::vector<Quadruple> out;
    for (const auto &p : Lhat)
        for (const auto &[a, b] : cp5) {
            auto ab = a.combination() + b.combination();
            if (ab.is_sub_of(p.lambda))
                out.push_back(Quadruple{a, b, p.lambda - ab, p});
        }
    std::sort(out.begin(), out.end());
    return out;
}

using BoxComb2 = Combination<Box<2>>;

struct FlatQuadruple {
    BoxComb2 phi1;
    BoxComb2 phi2;
    BoxComb2 phi3;

    BoxComb2 phi() const { return phi1 + phi2 + phi3; }
    auto operator<=>(const FlatQuadruple &o) const
    {
        auto a = std::tie(phi1.terms(), phi2.terms(), phi3.terms());
        auto b = std::tie(o.phi1.terms(), o.phi2.terms(), o.phi3.terms());
        if (a < b)
            return std::strong_ordering::less;
        if (b < a)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const FlatQuadruple &o) const
    {
        return phi1 == o.phi1 && phi2 == o.phi2 && phi3 == o.phi3;
    }
};

/// alpha <= 2 for a list of boxes (copies of one box are independent).
template <std::size_t N>
bool alpha_at_most_two(const std::vector<Box<N>> &boxes)
{
    const std::size_t n = boxes.size();
    if (n > 64)
        throw std::out_of_range("alpha_at_most_two: too many boxes");
    std::vector<Mask> non(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !box_adjacent(boxes[i], boxes[j]))
                non[i] |= Mask{1} << j;
    for (std::size_t i = 0; i < n; ++i)
        for (Mask q = non[i] & ~((Mask{2} << i) - 1); q; q &= q - 1) {
            auto j = static_cast<std::size_t>(lowest(q));
            if (non[i] & non[j])
                return false;
        }
    return true;
}

namespace detail {

    inline std::vector<std::vector<Box<2>>> merge_bijections(const IntervalCombination &a, const IntervalCombination &b)
    {
        auto x = a.expand();
        auto y = b.expand();
        if (x.size() != y.size())
            throw std::invalid_argument("merge: sizes differ");
        std::set<std::vector<Box<2>>> out;
        std::sort(y.begin(), y.end());
        do {
            std::vector<Box<2>> m;
            for (std::size_t k = 0; k < x.size(); ++k)
                m.push_back(Box<2>{x[k], y[k]});
            std::sort(m.begin(), m.end());
            out.insert(m);
        } while (std::next_permutation(y.begin(), y.end()));
        return {out.begin(), out.end()};
    }

} // namespace detail

/// Fl(q, qbar): planar quadruples projecting to q on axis 1 and qbar on
/// axis 2 with alpha(phi) <= 2.
inline std::vector<FlatQuadruple> build_Fl(const Quadruple &q, const Quadruple &qb, const std::vector<Labeling> &labelings)
{
    std::vector<Clique2> c1;
    std::vector<Clique2> c2;
    for (const auto &l : labelings) {
        c1.push_back(clique_from_labeling(q.l1, qb.l1, l));
        c2.push_back(clique_from_labeling(q.l2, qb.l2, l));
    }
    std::vector<FlatQuadruple> out;
    for (const auto &m : detail::merge_bijections(q.l3, qb.l3)) {
        // a 3-anticlique needs a box of phi3; screen each clique alone first
        std::vector<bool> ok1(c1.size());
        std::vector<bool> ok2(c2.size());
        for (std::size_t a = 0; a < c1.size(); ++a) {
            auto v = c1[a];
            v.insert(v.end(), m.begin(), m.end());
            ok1[a] = alpha_at_most_two(v);
        }
        for (std::size_t b = 0; b < c2.size(); ++b) {
            auto v = c2[b];
            v.insert(v.end(), m.begin(), m.end());
            ok2[b] = alpha_at_most_two(v);
        }
        for (std::size_t a = 0; a < c1.size(); ++a) {
            if (!ok1[a])
                continue;
            for (std::size_t b = 0; b < c2.size(); ++b) {
                if (!ok2[b])
                    continue;
                auto v = c1[a];
                v.insert(v.end(), c2[b].begin(), c2[b].end());
                v.insert(v.end(), m.begin(), m.end());
                if (alpha_at_most_two(v))
                    out.push_back(FlatQuadruple{as_combination(c1[a]), as_combination(c2[b]), as_combination(m)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Runs f(i) for i in [0, n) on the given number of threads.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F f)
{
    threads = std::max(1U, threads);
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += threads)
                f(i);
        });
    for (auto &th : pool)
        th.join();
}

/// Flat(v), the deduplicated union of Fl(q, qbar) over Mc(v)^2.
inline std::vector<FlatQuadruple> build_Flat(const std::vector<Quadruple> &mc, const std::vector<Labeling> &labelings,
    unsigned threads = 1)
{
    std::vector<std::vector<FlatQuadruple>> parts(mc.size());
    parallel_for(mc.size(), threads, [&](std::size_t i) {
        for (const auto &qb : mc) {
            auto fl = build_Fl(mc[i], qb, labelings);
            parts[i].insert(parts[i].end(), fl.begin(), fl.end());
        }
    });
    std::vector<FlatQuadruple> out;
    for (auto &p : parts)
        out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Lifting to dimension three

struct Decomposition3 {
    IntervalCombination beta1;
    IntervalCombination beta2;
};

inline std::map<std::string, Decomposition3> load_decompositions(const FixtureFile &f)
{
    std::map<std::string, Decomposition3> out;
    for (const auto &r : f.section("decomposition")) {
        auto bar = std::find(r.begin(), r.end(), "|");
        if (bar == r.end())
            throw std::runtime_error("decomposition row needs '|'");
        out[r.at(0)] = Decomposition3{parse_combination(FixtureRow(r.begin() + 1, bar)),
            parse_combination(FixtureRow(bar + 1, r.end()))};
    }
    return out;
}

namespace detail {

    inline std::vector<std::vector<Box<3>>> lift_part(const BoxComb2 &phi, const IntervalCombination &beta)
    {
        auto x = phi.expand();
        auto y = beta.expand();
        if (x.size() != y.size())
            throw std::invalid_argument("lift: sizes differ");
        std::set<std::vector<Box<3>>> out;
        std::sort(y.begin(), y.end());
        do {
            std::vector<Box<3>> m;
            for (std::size_t k = 0; k < x.size(); ++k)
                m.push_back(Box<3>{x[k][0], x[k][1], y[k]});
            std::sort(m.begin(), m.end());
            out.insert(m);
        } while (std::next_permutation(y.begin(), y.end()));
        return {out.begin(), out.end()};
    }

    inline bool cross_adjacent(const std::vector<Box<3>> &a, const std::vector<Box<3>> &b)
    {
        for (const auto &x : a)
            for (const auto &y : b)
                if (!box_adjacent(x, y))
                    return false;
        return true;
    }

} // namespace detail

/// 12-cliques of I^3 obtained from flat quadruples with phi_1 = lambda by
/// attaching third coordinates beta1, beta2 and lambda - beta1 - beta2.
inline std::vector<BoxList> assemble_Cq(const std::vector<FlatQuadruple> &flat, const IntervalCombination &lambda,
    const Decomposition3 &d)
{
    const auto beta3 = lambda - d.beta1 - d.beta2;
    std::set<BoxList> out;
    for (const auto &p : flat) {
        auto phi = p.phi();
        if (project_axis(phi, 0) != lambda)
            continue;
        auto a = detail::lift_part(p.phi1, d.beta1);
        auto b = detail::lift_part(p.phi2, d.beta2);
        auto c = detail::lift_part(p.phi3, beta3);
        for (const auto &x : a)
            for (const auto &y : b) {
                if (!detail::cross_adjacent(x, y))
                    continue;
                for (const auto &z : c) {
                    if (!detail::cross_adjacent(x, z) || !detail::cross_adjacent(y, z) || !is_clique(z))
                        continue;
                    BoxList all = x;
                    all.insert(all.end(), y.begin(), y.end());
                    all.insert(all.end(), z.begin(), z.end());
                    out.insert(sorted(std::move(all)));
                }
            }
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Direct search

namespace detail {

    // Backtracking over box ids (f, a, b) indexing the supports of the three
    // profiles. Boxes sharing a first coordinate form a class and are placed
    // in increasing id order; the class with the fewest candidates goes next.
    class ProjectionSearch {
    public:
        ProjectionSearch(const std::array<IntervalCombination, 3> &gamma, std::size_t limit)
            : limit_(limit)
        {
            for (std::size_t ax = 0; ax < 3; ++ax) {
                sup_[ax] = gamma[ax].support();
                for (const auto &i : sup_[ax])
                    left_[ax].push_back(gamma[ax].count(i));
            }
            n1_ = sup_[1].size();
            n2_ = sup_[2].size();
            nb_ = sup_[0].size() * n1_ * n2_;
            words_ = (nb_ + 63) / 64;
            adj_.assign(nb_ * words_, 0);
            for (std::size_t x = 0; x < nb_; ++x)
                for (std::size_t y = 0; y < nb_; ++y)
                    if (box_adjacent(box(x), box(y)))
                        adj_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
            last_.assign(sup_[0].size(), -1);
        }

        std::vector<BoxList> run()
        {
            std::vector<std::uint64_t> all(words_, ~std::uint64_t{0});
            dfs(all);
            std::sort(out_.begin(), out_.end());
            out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
            return std::move(out_);
        }

    private:
        Box<3> box(std::size_t id) const
        {
            return Box<3>{sup_[0][id / (n1_ * n2_)], sup_[1][(id / n2_) % n1_], sup_[2][id % n2_]};
        }

        bool usable(std::size_t id) const
        {
            return left_[1][(id / n2_) % n1_] > 0 && left_[2][id % n2_] > 0;
        }

        void dfs(const std::vector<std::uint64_t> &compat)
        {
            if (stop_)
                return;
            std::size_t best = sup_[0].size();
            std::vector<std::size_t> best_cands;
            for (std::size_t c = 0; c < sup_[0].size(); ++c) {
                if (!left_[0][c])
                    continue;
                std::vector<std::size_t> cands;
                std::size_t from = c * n1_ * n2_;
                if (last_[c] >= 0)
                    from = static_cast<std::size_t>(last_[c]) + 1;
                for (std::size_t id = from; id < (c + 1) * n1_ * n2_; ++id)
                    if (((compat[id / 64] >> (id % 64)) & 1U) && usable(id))
                        cands.push_back(id);
                if (cands.size() < static_cast<std::size_t>(left_[0][c]))
                    return;
                if (best == sup_[0].size() || cands.size() < best_cands.size()) {
                    best = c;
                    best_cands = std::move(cands);
                }
            }
            if (best == sup_[0].size()) {
                out_.push_back(sorted(cur_));
                if (limit_ && out_.size() >= limit_)
                    stop_ = true;
                return;
            }
            const long saved = last_[best];
            std::vector<std::uint64_t> next(words_);
            for (std::size_t id : best_cands) {
                const std::size_t a = (id / n2_) % n1_;
                const std::size_t b = id % n2_;
                if (!left_[1][a] || !left_[2][b])
                    continue;
                for (std::size_t w = 0; w < words_; ++w)
                    next[w] = compat[w] & adj_[id * words_ + w];
                --left_[0][best];
                --left_[1][a];
                --left_[2][b];
                last_[best] = static_cast<long>(id);
                cur_.push_back(box(id));
                dfs(next);
                cur_.pop_back();
                ++left_[0][best];
                ++left_[1][a];
                ++left_[2][b];
                if (stop_)
                    break;
            }
            last_[best] = saved;
        }

        std::size_t limit_;
        std::array<std::vector<Interval>, 3> sup_;
        std::array<std::vector<int>, 3> left_;
        std::size_t n1_ = 0;
        std::size_t n2_ = 0;
        std::size_t nb_ = 0;
        std::size_t words_ = 0;
        std::vector<std::uint64_t> adj_;
        std::vector<long> last_;
        BoxList cur_;
        std::vector<BoxList> out_;
        bool stop_ = false;
    };

} // namespace detail

/// All cliques C of I^3 with sum_{I in C} I_i = gamma_i for each axis, found
/// by exhaustive backtracking; at most limit of them when limit > 0.
inline std::vector<BoxList> cliques_with_projections(const std::array<IntervalCombination, 3> &gamma,
    std::size_t limit = 0)
{
    const int m = gamma[0].size();
    if (gamma[1].size() != m || gamma[2].size() != m)
        return {};
    return detail::ProjectionSearch(gamma, limit).run();
}

// ---------------------------------------------------------------------------
// Certificates

struct B3Certificate {
    int lower = 0;
    int upper = 0;
    bool empty_above_14 = false;
    bool l14_is_bar = false;
    long bar_edges = 0;
    long c14_2 = 0;
    bool kills_14 = false;
    bool n13_has_type_one = false;
    bool flat13_empty = false;
    std::vector<std::string> log;
};

/// Links the pieces: a verified 12-clique gives b3 >= 12; emptiness of L(s,v)
/// for v >= 15, the edge count of the single member of L(14) and Flat(13) = {}
/// give b3 <= 12.
inline B3Certificate prove_b3(const BoxList &witness, const IntervalCombination &bar,
    const std::vector<Profile> &Lhat13, const std::vector<FlatQuadruple> &flat13)
{
    B3Certificate c;
    if (witness.size() == 12 && is_clique(witness) && std::set<Box<3>>(witness.begin(), witness.end()).size() == 12)
        c.lower = 12;
    c.log.push_back("lower bound: " + std::string(c.lower == 12 ? "verified 12-clique" : "witness rejected"));
    c.empty_above_14 = true;
    for (int v = 15; v <= max_mass; ++v)
        for (int s = min_level; s <= max_profile_level; ++s)
            if (!enumerate_L(s, v).empty())
                c.empty_above_14 = false;
    std::vector<Profile> l14;
    for (int s = min_level; s <= max_profile_level; ++s) {
        auto part = enumerate_L(s, 14);
        l14.insert(l14.end(), part.begin(), part.end());
    }
    c.l14_is_bar = l14.size() == 1 && l14[0].lambda == bar;
    c.bar_edges = edge_count(bar);
    c.c14_2 = choose2(14);
    c.kills_14 = c.l14_is_bar && c.c14_2 > 3 * c.bar_edges;
    c.log.push_back("v=14: " + std::to_string(c.c14_2) + " = |E(C)| <= 3|E(bar)| = " + std::to_string(3 * c.bar_edges) +
        (c.kills_14 ? " is false" : " holds"));
    auto eb = verify_edge_bound_typeII(Lhat13, 13);
    c.n13_has_type_one = eb.holds && eb.equality_cases.empty();
    c.flat13_empty = flat13.empty();
    c.log.push_back("v=13: every triple of N(13) has a type I member: " + std::string(c.n13_has_type_one ? "yes" : "no"));
    c.log.push_back("v=13: Flat(13) is " + std::string(c.flat13_empty ? "empty" : "not empty"));
    const bool upper_ok = c.empty_above_14 && c.kills_14 && c.n13_has_type_one && c.flat13_empty;
    c.upper = upper_ok ? 12 : 17;
    return c;
}

/// No 12-clique has all three projections equal to lambda*.
inline bool check_bezrozw(const IntervalCombination &star)
{
    return cliques_with_projections({star, star, star}, 1).empty();
}

struct MarozwReport {
    std::size_t triples = 0;
    std::size_t all_type_two = 0;
    std::size_t candidates = 0;
    std::vector<std::array<std::size_t, 3>> solvable;
    bool consistent = true;
};

/// Walks N(12). A triple whose members are all of type II is handled by the
/// direct search. Otherwise, for each type I position k, the other two
/// profiles (in axis order) must be the planar projection of some member of
/// Flat(12); surviving candidates are settled by the direct search.
inline MarozwReport check_marozw(const std::vector<Profile> &Lhat, const std::vector<std::array<std::size_t, 3>> &N,
    const std::vector<FlatQuadruple> &flat, unsigned threads = 1)
{
    std::set<std::pair<IntervalCombination, IntervalCombination>> planar;
    for (const auto &p : flat) {
        auto phi = p.phi();
        planar.emplace(project_axis(phi, 0), project_axis(phi, 1));
    }
    MarozwReport r;
    r.triples = N.size();
    std::vector<std::array<std::size_t, 3>> cand;
    for (const auto &t : N) {
        bool any_one = false;
        bool pass = false;
        for (int k = 0; k < 3; ++k) {
            if (Lhat[t[static_cast<std::size_t>(k)]].type != ProfileType::I)
                continue;
            any_one = true;
            const auto &x = Lhat[t[static_cast<std::size_t>((k + 1) % 3)]].lambda;
            const auto &y = Lhat[t[static_cast<std::size_t>((k + 2) % 3)]].lambda;
            // the planar axes are ordered cyclically after k; Flat is closed
            // under swapping them, so either order works
            if (planar.count({x, y}) || planar.count({y, x}))
                pass = true;
        }
        if (!any_one)
            ++r.all_type_two;
        if (!any_one || pass)
            cand.push_back(t);
    }
    r.candidates = cand.size();
    std::vector<char> solvable(cand.size(), 0);
    parallel_for(cand.size(), threads, [&](std::size_t i) {
        const auto &t = cand[i];
        solvable[i] = !cliques_with_projections({Lhat[t[0]].lambda, Lhat[t[1]].lambda, Lhat[t[2]].lambda}, 1).empty();
    });
    for (std::size_t i = 0; i < cand.size(); ++i)
        if (solvable[i])
            r.solvable.push_back(cand[i]);
    return r;
}

} // namespace nnbox

#pragma once

// Randomized property suites over seeded mt19937 streams. Each suite returns
// the number of cases run and a description of the first failing case.

#include "nnbox/compress.hpp"
#include "support.hpp"

#include <bit>
#include <functional>
#include <string>

namespace nnbox::testing {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int checked = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const std::string &what)
    {
        if (failures++ == 0)
            first_failure = what;
    }
};

/// Maximum total multiplicity of an independent subset of the support.
template <class V, class Adj>
long brute_weighted_alpha(const Combination<V> &c, Adj adj)
{
    auto sup = c.support();
    const std::size_t n = sup.size();
    long best = 0;
    for (unsigned long m = 0; m < (1UL << n); ++m) {
        bool ok = true;
        long w = 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(m >> i & 1UL))
                continue;
            w += c.count(sup[i]);
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((m >> j & 1UL) && adj(sup[i], sup[j]))
                    ok = false;
        }
        if (ok)
            best = std::max(best, w);
    }
    return best;
}

/// Random combination of at most twelve distinct intervals with endpoints in [0, hi].
inline IntervalCombination random_free_combination(std::mt19937 &rng, int hi, int mass)
{
    IntervalCombination c;
    while (c.size() < mass) {
        auto i = random_interval(rng, hi);
        if (c.count(i) == 0 && c.support_size() >= 12)
            continue;
        c.add(i);
    }
    return c;
}

inline std::vector<std::vector<Box<3>>> sample_cliques(std::mt19937 &rng, int cases)
{
    std::vector<std::vector<Box<3>>> out;
    while (static_cast<int>(out.size()) < cases) {
        auto c = random_clique<3>(rng, 6, 40);
        if (!c.empty())
            out.push_back(std::move(c));
    }
    return out;
}

/// alpha by the eps formula and by weighted independent set, and omega,
/// against subset search on supports of at most twelve vertices.
inline SuiteResult suite_alpha_omega(int cases, unsigned seed)
{
    SuiteResult r{"alpha/omega vs subset search", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> level(1, 5);
    std::uniform_int_distribution<int> mass(1, 16);
    for (int t = 0; t < cases; ++t) {
        const bool on_grid = t % 2 == 0;
        const int s = level(rng);
        auto c = on_grid ? random_combination(rng, s, mass(rng)) : random_free_combination(rng, 9, mass(rng));
        const long a = brute_weighted_alpha(c, iv_adj);
        ++r.checked;
        if ((on_grid && alpha(c, s) != a) || alpha_general(c) != a)
            r.fail("alpha of " + to_string(c));
        if (omega(c) != brute_omega(c.support(), iv_adj))
            r.fail("omega of " + to_string(c));
    }
    return r;
}

/// |gamma| <= 4 alpha - 3 whenever alpha > 1.
inline SuiteResult suite_four_alpha(int cases, unsigned seed)
{
    SuiteResult r{"|gamma| <= 4 alpha - 3", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> level(1, 9);
    std::uniform_int_distribution<int> mass(1, 30);
    for (int t = 0; t < cases; ++t) {
        auto c = t % 2 ? random_combination(rng, level(rng), mass(rng)) : random_free_combination(rng, 12, mass(rng));
        const int a = alpha_general(c);
        if (a <= 1)
            continue;
        ++r.checked;
        if (c.size() > 4 * a - 3)
            r.fail(to_string(c));
    }
    return r;
}

/// alpha(gamma_K) <= omega(gamma_{K^c}) for every proper K on random 3-D cliques.
inline SuiteResult suite_projection_alpha(int cases, unsigned seed)
{
    SuiteResult r{"alpha(gamma_K) <= omega(gamma_Kc)", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    for (const auto &c : sample_cliques(rng, cases)) {
        auto g = Combination<Box<3>>::from_range(c);
        for (std::size_t k = 0; k < 3; ++k) {
            std::array<std::size_t, 2> rest{std::min((k + 1) % 3, (k + 2) % 3), std::max((k + 1) % 3, (k + 2) % 3)};
            auto single = project_axis(g, k);
            auto pair = project(g, rest);
            ++r.checked;
            if (alpha_general(single) > omega(pair) || alpha_boxes(pair) > omega(single))
                r.fail("clique of " + std::to_string(c.size()) + " boxes, axis " + std::to_string(k));
        }
    }
    return r;
}

/// |E(C)| <= sum |E(gamma_i)|, with equality iff every pair touches on one axis.
inline SuiteResult suite_edge_inequality(int cases, unsigned seed)
{
    SuiteResult r{"|E(C)| <= sum |E(gamma_i)|", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    for (const auto &c : sample_cliques(rng, cases)) {
        const long m = static_cast<long>(c.size());
        long sum = 0;
        for (std::size_t k = 0; k < 3; ++k)
            sum += edge_count(project_axis(c, k));
        bool one_axis = true;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                one_axis = one_axis && std::popcount(eps_code(c[i], c[j])) == 1;
        ++r.checked;
        if (m * (m - 1) / 2 > sum || (m * (m - 1) / 2 == sum) != one_axis)
            r.fail("clique of " + std::to_string(m) + " boxes");
    }
    return r;
}

/// normalize: a homomorphism into I(s) hitting every unit interval, with
/// alpha >= floor(s/2) + 1 and [1,3], [s-2,s] hit when s >= 3.
inline SuiteResult suite_normalize(int cases, unsigned seed)
{
    SuiteResult r{"compression facts (1)-(3)", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(1, 9);
    for (int t = 0; t < cases; ++t) {
        std::vector<Interval> fam;
        const int n = size(rng);
        for (int k = 0; k < n; ++k)
            fam.push_back(random_interval(rng, 9));
        auto res = normalize(fam);
        auto img = res.image_set();
        std::string desc = "family of " + std::to_string(fam.size()) + " at s=" + std::to_string(res.s);
        ++r.checked;
        bool ok = is_homomorphism(res.image);
        for (const auto &i : img)
            ok = ok && interval_system(res.s).contains(i);
        for (int i = 0; i <= res.s; ++i)
            ok = ok && img.count(iv(i, i + 1));
        std::set<Interval> d(fam.begin(), fam.end());
        ok = ok && alpha_general(IntervalCombination::from_range(d)) >= res.s / 2 + 1;
        if (res.s >= 3)
            ok = ok && img.count(iv(1, 3)) && img.count(iv(res.s - 2, res.s));
        if (!ok)
            r.fail(desc);
    }
    return r;
}

/// alpha(f_* gamma) <= alpha(gamma) for the compression homomorphism f.
inline SuiteResult suite_homomorphism_alpha(int cases, unsigned seed)
{
    SuiteResult r{"alpha(f_* gamma) <= alpha(gamma)", cases, 0, 0, {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> mass(2, 16);
    for (int t = 0; t < cases; ++t) {
        auto c = random_free_combination(rng, 10, mass(rng));
        auto res = normalize(c.support());
        auto image = c.pushforward([&](const Interval &i) { return res.image.at(i); });
        ++r.checked;
        if (image.size() != c.size() || brute_weighted_alpha(image, iv_adj) > brute_weighted_alpha(c, iv_adj))
            r.fail(to_string(c));
    }
    return r;
}

inline std::vector<std::function<SuiteResult()>> all_suites(int cases)
{
    return {
        [=] { return suite_alpha_omega(cases, 1001); },
        [=] { return suite_four_alpha(cases, 1003); },
        [=] { return suite_projection_alpha(cases, 1004); },
        [=] { return suite_edge_inequality(cases, 1005); },
        [=] { return suite_normalize(cases, 1006); },
        [=] { return suite_homomorphism_alpha(cases, 1007); },
    };
}

} // namespace nnbox::testing

#pragma once

// Fixture access and brute-force oracles shared by the test binaries.

#include "nnbox/core.hpp"
#include "nnbox/fixtures.hpp"
#include "nnbox/interval_graph.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace nnbox::testing {

inline std::filesystem::path fixture_dir() { return NNBOX_FIXTURES_DIR; }

inline FixtureFile fixture(const std::string &name) { return FixtureFile::load(fixture_dir() / name); }

/// Largest independent subset of the expanded vertex list, by subset search.
template <class V, class Adj>
int brute_alpha(const std::vector<V> &xs, Adj adj)
{
    const std::size_t n = xs.size();
    int best = 0;
    for (unsigned long m = 0; m < (1UL << n); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((m >> i & 1UL) && (m >> j & 1UL) && adj(xs[i], xs[j]))
                    ok = false;
        if (ok)
            best = std::max(best, std::popcount(m));
    }
    return best;
}

template <class V, class Adj>
int brute_omega(const std::vector<V> &xs, Adj adj)
{
    const std::size_t n = xs.size();
    int best = 0;
    for (unsigned long m = 0; m < (1UL << n); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((m >> i & 1UL) && (m >> j & 1UL) && !adj(xs[i], xs[j]))
                    ok = false;
        if (ok)
            best = std::max(best, std::popcount(m));
    }
    return best;
}

inline bool iv_adj(const Interval &a, const Interval &b) { return adjacent(a, b); }

/// Random combination over I(s) with the given total mass.
inline IntervalCombination random_combination(std::mt19937 &rng, int s, int mass)
{
    const auto &sys = interval_system(s);
    std::uniform_int_distribution<int> pick(0, sys.size() - 1);
    IntervalCombination c;
    for (int k = 0; k < mass; ++k)
        c.add(sys.vertex(pick(rng)));
    return c;
}

/// Random interval with endpoints in [0, hi].
inline Interval random_interval(std::mt19937 &rng, int hi)
{
    std::uniform_int_distribution<int> d(0, hi);
    int a = d(rng);
    int b = d(rng);
    while (b == a)
        b = d(rng);
    return iv(std::min(a, b), std::max(a, b));
}

/// Grows a random clique of boxes by rejection: each candidate box is kept
/// when it touches every box already chosen.
template <std::size_t N>
std::vector<Box<N>> random_clique(std::mt19937 &rng, int hi, int tries)
{
    std::vector<Box<N>> c;
    for (int t = 0; t < tries; ++t) {
        Box<N> b;
        for (auto &i : b)
            i = random_interval(rng, hi);
        bool ok = true;
        for (const auto &x : c)
            ok = ok && box_adjacent(x, b);
        if (ok)
            c.push_back(b);
    }
    return c;
}

} // namespace nnbox::testing

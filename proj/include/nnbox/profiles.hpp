#pragma once

// Candidate axis profiles L(s,v): combinations lambda over I(s) with
// |lambda| = v, alpha(lambda) <= 5 and S(s) <= supp lambda. Enumerated by
// depth-first search over the multiplicities k_I.

#include "autgroup.hpp"
#include "compress.hpp"
#include "core.hpp"
#include "fixtures.hpp"
#include "interval_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nnbox {

inline constexpr int min_level = 3;
inline constexpr int max_profile_level = 9;
inline constexpr int min_mass = 12;
inline constexpr int max_mass = 17;
inline constexpr int max_alpha = 5;

enum class ProfileType { I, II };

struct Profile {
    int s = 0;
    IntervalCombination lambda;
    long edges = 0;
    ProfileType type = ProfileType::I;

    bool operator==(const Profile &o) const { return s == o.s && lambda == o.lambda; }
    bool operator<(const Profile &o) const { return std::pair(s, lambda) < std::pair(o.s, o.lambda); }
};

inline void check_profile_range(int s, int v)
{
    if (s < min_level || s > max_profile_level)
        throw std::out_of_range("s must be in 3..9");
    if (v < min_mass || v > max_mass)
        throw std::out_of_range("v must be in 12..17");
}

namespace detail {

    class ProfileSearch {
    public:
        ProfileSearch(int s, int v) : sys_(interval_system(s)), v_(v)
        {
            const auto sk = skeleton(s).members;
            for (const auto &vtx : sys_.vertices())
                forced_.push_back(std::find(sk.begin(), sk.end(), vtx) != sk.end());
            const std::size_t n = forced_.size();
            forced_after_.assign(n + 1, 0);
            for (std::size_t k = n; k-- > 0;)
                forced_after_[k] = forced_after_[k + 1] + (forced_[k] ? 1 : 0);
            mass_.assign(sys_.eps_families().size(), 0);
            counts_.assign(n, 0);
        }

        std::vector<std::vector<int>> run()
        {
            dfs(0, v_);
            return std::move(out_);
        }

    private:
        void dfs(std::size_t k, int remaining)
        {
            const std::size_t n = counts_.size();
            if (k == n) {
                if (remaining == 0)
                    out_.push_back(counts_);
                return;
            }
            if (remaining < forced_after_[k])
                return;
            const auto &fams = sys_.families_of_vertex()[k];
            int slack = max_alpha;
            for (int f : fams)
                slack = std::min(slack, max_alpha - mass_[static_cast<std::size_t>(f)]);
            const int lo = forced_[k] ? 1 : 0;
            const int hi = std::min(slack, remaining - forced_after_[k + 1]);
            for (int c = lo; c <= hi; ++c) {
                counts_[k] = c;
                for (int f : fams)
                    mass_[static_cast<std::size_t>(f)] += c;
                dfs(k + 1, remaining - c);
                for (int f : fams)
                    mass_[static_cast<std::size_t>(f)] -= c;
            }
            counts_[k] = 0;
        }

        const IntervalSystem &sys_;
        int v_;
        std::vector<bool> forced_;
        std::vector<int> forced_after_;
        std::vector<int> mass_;
        std::vector<int> counts_;
        std::vector<std::vector<int>> out_;
    };

} // namespace detail

/// Two disjoint induced subcombinations of size 5, each independent, if any.
inline std::optional<std::pair<IntervalCombination, IntervalCombination>> type_one_witness(
    const IntervalCombination &lambda)
{
    const auto support = lambda.support();
    const int n = static_cast<int>(support.size());
    if (n > 24)
        throw std::out_of_range("support too large for the type search");
    std::vector<unsigned> conflict(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (adjacent(support[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)]))
                conflict[static_cast<std::size_t>(a)] |= 1U << b;
    std::vector<unsigned> fives;
    // independent support subsets of mass exactly 5
    auto grow = [&](auto &&self, int from, unsigned chosen, unsigned banned, int mass) -> void {
        if (mass == 5) {
            fives.push_back(chosen);
            return;
        }
        for (int k = from; k < n; ++k) {
            if ((banned >> k) & 1U)
                continue;
            int m = lambda.count(support[static_cast<std::size_t>(k)]);
            if (mass + m > 5)
                continue;
            self(self, k + 1, chosen | (1U << k), banned | conflict[static_cast<std::size_t>(k)], mass + m);
        }
    };
    grow(grow, 0, 0U, 0U, 0);
    for (std::size_t a = 0; a < fives.size(); ++a)
        for (std::size_t b = a + 1; b < fives.size(); ++b)
            if ((fives[a] & fives[b]) == 0) {
                auto pick = [&](unsigned m) {
                    return lambda.induced([&](const Interval &i) {
                        auto pos = std::lower_bound(support.begin(), support.end(), i) - support.begin();
                        return ((m >> pos) & 1U) != 0;
                    });
                };
                return std::pair(pick(fives[a]), pick(fives[b]));
            }
    return std::nullopt;
}

inline ProfileType classify_type(const IntervalCombination &lambda)
{
    return type_one_witness(lambda) ? ProfileType::I : ProfileType::II;
}

inline Profile make_profile(int s, IntervalCombination lambda)
{
    Profile p{s, std::move(lambda), 0, ProfileType::I};
    p.edges = edge_count(p.lambda);
    p.type = classify_type(p.lambda);
    return p;
}

/// Whether lambda satisfies the defining conditions of L(s,v).
inline bool in_L(const IntervalCombination &lambda, int s, int v)
{
    check_profile_range(s, v);
    const auto &sys = interval_system(s);
    for (const auto &[i, k] : lambda.terms())
        if (!sys.contains(i))
            return false;
    for (const auto &i : skeleton(s).members)
        if (lambda.count(i) < 1)
            return false;
    return lambda.size() == v && alpha(lambda, s) <= max_alpha;
}

/// L(s,v), sorted.
inline std::vector<Profile> enumerate_L(int s, int v)
{
    check_profile_range(s, v);
    const auto &sys = interval_system(s);
    std::vector<Profile> out;
    for (const auto &counts : detail::ProfileSearch(s, v).run())
        out.push_back(make_profile(s, sys.sparse(counts)));
    std::sort(out.begin(), out.end());
    return out;
}

/// Orbit representative used for L-hat: the orbit member with least dense vector.
inline IntervalCombination profile_canonical(const IntervalCombination &lambda, int s) { return canonical_rep(lambda, s); }

/// L-hat(s,v): one canonical representative per Aut(I(s))-orbit.
inline std::vector<Profile> quotient_Lhat(const std::vector<Profile> &L)
{
    std::set<Profile> reps;
    for (const auto &p : L) {
        auto c = profile_canonical(p.lambda, p.s);
        if (c == p.lambda)
            reps.insert(p);
        else
            reps.insert(make_profile(p.s, c));
    }
    return {reps.begin(), reps.end()};
}

inline std::vector<Profile> quotient_Lhat(int s, int v) { return quotient_Lhat(enumerate_L(s, v)); }

// ---------------------------------------------------------------------------
// Tabulated representatives

struct TableRow {
    int number = 0;
    Profile profile;
    long quoted_edges = 0;
    bool quoted_type_two = false;
};

struct ProfileTable {
    int s = 0;
    int v = 0;
    std::vector<Interval> columns;
    std::vector<TableRow> rows;
};

inline std::string table_section(int s, int v) { return "s" + std::to_string(s) + "_v" + std::to_string(v); }

/// Parses one Appendix B style table; returns nullopt when absent.
inline std::optional<ProfileTable> load_profile_table(const FixtureFile &f, int s, int v)
{
    const auto name = table_section(s, v);
    if (!f.has(name))
        return std::nullopt;
    ProfileTable t{s, v, {}, {}};
    for (const auto &tok : f.section(name + "_columns").at(0))
        t.columns.push_back(parse_interval(tok));
    for (const auto &r : f.section(name)) {
        if (r.size() != t.columns.size() + 2)
            throw std::runtime_error("table " + name + ": row width mismatch");
        TableRow row;
        row.number = std::stoi(r.front());
        IntervalCombination lambda;
        for (std::size_t c = 0; c < t.columns.size(); ++c)
            lambda.add(t.columns[c], std::stoi(r[c + 1]));
        std::string e = r.back();
        row.quoted_type_two = !e.empty() && e.back() == '\'';
        if (row.quoted_type_two)
            e.pop_back();
        row.quoted_edges = std::stol(e);
        row.profile = make_profile(s, std::move(lambda));
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline std::vector<ProfileTable> load_profile_tables(const FixtureFile &f)
{
    std::vector<ProfileTable> out;
    for (int v = min_mass; v <= 13; ++v)
        for (int s = min_level; s <= max_profile_level; ++s)
            if (auto t = load_profile_table(f, s, v))
                out.push_back(std::move(*t));
    return out;
}

/// The union over s of the tabulated representatives for mass v.
inline std::vector<Profile> tabulated_Lhat(const std::vector<ProfileTable> &tables, int v)
{
    std::vector<Profile> out;
    for (const auto &t : tables)
        if (t.v == v)
            for (const auto &r : t.rows)
                out.push_back(r.profile);
    return out;
}

/// Union over s of our canonical L-hat(s,v).
inline std::vector<Profile> canonical_Lhat(int v)
{
    std::vector<Profile> out;
    for (int s = min_level; s <= max_profile_level; ++s) {
        auto part = quotient_Lhat(s, v);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct TableComparison {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Compares a tabulated set of representatives with L(s,v) modulo Aut(I(s)):
/// every row must lie in the Aut(I(s))-orbit of a member of L(s,v), rows must
/// hit distinct orbits, every orbit must be hit, and quoted e and type
/// markers must match.
inline TableComparison compare_table(const ProfileTable &t, const std::vector<Profile> &L)
{
    TableComparison r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.problems.push_back(table_section(t.s, t.v) + ": " + std::move(msg));
    };
    std::set<IntervalCombination> orbits;
    for (const auto &p : L)
        orbits.insert(profile_canonical(p.lambda, p.s));
    std::set<IntervalCombination> hit;
    for (const auto &row : t.rows) {
        const auto &p = row.profile;
        const std::string tag = "row " + std::to_string(row.number);
        if (p.lambda.size() != t.v || alpha(p.lambda, t.s) > max_alpha)
            fail(tag + " violates |lambda| = v or alpha <= 5");
        auto c = profile_canonical(p.lambda, t.s);
        if (!hit.insert(c).second)
            fail(tag + " repeats an orbit");
        if (!orbits.count(c))
            fail(tag + " is not an orbit of L(s,v)");
        if (row.quoted_edges != p.edges)
            fail(tag + " edge count " + std::to_string(p.edges) + " differs from quoted " +
                std::to_string(row.quoted_edges));
        if (row.quoted_type_two != (p.type == ProfileType::II))
            fail(tag + " type marker differs");
    }
    if (hit.size() != orbits.size())
        fail("covers " + std::to_string(hit.size()) + " of " + std::to_string(orbits.size()) + " orbits");
    return r;
}

// ---------------------------------------------------------------------------
// Triples

inline long choose2(long n) { return n * (n - 1) / 2; }

/// N(v): ordered triples from L-hat(v) whose edge counts sum to at least C(v,2).
inline std::vector<std::array<std::size_t, 3>> build_N(const std::vector<Profile> &Lhat, int v)
{
    std::vector<std::array<std::size_t, 3>> out;
    const long need = choose2(v);
    for (std::size_t a = 0; a < Lhat.size(); ++a)
        for (std::size_t b = 0; b < Lhat.size(); ++b)
            for (std::size_t c = 0; c < Lhat.size(); ++c)
                if (Lhat[a].edges + Lhat[b].edges + Lhat[c].edges >= need)
                    out.push_back({a, b, c});
    return out;
}

struct EdgeBoundReport {
    bool holds = true;
    std::vector<Profile> equality_cases;
    std::vector<Profile> violations;
};

/// E(lambda) <= C(v,2)/3 for every type-II profile.
inline EdgeBoundReport verify_edge_bound_typeII(const std::vector<Profile> &Lhat, int v)
{
    EdgeBoundReport r;
    const long bound3 = choose2(v);
    for (const auto &p : Lhat) {
        if (p.type != ProfileType::II)
            continue;
        if (3 * p.edges > bound3) {
            r.holds = false;
            r.violations.push_back(p);
        } else if (3 * p.edges == bound3) {
            r.equality_cases.push_back(p);
        }
    }
    return r;
}

/// CSV in the tabulated layout: all intervals of I(s) as columns, then e with
/// a trailing ' for type II.
inline std::string profiles_csv(int s, const std::vector<Profile> &profiles)
{
    const auto &sys = interval_system(s);
    std::ostringstream out;
    out << "no";
    for (const auto &i : sys.vertices())
        out << ',' << to_string(i);
    out << ",e\n";
    int n = 0;
    for (const auto &p : profiles) {
        out << ++n;
        for (int k : sys.dense(p.lambda))
            out << ',' << k;
        out << ',' << p.edges << (p.type == ProfileType::II ? "'" : "") << '\n';
    }
    return out.str();
}

/// Named combinations from the profile fixture.
inline std::map<std::string, IntervalCombination> load_named_profiles(const FixtureFile &f)
{
    std::map<std::string, IntervalCombination> out;
    for (const auto &r : f.section("named"))
        out[r.at(0)] = parse_combination(FixtureRow(r.begin() + 1, r.end()));
    return out;
}

} // namespace nnbox

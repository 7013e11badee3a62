#pragma once

// Stage orchestration shared by the command-line tool and the acceptance
// suite: fixture bundle, pipeline runs per mass v, and the clique families.

#include "classify.hpp"
#include "fixtures.hpp"
#include "pipeline.hpp"
#include "planar.hpp"
#include "profiles.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace nnbox {

struct FixtureBundle {
    FixtureFile profiles;
    FixtureFile planar;
    FixtureFile cliques;
    FixtureFile matrices;
    FixtureFile automorphisms;
    FixtureFile chirality;
    FixtureFile appendix_a;
    FixtureFile appendix_b;
    FixtureFile counts;

    static FixtureBundle load(const std::filesystem::path &dir)
    {
        auto f = [&](const char *name) { return FixtureFile::load((dir / name).string()); };
        return FixtureBundle{f("profiles.txt"), f("planar.txt"), f("cliques.txt"), f("matrices.txt"),
            f("automorphisms.txt"), f("chirality.txt"), f("appendix_a.txt"), f("appendix_b.txt"), f("counts.txt")};
    }
};

/// name -> integers from rows "name n1 n2 ...".
inline std::map<std::string, std::vector<long>> load_counts(const FixtureFile &f, const std::string &section)
{
    std::map<std::string, std::vector<long>> out;
    for (const auto &r : f.section(section)) {
        auto &v = out[r.at(0)];
        for (std::size_t k = 1; k < r.size(); ++k)
            v.push_back(std::stol(r[k]));
    }
    return out;
}

/// Published |L(s,v)| or |L-hat(s,v)| for v in {12, 13}, indexed by s - 3.
inline std::map<int, std::vector<long>> load_profile_counts(const FixtureFile &f, const std::string &section)
{
    std::map<int, std::vector<long>> out;
    for (const auto &[k, v] : load_counts(f, section))
        out[std::stoi(k)] = v;
    return out;
}

struct PipelineRun {
    int v = 0;
    std::vector<FiveCycle> co5;
    std::vector<CyclePair> cp5;
    std::vector<Profile> lhat;
    std::vector<Quadruple> mc;
    std::vector<FlatQuadruple> flat;
};

inline std::vector<FiveCycle> build_Co5() { return enumerate_5cycles(max_profile_level); }

inline PipelineRun run_pipeline(int v, const std::vector<FiveCycle> &co5, const std::vector<Labeling> &labelings,
    unsigned threads)
{
    PipelineRun r;
    r.v = v;
    r.co5 = co5;
    r.cp5 = build_Cp5(co5, v);
    r.lhat = canonical_Lhat(v);
    r.mc = build_Mc(r.cp5, r.lhat);
    r.flat = build_Flat(r.mc, labelings, threads);
    return r;
}

/// The 12-cliques with all three projections equal to the named profile.
inline std::vector<BoxList> clique_family(const FixtureBundle &fx, const std::string &suit)
{
    auto named = load_named_profiles(fx.profiles);
    const auto &l = named.at(suit);
    return cliques_with_projections({l, l, l});
}

inline int suit_level(const std::string &suit) { return suit == "clubs" ? 4 : 5; }

} // namespace nnbox

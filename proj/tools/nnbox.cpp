// nnbox: command-line driver for the profile, pipeline, classification and
// export stages.

#include "nnbox/classify.hpp"
#include "nnbox/io.hpp"
#include "nnbox/stages.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#ifndef NNBOX_FIXTURES_DIR
#define NNBOX_FIXTURES_DIR "fixtures"
#endif

namespace fs = std::filesystem;
using namespace nnbox;

namespace {

struct RunConfig {
    fs::path out = "nnbox-out";
    fs::path fixtures = NNBOX_FIXTURES_DIR;
    unsigned threads = 1;
    bool strict = false;
    bool explore = false;
};

struct StrictAbort {};

class GoldenLog {
public:
    explicit GoldenLog(bool strict) : strict_(strict) {}

    template <class A, class B>
    void expect(const std::string &name, const A &got, const B &want)
    {
        const bool ok = got == want;
        std::cout << (ok ? "  ok        " : "  MISMATCH  ") << name << ": " << show(got);
        if (!ok)
            std::cout << " (published " << show(want) << ")";
        std::cout << '\n';
        if (!ok) {
            ++failures_;
            if (strict_)
                throw StrictAbort{};
        }
    }

    void expect_true(const std::string &name, bool ok) { expect(name, ok ? "yes" : "no", std::string("yes")); }

    int failures() const { return failures_; }

private:
    template <class T>
    static std::string show(const T &x)
    {
        if constexpr (std::is_convertible_v<T, std::string>) {
            return std::string(x);
        } else if constexpr (requires { x.begin(); }) {
            std::string s = "(";
            bool first = true;
            for (const auto &e : x) {
                s += (first ? "" : ",") + std::to_string(e);
                first = false;
            }
            return s + ")";
        } else {
            return std::to_string(x);
        }
    }

    bool strict_;
    int failures_ = 0;
};

class Manifest {
public:
    explicit Manifest(fs::path path) : path_(std::move(path))
    {
        if (fs::exists(path_))
            doc_ = json::parse(read_text(path_));
        if (!doc_.is_object())
            doc_ = json::object();
        doc_["schema"] = 1;
        if (!doc_.contains("stages"))
            doc_["stages"] = json::object();
    }

    void add(const StageRecord &r)
    {
        doc_["stages"][r.stage] = to_json(r);
        std::cout << "  stage " << r.stage << ": " << r.count << " items, hash " << r.hash << ", "
                  << std::fixed << std::setprecision(2) << r.seconds << " s\n";
        std::cout.unsetf(std::ios::fixed);
    }

    void save() const { write_text(path_, doc_.dump(1) + "\n"); }

private:
    fs::path path_;
    json doc_;
};

long expected(const std::map<std::string, std::vector<long>> &m, const std::string &key)
{
    auto it = m.find(key);
    if (it == m.end() || it->second.empty())
        throw std::runtime_error("counts fixture lacks " + key);
    return it->second.front();
}

// ---------------------------------------------------------------------------

int cmd_profiles(const RunConfig &cfg, std::optional<int> s_opt, std::optional<int> v_opt, bool appendix_b)
{
    auto fx = FixtureBundle::load(cfg.fixtures);
    GoldenLog log(cfg.strict);
    if (appendix_b) {
        auto tables = load_profile_tables(fx.appendix_b);
        std::cout << "tabulated representatives, compared modulo Aut(I(s)):\n";
        for (const auto &t : tables) {
            if ((s_opt && t.s != *s_opt) || (v_opt && t.v != *v_opt))
                continue;
            auto cmp = compare_table(t, enumerate_L(t.s, t.v));
            log.expect_true(table_section(t.s, t.v) + " (" + std::to_string(t.rows.size()) + " rows)", cmp.ok);
            for (const auto &p : cmp.problems)
                std::cout << "            " << p << '\n';
        }
        return log.failures() ? 1 : 0;
    }
    auto counts_L = load_profile_counts(fx.profiles, "counts_L");
    auto counts_H = load_profile_counts(fx.profiles, "counts_Lhat");
    std::vector<int> ss;
    std::vector<int> vs;
    for (int s = min_level; s <= max_profile_level; ++s)
        if (!s_opt || s == *s_opt)
            ss.push_back(s);
    if (v_opt)
        vs.push_back(*v_opt);
    else
        vs = {12, 13};
    Manifest manifest(cfg.out / "manifest.json");
    for (int v : vs)
        for (int s : ss) {
            Stopwatch w;
            auto L = enumerate_L(s, v);
            auto H = quotient_Lhat(L);
            const auto tag = "s" + std::to_string(s) + "_v" + std::to_string(v);
            write_text(cfg.out / ("L_" + tag + ".csv"), profiles_csv(s, L));
            write_text(cfg.out / ("Lhat_" + tag + ".csv"), profiles_csv(s, H));
            json params{{"s", s}, {"v", v}};
            manifest.add(StageRecord{"L_" + tag, params, L.size(), hex64(fnv1a64(profiles_csv(s, L))), w.seconds()});
            manifest.add(StageRecord{"Lhat_" + tag, params, H.size(), hex64(fnv1a64(profiles_csv(s, H))), w.seconds()});
            if (counts_L.count(v)) {
                log.expect("|L(" + std::to_string(s) + "," + std::to_string(v) + ")|", static_cast<long>(L.size()),
                    counts_L[v].at(static_cast<std::size_t>(s - min_level)));
                log.expect("|Lhat(" + std::to_string(s) + "," + std::to_string(v) + ")|",
                    static_cast<long>(H.size()), counts_H[v].at(static_cast<std::size_t>(s - min_level)));
            }
        }
    manifest.save();
    return log.failures() ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_pipeline(const RunConfig &cfg, std::optional<int> v_opt)
{
    auto fx = FixtureBundle::load(cfg.fixtures);
    auto want = load_counts(fx.counts, "pipeline");
    auto labelings = load_labelings(fx.planar);
    auto named = load_named_profiles(fx.profiles);
    auto decomp = load_decompositions(fx.profiles);
    GoldenLog log(cfg.strict);
    Manifest manifest(cfg.out / "manifest.json");

    Stopwatch w0;
    auto co5 = build_Co5();
    manifest.add(write_stage(cfg.out, "co5", json{{"s", max_profile_level}}, to_json(co5), w0.seconds()));
    log.expect("|Co5|", static_cast<long>(co5.size()), expected(want, "co5"));

    std::vector<int> vs = v_opt ? std::vector<int>{*v_opt} : std::vector<int>{12, 13};
    std::map<int, PipelineRun> runs;
    for (int v : vs) {
        const auto V = std::to_string(v);
        std::cout << "v = " << v << '\n';
        Stopwatch w;
        auto run = run_pipeline(v, co5, labelings, cfg.threads);
        json params{{"v", v}};
        manifest.add(write_stage(cfg.out, "cp5_" + V, params, to_json(run.cp5), w.seconds()));
        manifest.add(write_stage(cfg.out, "lhat_" + V, params, to_json(run.lhat), w.seconds()));
        manifest.add(write_stage(cfg.out, "mc_" + V, params, to_json(run.mc), w.seconds()));
        manifest.add(write_stage(cfg.out, "flat_" + V, params, to_json(run.flat), w.seconds()));
        log.expect("|Cp5(" + V + ")|", static_cast<long>(run.cp5.size()), expected(want, "cp5_" + V));
        log.expect("|Mc(" + V + ")|", static_cast<long>(run.mc.size()), expected(want, "mc_" + V));
        log.expect("|Flat(" + V + ")|", static_cast<long>(run.flat.size()), expected(want, "flat_" + V));
        if (v == 12) {
            for (const std::string suit : {"clubs", "spades"}) {
                Stopwatch wc;
                auto cq = assemble_Cq(run.flat, named.at(suit), decomp.at(suit));
                manifest.add(write_stage(cfg.out, "cq_" + suit, json{{"suit", suit}}, to_json(cq), wc.seconds()));
                log.expect("|Cq " + suit + "|", static_cast<long>(cq.size()), expected(want, "cq_" + suit));
            }
        }
        if (v == 13)
            std::cout << "  verdict: " << (run.flat.empty() ? "no 13-clique" : "13-clique candidates remain") << '\n';
        runs.emplace(v, std::move(run));
    }

    if (!v_opt) {
        std::cout << "certificate\n";
        auto b3 = prove_b3(load_clique(fx.cliques, "example1"), named.at("bar"), runs.at(13).lhat, runs.at(13).flat);
        for (const auto &line : b3.log)
            std::cout << "  " << line << '\n';
        log.expect("b3 lower bound", b3.lower, 12);
        log.expect("b3 upper bound", b3.upper, 12);
        log.expect_true("no clique with all projections lambda*", check_bezrozw(named.at("star")));
        Stopwatch wm;
        const auto &l12 = runs.at(12).lhat;
        auto N = build_N(l12, 12);
        auto m = check_marozw(l12, N, runs.at(12).flat, cfg.threads);
        json triples = json::array();
        for (const auto &t : m.solvable)
            triples.push_back(json::array({to_string(l12[t[0]].lambda), to_string(l12[t[1]].lambda),
                to_string(l12[t[2]].lambda)}));
        manifest.add(write_stage(cfg.out, "marozw", json{{"v", 12}, {"triples", m.triples}}, triples, wm.seconds()));
        std::cout << "  N(12): " << m.triples << " triples, " << m.candidates << " candidates\n";
        log.expect("solvable triples", static_cast<long>(m.solvable.size()), expected(want, "marozw_solvable"));
        std::set<IntervalCombination> suits;
        for (const auto &t : m.solvable)
            if (l12[t[0]].lambda == l12[t[1]].lambda && l12[t[1]].lambda == l12[t[2]].lambda)
                suits.insert(l12[t[0]].lambda);
        log.expect_true("solvable triples are clubs^3 and spades^3",
            suits == std::set<IntervalCombination>{profile_canonical(named.at("clubs"), 4),
                         profile_canonical(named.at("spades"), 5)} &&
                m.solvable.size() == 2);
    }
    manifest.save();
    return log.failures() ? 1 : 0;
}

// ---------------------------------------------------------------------------

std::vector<BoxList> load_or_build_cq(const RunConfig &cfg, const FixtureBundle &fx, const std::string &suit)
{
    const auto path = cfg.out / ("cq_" + suit + ".json");
    if (fs::exists(path)) {
        std::vector<BoxList> out;
        for (const auto &c : json::parse(read_text(path)).at("items"))
            out.push_back(sorted(boxes_from_json(c)));
        return out;
    }
    return clique_family(fx, suit);
}

std::string chirality_table(const ChiralityReport &r, const DigitCode &code)
{
    std::ostringstream o;
    for (std::size_t k = 0; k < r.proper.size(); ++k) {
        const auto &p = r.proper[k];
        o << k + 1 << ' ' << p.full_orbit + 1 << ' ' << p.length << (p.achiral ? " achiral" : " chiral");
        for (const auto &b : p.representative)
            o << ' ' << code.encode(b);
        o << '\n';
    }
    return o.str();
}

void check_chirality(GoldenLog &log, const FixtureBundle &fx, const std::string &suit, const std::vector<BoxList> &cq,
    const ChiralityReport &r)
{
    auto code = DigitCode::load(fx.chirality, "digits_" + suit);
    auto rows = load_chirality_rows(fx.chirality, suit, code);
    const int s = suit_level(suit);
    auto plus = clique_orbits(product_group(s, GroupFlavor::Iso3Plus), cq);
    std::set<std::size_t> hit;
    bool rows_ok = true;
    std::map<std::string, std::set<std::size_t>> sub_to_full;
    std::set<int> achiral_rows;
    for (const auto &row : rows) {
        std::optional<std::size_t> at;
        for (std::size_t k = 0; k < plus.size(); ++k)
            if (std::binary_search(plus[k].members.begin(), plus[k].members.end(), row.clique))
                at = k;
        if (!at || !hit.insert(*at).second || plus[*at].members.size() != row.length) {
            rows_ok = false;
            continue;
        }
        sub_to_full[row.block + row.sub_block].insert(r.proper[*at].full_orbit);
        if (r.proper[*at].achiral)
            achiral_rows.insert(row.number);
    }
    std::set<std::size_t> fulls;
    for (const auto &[k, f] : sub_to_full) {
        rows_ok = rows_ok && f.size() == 1;
        fulls.insert(*f.begin());
    }
    log.expect_true(suit + ": each tabulated row is a distinct orbit of the quoted length", rows_ok);
    log.expect(suit + ": orbits", static_cast<long>(plus.size()), static_cast<long>(rows.size()));
    log.expect(suit + ": sub-blocks = full isometry orbits", fulls.size(), r.improper.size());
    std::set<int> want_achiral;
    if (fx.chirality.has("achiral_" + suit))
        for (const auto &row : fx.chirality.section("achiral_" + suit))
            for (const auto &x : row)
                want_achiral.insert(std::stoi(x));
    log.expect(suit + ": achiral rows", achiral_rows, want_achiral);
}

int cmd_classify(const RunConfig &cfg)
{
    auto fx = FixtureBundle::load(cfg.fixtures);
    auto want = load_counts(fx.counts, "classification");
    GoldenLog log(cfg.strict);
    json report;

    auto C = load_or_build_cq(cfg, fx, "clubs");
    auto S = load_or_build_cq(cfg, fx, "spades");
    std::cout << "families: clubs " << C.size() << ", spades " << S.size() << '\n';

    std::cout << "combinatorial equivalence\n";
    auto all = C;
    all.insert(all.end(), S.begin(), S.end());
    auto classes = equivalence_classes(all);
    auto cc = equivalence_classes(C);
    auto cs = equivalence_classes(S);
    log.expect("classes in clubs", static_cast<long>(cc.size()), expected(want, "classes_clubs"));
    log.expect("classes in spades", static_cast<long>(cs.size()), expected(want, "classes_spades"));
    log.expect("classes overall", static_cast<long>(classes.size()), expected(want, "classes"));
    report["classes"] = json::array();
    for (const auto &c : classes)
        report["classes"].push_back(json{{"size", c.size()}, {"representative", to_json(all[c.front()])}});

    std::cout << "orbits\n";
    auto oc = clique_orbits(product_group(4, GroupFlavor::A3), C);
    auto os = clique_orbits(product_group(5, GroupFlavor::Aut3), S);
    auto os2 = clique_orbits(product_group(5, GroupFlavor::A3), S);
    std::vector<long> lens;
    for (const auto &o : os)
        lens.push_back(static_cast<long>(o.members.size()));
    std::sort(lens.begin(), lens.end());
    log.expect("A3(4)-orbits of clubs", static_cast<long>(oc.size()), expected(want, "a3_clubs_orbits"));
    log.expect("Aut3(5)-orbit lengths of spades", lens, want.at("aut3_spades_orbits"));
    log.expect("A3(5)-orbits of spades", static_cast<long>(os2.size()), expected(want, "a3_spades_orbits"));

    std::cout << "automorphisms\n";
    auto aut_counts = load_counts(fx.automorphisms, "counts");
    for (const auto &[name, nums] : aut_counts) {
        auto c = load_clique(fx.cliques, name);
        auto a = adjacency_matrix(c);
        auto perms = automorphism_perms(automorphisms(a));
        auto proto = protoautomorphisms(a);
        log.expect(name + ": |Aut|", static_cast<long>(perms.size()), nums.at(0));
        log.expect(name + ": protoautomorphisms", static_cast<long>(proto.size()), nums.at(1));
        if (fx.automorphisms.has(name)) {
            std::set<Perm> listed;
            for (const auto &r : fx.automorphisms.section(name))
                listed.insert(parse_cycles(join_row(r), 12));
            log.expect_true(name + ": automorphisms equal the listed permutations",
                listed == std::set<Perm>(perms.begin(), perms.end()));
        }
        if (fx.matrices.has(name))
            log.expect_true(name + ": adjacency matrix equals the table", a == load_matrix(fx.matrices, name));
        auto prof = order_profile(perms);
        report["automorphisms"][name] = json{{"order", perms.size()}, {"protoautomorphisms", proto.size()},
            {"center", center_size(perms)}, {"element_orders", prof}};
        write_text(cfg.out / "matrices" / (name + ".csv"), matrix_csv(a));
    }
    {
        auto pd1 = automorphism_perms(automorphisms(adjacency_matrix(load_clique(fx.cliques, "d1"))));
        auto pd2 = automorphism_perms(automorphisms(adjacency_matrix(load_clique(fx.cliques, "d2"))));
        log.expect_true("d2 has an automorphism of order 12", order_profile(pd2).count(12) == 1);
        log.expect_true("d1 has no automorphism of order 12", order_profile(pd1).count(12) == 0);
        std::vector<Perm> gens;
        for (const auto &r : fx.automorphisms.section("example1_generators"))
            gens.push_back(parse_cycles(join_row(r), 12));
        auto ex = automorphism_perms(automorphisms(adjacency_matrix(load_clique(fx.cliques, "example1"))));
        log.expect_true("example1: the listed generators generate Aut",
            generate_group(gens) == std::set<Perm>(ex.begin(), ex.end()));
    }

    std::cout << "chirality\n";
    for (const auto &[suit, fam] : {std::pair<std::string, const std::vector<BoxList> *>{"clubs", &C}, {"spades", &S}}) {
        auto r = chirality_report(*fam, suit_level(suit));
        check_chirality(log, fx, suit, *fam, r);
        write_text(cfg.out / ("chirality_" + suit + ".txt"),
            chirality_table(r, DigitCode::load(fx.chirality, "digits_" + suit)));
    }

    std::cout << "compressible cliques\n";
    const auto compressible_aut = expected(want, "compressible_aut");
    for (const std::string n : {"c1", "c2"}) {
        auto c = load_clique(fx.cliques, n);
        auto d = load_clique(fx.cliques, n == "c1" ? "d1" : "d2");
        auto r = verify_compressible(c, load_matrix(fx.matrices, n), d);
        log.expect_true(n + ": 12-clique", r.cliques);
        log.expect_true(n + ": adjacency matrix equals the table", r.matrices_match);
        log.expect_true(n + ": A_C <= A_D", r.below);
        log.expect_true(n + ": rounding maps it onto " + (n == "c1" ? std::string("d1") : std::string("d2")),
            r.maps_onto);
        log.expect(n + ": |Aut|", static_cast<long>(r.aut_order), compressible_aut);
        log.expect_true(n + ": element orders of Dih4", r.aut_profile == dih4_profile());
        log.expect(n + ": eps(J1,J8)", adjacency_matrix(c)[0][7], 4);
        report["compressible"][n] = json{{"aut_order", r.aut_order}, {"element_orders", r.aut_profile}};
    }
    log.expect_true("c1 and c2 are not equivalent",
        !are_isomorphic(load_clique(fx.cliques, "c1"), load_clique(fx.cliques, "c2")));
    if (fx.cliques.has("c1_printed"))
        std::cout << "  note      printed listing of c1 is "
                  << (is_clique(load_clique(fx.cliques, "c1_printed")) ? "" : "not ") << "a clique\n";

    if (cfg.explore) {
        std::cout << "exploratory search for compressible types\n";
        std::vector<BoxList> found;
        std::size_t from_clubs = 0;
        for (const auto *fam : {&C, &S})
            for (const auto &d : *fam) {
                auto f = explore_degenerations(d);
                if (fam == &C)
                    from_clubs += f.size();
                found.insert(found.end(), f.begin(), f.end());
            }
        auto types = equivalence_classes(found);
        std::cout << "  single-step degenerations: " << found.size() << " cliques, " << from_clubs
                  << " from clubs, " << types.size() << " classes\n";
        log.expect("total combinatorial types", static_cast<long>(classes.size() + types.size()),
            expected(want, "total_types"));
        report["explore"] = json{{"cliques", found.size()}, {"from_clubs", from_clubs}, {"classes", types.size()}};
    }

    write_text(cfg.out / "classify.json", report.dump(1) + "\n");
    return log.failures() ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_export(const RunConfig &cfg, const std::string &kind, const std::string &target)
{
    auto fx = FixtureBundle::load(cfg.fixtures);
    const fs::path dir = cfg.out / "export";
    std::optional<BoxList> clique;
    static const std::regex family_re(R"((cq_clubs|cq_spades)\[(\d+)\])");
    std::smatch m;
    std::string stem = target;
    if (std::regex_match(target, m, family_re)) {
        auto fam = load_or_build_cq(cfg, fx, m[1].str().substr(3));
        auto k = std::stoul(m[2].str());
        if (k >= fam.size())
            throw std::out_of_range(target + ": index out of range (" + std::to_string(fam.size()) + " members)");
        clique = fam[k];
        stem = m[1].str() + "_" + m[2].str();
    } else if (fx.cliques.has(target)) {
        clique = load_clique(fx.cliques, target);
    }

    if (kind == "obj") {
        if (!clique)
            throw std::invalid_argument("unknown target " + target);
        write_text(dir / (stem + ".obj"), boxes_obj(*clique, target));
    } else if (kind == "json") {
        if (!clique)
            throw std::invalid_argument("unknown target " + target);
        auto a = adjacency_matrix(*clique);
        json doc{{"schema", 1}, {"target", target}, {"boxes", to_json(*clique)}, {"adjacency", to_json(a)},
            {"automorphisms", automorphism_perms(automorphisms(a)).size()}};
        write_text(dir / (stem + ".json"), doc.dump(1) + "\n");
    } else if (kind == "svg") {
        auto named = load_named_profiles(fx.profiles);
        if (target == "figure2") {
            auto g = five_cycle(0, 1, 2, 3, 4);
            std::vector<Clique2> cs;
            std::vector<std::string> caps;
            for (const auto &l : load_labelings(fx.planar)) {
                cs.push_back(clique_from_labeling(g, g, l));
                caps.push_back(labeling_string(l));
            }
            write_text(dir / "figure2.svg", cliques_svg(cs, caps));
        } else if (named.count(target)) {
            write_text(dir / (target + ".svg"), profile_svg(named.at(target), target));
        } else {
            throw std::invalid_argument("unknown target " + target);
        }
    } else {
        throw std::invalid_argument("unknown export kind " + kind);
    }
    std::cout << "wrote " << (dir / stem).string() << '.' << kind << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"nnbox: nearly neighbourly box families"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string out = cfg.out.string();
    std::string fixtures = cfg.fixtures.string();
    app.add_option("--out", out, "output directory");
    app.add_option("--fixtures", fixtures, "fixture directory")->check(CLI::ExistingDirectory);
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1U, 256U));
    app.add_flag("--strict", cfg.strict, "stop at the first deviation from published values");
    app.add_flag("--explore-compressible", cfg.explore, "search single-step degenerations in classify");

    std::optional<int> s_opt;
    std::optional<int> v_opt;
    bool appendix_b = false;
    auto *prof = app.add_subcommand("profiles", "enumerate L(s,v) and its quotient");
    prof->add_option("--s", s_opt, "level s")->check(CLI::Range(min_level, max_profile_level));
    prof->add_option("--v", v_opt, "mass v")->check(CLI::Range(min_mass, max_mass));
    prof->add_flag("--check-appendix-b", appendix_b, "compare with the tabulated representatives");

    std::optional<int> pv;
    auto *pipe = app.add_subcommand("pipeline", "5-cycles, quadruples, flat cliques and Cq families");
    pipe->add_option("--v", pv, "clique size")->check(CLI::Range(12, 13));

    auto *cls = app.add_subcommand("classify", "equivalence, automorphisms, chirality, compressible cliques");

    std::string kind;
    std::string target;
    auto *exp = app.add_subcommand("export", "write OBJ, SVG or JSON for a target");
    exp->add_option("kind", kind, "obj | svg | json")->required()->check(CLI::IsMember({"obj", "svg", "json"}));
    exp->add_option("target", target, "example1, d1, d2, c1, c2, cq_clubs[i], cq_spades[i], figure2 or a profile")
        ->required();

    CLI11_PARSE(app, argc, argv);
    cfg.out = out;
    cfg.fixtures = fixtures;

    try {
        if (*prof)
            return cmd_profiles(cfg, s_opt, v_opt, appendix_b);
        if (*pipe)
            return cmd_pipeline(cfg, pv);
        if (*cls)
            return cmd_classify(cfg);
        if (*exp)
            return cmd_export(cfg, kind, target);
    } catch (const StrictAbort &) {
        std::cerr << "stopped at the first deviation (--strict)\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

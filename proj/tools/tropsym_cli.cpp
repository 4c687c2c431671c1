// Command-line frontend: tropicalised quasi-automorphisms of Grassmannian
// cluster algebras, the g-vector <-> tableau dictionary, fixed points,
// braid orbits, and the verification suite.

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropsym/acceptance.hpp"
#include "tropsym/cluster.hpp"
#include "tropsym/dynamics.hpp"
#include "tropsym/grassmann.hpp"
#include "tropsym/io_json.hpp"
#include "tropsym/tableau.hpp"

namespace {

using namespace tropsym;

IntVec parse_int_list(const std::string& s) {
    IntVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

std::string join(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Text;
}

Tableau tableau_from_arg(const std::string& arg, int k, int n) {
    json j = json::parse(arg);
    if (j.is_array()) // bare column list [[...],[...]]
        return Tableau(k, n, j.get<std::vector<std::vector<int>>>());
    return tableau_from_json(j);
}

void print_tableau(const Tableau& t, Format fmt) {
    if (fmt == Format::Json)
        std::cout << tableau_to_json(t).dump() << "\n";
    else
        std::cout << t.str() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"tropical quasi-automorphism toolkit for Grassmannian cluster algebras"};
    app.require_subcommand(1);

    int k = 0, n = 0, rank = 1, degree_cap = 10;
    std::string map_name, conv_name = "max", g_arg, tableau_arg, format_name = "text";
    std::string fixtures = "fixtures", family, b_arg, word_arg;
    std::uint64_t rng_seed = 7193;
    bool no_classify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "number of rows");
        cmd->add_option("--n", n, "alphabet bound");
        cmd->add_option("--format", format_name, "output format: text|json|csv");
        cmd->add_option("--rng-seed", rng_seed, "seed for randomized checks");
    };

    auto* cmd_mutate = app.add_subcommand("mutate", "mutate a labelled seed along a word");
    cmd_mutate->add_option("--family", family, "built-in exchange matrix: c2|b2|a2|c2-op|b2-op|a2-op");
    cmd_mutate->add_option("--b", b_arg, "exchange matrix as JSON, e.g. [[0,2],[-1,0]]");
    cmd_mutate->add_option("--word", word_arg, "comma-separated 1-based mutation word");
    cmd_mutate->add_option("--format", format_name, "output format: text|json");

    auto* cmd_trop = app.add_subcommand("trop-map", "apply a tropicalised quasi-automorphism to a g-vector");
    add_common(cmd_trop);
    cmd_trop->add_option("--map", map_name, "rho|rho-inv|theta|tau|tau-inv|sigma:<i>|sigma-inv:<i>")->required();
    cmd_trop->add_option("--conv", conv_name, "max|min");
    cmd_trop->add_option("--g", g_arg, "comma-separated integer vector")->required();

    auto* cmd_g2t = app.add_subcommand("gvec2tab", "tableau attached to a truncated g-vector");
    add_common(cmd_g2t);
    cmd_g2t->add_option("--g", g_arg, "comma-separated integer vector")->required();

    auto* cmd_t2g = app.add_subcommand("tab2gvec", "truncated g-vector of a tableau");
    add_common(cmd_t2g);
    cmd_t2g->add_option("--tableau", tableau_arg, "tableau JSON (cols)")->required();

    auto* cmd_act = app.add_subcommand("act", "quasi-automorphism action on a tableau");
    add_common(cmd_act);
    cmd_act->add_option("--map", map_name, "map name")->required();
    cmd_act->add_option("--tableau", tableau_arg, "tableau JSON (cols)")->required();

    auto* cmd_fp = app.add_subcommand("fixed-points", "fixed tableaux of a braid generator at a given rank");
    add_common(cmd_fp);
    cmd_fp->add_option("--map", map_name, "sigma:<i> or sigma-inv:<i>")->required();
    cmd_fp->add_option("--rank", rank, "number of columns");
    cmd_fp->add_flag("--no-classify", no_classify, "skip stability classification");

    auto* cmd_orbit = app.add_subcommand("orbit", "braid orbit of the stable fixed points up to a degree cap");
    add_common(cmd_orbit);
    cmd_orbit->add_option("--degree-cap", degree_cap, "maximal degree kept");
    cmd_orbit->add_option("--fixtures", fixtures, "fixtures directory (seed tableaux)");

    auto* cmd_tot = app.add_subcommand("totient", "degree counts of the braid orbit");
    add_common(cmd_tot);
    cmd_tot->add_option("--degree-cap", degree_cap, "maximal degree kept");
    cmd_tot->add_option("--fixtures", fixtures, "fixtures directory (seed tableaux)");

    auto* cmd_verify = app.add_subcommand("verify", "run the full verification suite");
    cmd_verify->add_option("--fixtures", fixtures, "fixtures directory");
    cmd_verify->add_option("--rng-seed", rng_seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format fmt = parse_format(format_name);

    auto need_ctx = [&]() {
        if (k < 2 || n <= k + 1)
            throw std::runtime_error("provide --k and --n with 2 <= k and n >= k+2");
        return GrContext(k, n);
    };

    auto orbit_seeds = [&](const GrContext& ctx) {
        json all = load_json_file(fixtures + "/catalogues/stable_fixed_points.json");
        std::vector<IntVec> seeds;
        for (const auto& [fam, data] : all.items()) {
            if (data.at("k").get<int>() != ctx.k() || data.at("n").get<int>() != ctx.n())
                continue;
            std::set<IntVec> uniq;
            for (const auto& tj : data.at("tableaux"))
                uniq.insert(tableau_to_gvector(tableau_from_json(tj)));
            seeds.assign(uniq.begin(), uniq.end());
        }
        if (seeds.empty())
            throw std::runtime_error("no stable fixed points on file for this (k,n)");
        return seeds;
    };

    if (cmd_mutate->parsed()) {
        ExchangeMatrix b0;
        if (!family.empty()) {
            if (family == "c2") b0 = ExchangeMatrix::c2();
            else if (family == "b2") b0 = ExchangeMatrix::b2();
            else if (family == "a2") b0 = ExchangeMatrix::a2();
            else if (family == "c2-op") b0 = ExchangeMatrix::c2().op();
            else if (family == "b2-op") b0 = ExchangeMatrix::b2().op();
            else if (family == "a2-op") b0 = ExchangeMatrix::a2().op();
            else throw std::runtime_error("unknown family: " + family);
        } else if (!b_arg.empty()) {
            b0 = ExchangeMatrix(json::parse(b_arg).get<IntMat>());
        } else {
            throw std::runtime_error("provide --family or --b");
        }
        Seed s = Seed::reference(b0);
        for (long long x : parse_int_list(word_arg)) s = mutate_seed(s, static_cast<int>(x), b0);
        if (fmt == Format::Json) {
            std::cout << json{{"B", s.b.mat()}, {"C", s.c}, {"G", s.g}, {"word", s.label}}.dump()
                      << "\n";
        } else {
            std::cout << "B = " << mat_str(s.b.mat()) << "\n";
            std::cout << "C = " << mat_str(s.c) << "\n";
            std::cout << "G = " << mat_str(s.g) << "\n";
        }
        return 0;
    }

    if (cmd_trop->parsed()) {
        GrContext ctx = need_ctx();
        const QuasiAuto f = parse_quasi_auto(map_name);
        if (conv_name != "max" && conv_name != "min")
            throw std::runtime_error("--conv must be max or min");
        const Conv conv = (conv_name == "min") ? Conv::Min : Conv::Max;
        IntVec v = parse_int_list(g_arg);
        IntVec out = trop_Q(ctx, f, v, conv);
        if (fmt == Format::Json)
            std::cout << json(out).dump() << "\n";
        else
            std::cout << join(out) << "\n";
        return 0;
    }

    if (cmd_g2t->parsed()) {
        GrContext ctx = need_ctx();
        print_tableau(gvector_to_tableau(parse_int_list(g_arg), ctx.k(), ctx.n()), fmt);
        return 0;
    }

    if (cmd_t2g->parsed()) {
        GrContext ctx = need_ctx();
        IntVec g = tableau_to_gvector(tableau_from_arg(tableau_arg, ctx.k(), ctx.n()));
        if (fmt == Format::Json)
            std::cout << json(g).dump() << "\n";
        else
            std::cout << join(g) << "\n";
        return 0;
    }

    if (cmd_act->parsed()) {
        GrContext ctx = need_ctx();
        const QuasiAuto f = parse_quasi_auto(map_name);
        print_tableau(act_on_tableau(f, tableau_from_arg(tableau_arg, ctx.k(), ctx.n()), ctx),
                      fmt);
        return 0;
    }

    if (cmd_fp->parsed()) {
        GrContext ctx = need_ctx();
        const QuasiAuto f = parse_quasi_auto(map_name);
        StabilityParams params;
        params.rng_seed = rng_seed;
        if (no_classify) params.trials = 0;
        auto reports = find_fixed_points(ctx, f, rank, params);
        if (fmt == Format::Json) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(fixed_point_to_json(r));
            std::cout << arr.dump(1) << "\n";
        } else if (fmt == Format::Csv) {
            std::cout << "tableau,g,rank,stability\n";
            for (const auto& r : reports)
                std::cout << "\"" << r.tableau.str() << "\",\"" << join(r.g) << "\"," << r.rank
                          << "," << stability_name(r.stability) << "\n";
        } else {
            for (const auto& r : reports)
                std::cout << r.tableau.str() << "  g=(" << join(r.g) << ")  "
                          << stability_name(r.stability) << "\n";
            std::cout << reports.size() << " fixed point(s)\n";
        }
        return 0;
    }

    if (cmd_orbit->parsed()) {
        GrContext ctx = need_ctx();
        BraidOrbit orbit = braid_orbit(ctx, orbit_seeds(ctx), degree_cap);
        if (fmt == Format::Json) {
            json arr = json::array();
            for (const auto& e : orbit.entries) arr.push_back(orbit_entry_to_json(e));
            std::cout << json{{"degree_cap", orbit.degree_cap}, {"entries", arr}}.dump(1)
                      << "\n";
        } else if (fmt == Format::Csv) {
            std::cout << "degree,g,word\n";
            for (const auto& e : orbit.entries) {
                std::string w;
                for (std::size_t i = 0; i < e.word.size(); ++i)
                    w += (i ? " " : "") + e.word[i].str();
                std::cout << e.degree << ",\"" << join(e.g) << "\",\"" << w << "\"\n";
            }
        } else {
            for (const auto& e : orbit.entries)
                std::cout << "deg " << e.degree << "  g=(" << join(e.g) << ")\n";
            std::cout << orbit.entries.size() << " orbit point(s) up to degree "
                      << orbit.degree_cap << "\n";
        }
        return 0;
    }

    if (cmd_tot->parsed()) {
        GrContext ctx = need_ctx();
        BraidOrbit orbit = braid_orbit(ctx, orbit_seeds(ctx), degree_cap);
        auto profile = totient_profile(orbit, degree_cap);
        if (fmt == Format::Json)
            std::cout << json(profile).dump() << "\n";
        else
            std::cout << join(profile) << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        AcceptanceConfig cfg;
        cfg.fixtures_dir = fixtures;
        cfg.rng_seed = rng_seed;
        return run_acceptance(cfg, std::cout) ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

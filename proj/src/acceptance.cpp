#include "tropsym/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "tropsym/cluster.hpp"
#include "tropsym/dynamics.hpp"
#include "tropsym/grassmann.hpp"
#include "tropsym/io_json.hpp"
#include "tropsym/sfexpr.hpp"
#include "tropsym/tableau.hpp"

namespace tropsym {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream detail;
    int failures = 0;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (++failures <= 8) detail << (failures > 1 ? "; " : "") << what;
        }
    }
};

IntVec column_of(const IntMat& m, int j) {
    IntVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i][j];
    return out;
}

IntVec random_point(int m, std::mt19937_64& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> coord(lo, hi);
    IntVec v(m);
    for (auto& x : v) x = coord(rng);
    return v;
}

std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

IntVec eval_sf_map(const std::vector<SfExpr>& lines, const GrContext& ctx, const IntVec& v,
                   Conv conv) {
    SfAssignment asg;
    for (int idx = 0; idx < ctx.m(); ++idx) {
        auto [a, b] = ctx.node_at(idx);
        asg[{a, b}] = v[idx];
    }
    IntVec out;
    out.reserve(lines.size());
    for (const auto& e : lines) out.push_back(trop_eval(e, asg, conv));
    return out;
}

Tableau random_tableau(int k, int n, int max_cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ncols(0, max_cols);
    Tableau t(k, n);
    const int c = ncols(rng);
    for (int i = 0; i < c; ++i) {
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 1);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> col(pool.begin(), pool.begin() + k);
        std::sort(col.begin(), col.end());
        t = tableau_union(t, Tableau(k, n, {col}));
    }
    return t;
}

struct Suite {
    const AcceptanceConfig& cfg;
    std::map<std::string, std::pair<IntVec, IntVec>> gr36;

    explicit Suite(const AcceptanceConfig& c) : cfg(c) {
        json tbl = load_json_file(cfg.fixtures_dir + "/tables/gr36_gvectors.json");
        for (const auto& e : tbl.at("entries"))
            gr36[e.at("var").get<std::string>()] = {e.at("g").get<IntVec>(),
                                                    e.at("g_op").get<IntVec>()};
    }

    // 1: rank-2 tables
    void rank2_tables(Checker& c) {
        for (const std::string name : {"c2", "c2_op", "b2", "b2_op", "a2", "a2_op"}) {
            json tbl = load_json_file(cfg.fixtures_dir + "/tables/" + name + ".json");
            const ExchangeMatrix b0(tbl.at("b0").get<IntMat>());
            Seed ref1 = mutate_seed(Seed::reference(b0), 1, b0);
            const ExchangeMatrix b1 = ref1.b;
            for (const auto& row : tbl.at("rows")) {
                Seed s = Seed::reference(b0);
                for (int k : row.at("word").get<std::vector<int>>()) s = mutate_seed(s, k, b0);
                c.expect(s.b.mat() == row.at("B").get<IntMat>(), name + ": B mismatch");
                c.expect(s.c == row.at("C_t0").get<IntMat>(), name + ": C(t0) mismatch");
                c.expect(s.g == row.at("G_t0").get<IntMat>(), name + ": G(t0) mismatch");
                Seed s1 = Seed::reference(b1);
                for (int k : row.at("word_from_t1").get<std::vector<int>>())
                    s1 = mutate_seed(s1, k, b1);
                c.expect(s1.c == row.at("C_t1").get<IntMat>(), name + ": C(t1) mismatch");
                c.expect(s1.g == row.at("G_t1").get<IntMat>(), name + ": G(t1) mismatch");
            }
        }
    }

    // 2: tropical transport for all words of length <= 8
    void tropical_transport(Checker& c) {
        for (const std::string name : {"c2", "b2", "a2"}) {
            json tbl = load_json_file(cfg.fixtures_dir + "/tables/" + name + ".json");
            const ExchangeMatrix b0(tbl.at("b0").get<IntMat>());
            std::vector<std::vector<int>> words{{}};
            for (std::size_t q = 0; q < words.size(); ++q) {
                if (words[q].size() == 8) continue;
                for (int k = 1; k <= 2; ++k) {
                    auto w2 = words[q];
                    w2.push_back(k);
                    words.push_back(w2);
                }
            }
            for (const auto& w : words) {
                if (w.empty()) continue;
                Seed fwd = Seed::reference(b0);
                for (int k : w) fwd = mutate_seed(fwd, k, b0);
                std::vector<int> rev(w.rbegin(), w.rend());
                Seed back = Seed::reference(fwd.b);
                for (int k : rev) back = mutate_seed(back, k, fwd.b);
                Seed back_op = Seed::reference(fwd.b.op());
                for (int k : rev) back_op = mutate_seed(back_op, k, fwd.b.op());
                for (int l = 0; l < 2; ++l) {
                    IntVec e(2, 0);
                    e[l] = 1;
                    c.expect(trop_compose(e, b0, w, Conv::Max) == column_of(back.g, l),
                             name + ": max transport failed");
                    c.expect(trop_compose(e, b0, w, Conv::Min) == column_of(back_op.g, l),
                             name + ": min transport failed");
                }
            }
        }
    }

    // 3: Gr(3,6) dictionary and worked transports
    void gr36_dictionary(Checker& c) {
        GrContext ctx(3, 6);
        json tbl = load_json_file(cfg.fixtures_dir + "/tables/gr36_gvectors.json");
        for (const auto& e : tbl.at("entries")) {
            Tableau t(3, 6, e.at("cols").get<std::vector<std::vector<int>>>());
            c.expect(tableau_to_gvector(t) == e.at("g").get<IntVec>(),
                     "g-vector of " + e.at("var").get<std::string>());
        }
        auto g = [&](const std::string& s) { return gr36.at(s).first; };
        auto gop = [&](const std::string& s) { return gr36.at(s).second; };
        auto neg = [](IntVec v) {
            for (auto& x : v) x = -x;
            return v;
        };
        c.expect(trop_Q(ctx, QuasiAuto::rho(), g("P124"), Conv::Max) == g("P235"), "Q+rho");
        c.expect(trop_Q(ctx, QuasiAuto::rho(), gop("P124"), Conv::Min) == gop("P235"), "Q-rho");
        c.expect(neg(trop_Q(ctx, QuasiAuto::theta(), g("P124"), Conv::Max)) == gop("P356"),
                 "Q+theta");
        c.expect(neg(trop_Q(ctx, QuasiAuto::theta(), gop("P124"), Conv::Min)) == g("P356"),
                 "Q-theta");
        c.expect(trop_Q(ctx, QuasiAuto::tau(), g("P124"), Conv::Max) == g("P236"), "Q+tau");
        c.expect(trop_Q(ctx, QuasiAuto::tau(), gop("P124"), Conv::Min) == gop("P236"), "Q-tau");
        c.expect(trop_Q(ctx, QuasiAuto::sigma(1), g("P124"), Conv::Max) == g("P125"),
                 "Q+sigma1");
        c.expect(trop_Q(ctx, QuasiAuto::sigma(1), gop("P124"), Conv::Min) == gop("P125"),
                 "Q-sigma1");
        c.expect(trop_Q(ctx, QuasiAuto::sigma(1), g("P135"), Conv::Max) == IntVec{-1, 0, 0, 1},
                 "sigma1 on g(P135)");
        c.expect(trop_Q(ctx, QuasiAuto::tau_inv(), g("P125"), Conv::Max) == g("P136"),
                 "tau-inv on g(P125)");
        c.expect(trop_Q(ctx, QuasiAuto::theta(), g("P125"), Conv::Max) == g("P146"),
                 "theta on g(P125)");
        for (const auto& [name, gs] : gr36) {
            for (Conv conv : {Conv::Max, Conv::Min}) {
                IntVec v = (conv == Conv::Max) ? gs.first : gs.second;
                IntVec cur = v;
                for (int i = 0; i < 4; ++i) cur = trop_Q(ctx, QuasiAuto::sigma(1), cur, conv);
                c.expect(cur == v, "sigma1^4 != id at " + name);
            }
        }
    }

    // 4: Gr(3,6) braid table
    void gr36_braid_table(Checker& c) {
        GrContext ctx(3, 6);
        json tbl = load_json_file(cfg.fixtures_dir + "/tables/gr36_braid_actions.json");
        for (const auto& row : tbl.at("rows")) {
            Tableau x(3, 6, row.at("x").get<std::vector<std::vector<int>>>());
            Tableau s1(3, 6, row.at("sigma1").get<std::vector<std::vector<int>>>());
            Tableau s2(3, 6, row.at("sigma2").get<std::vector<std::vector<int>>>());
            c.expect(act_on_tableau(QuasiAuto::sigma(1), x, ctx) == s1,
                     "sigma1 action on " + x.str());
            c.expect(act_on_tableau(QuasiAuto::sigma(2), x, ctx) == s2,
                     "sigma2 action on " + x.str());
        }
    }

    // 5: oracle equivalence on 1000 random points per displayed map
    void oracle_equivalence(Checker& c) {
        struct MapCase {
            int k, n;
            std::string file;
            QuasiAuto f;
        };
        const std::vector<MapCase> cases = {
            {3, 6, "gr36_Q_rho.sf", QuasiAuto::rho()},
            {3, 6, "gr36_Q_theta.sf", QuasiAuto::theta()},
            {3, 6, "gr36_Q_tau.sf", QuasiAuto::tau()},
            {3, 6, "gr36_Q_sigma1.sf", QuasiAuto::sigma(1)},
            {4, 8, "gr48_Q_sigma1.sf", QuasiAuto::sigma(1)},
            {4, 8, "gr48_Q_sigma1_inv.sf", QuasiAuto::sigma_inv(1)},
            {4, 8, "gr48_Q_sigma2.sf", QuasiAuto::sigma(2)},
            {4, 8, "gr48_Q_sigma2_inv.sf", QuasiAuto::sigma_inv(2)},
            {4, 8, "gr48_Q_sigma3.sf", QuasiAuto::sigma(3)},
            {4, 8, "gr48_Q_sigma3_inv.sf", QuasiAuto::sigma_inv(3)},
            {3, 9, "gr39_Q_sigma1.sf", QuasiAuto::sigma(1)},
            {3, 9, "gr39_Q_sigma1_inv.sf", QuasiAuto::sigma_inv(1)},
            {3, 9, "gr39_Q_sigma2.sf", QuasiAuto::sigma(2)},
            {3, 9, "gr39_Q_sigma2_inv.sf", QuasiAuto::sigma_inv(2)},
        };
        std::mt19937_64 rng(cfg.rng_seed);
        for (const auto& mc : cases) {
            GrContext ctx(mc.k, mc.n);
            auto lines = load_sf_file(cfg.fixtures_dir + "/maps/" + mc.file);
            c.expect(static_cast<int>(lines.size()) == ctx.m(), mc.file + ": bad line count");
            for (int rep = 0; rep < 1000 && c.ok; ++rep) {
                IntVec v = random_point(ctx.m(), rng, -10, 10);
                for (Conv conv : {Conv::Max, Conv::Min})
                    c.expect(trop_Q(ctx, mc.f, v, conv) == eval_sf_map(lines, ctx, v, conv),
                             mc.file + " disagrees at " + vec_str(v));
            }
        }
    }

    void check_catalogue(Checker& c, const GrContext& ctx, const json& cat) {
        const QuasiAuto gen = parse_quasi_auto(cat.at("generator").get<std::string>());
        StabilityParams params;
        params.rng_seed = cfg.rng_seed;
        for (const auto& [rank_str, data] : cat.at("ranks").items()) {
            const int rank = std::stoi(rank_str);
            auto reports = find_fixed_points(ctx, gen, rank, params);
            std::set<Tableau> got, expect, got_stable, expect_stable;
            for (const auto& r : reports) {
                got.insert(r.tableau);
                c.expect(r.stability != Stability::Inconclusive,
                         "inconclusive classification at rank " + rank_str);
                if (r.stability == Stability::Stable) got_stable.insert(r.tableau);
            }
            for (const auto& tj : data.at("tableaux")) expect.insert(tableau_from_json(tj));
            for (const auto& cols : data.at("stable"))
                expect_stable.insert(
                    Tableau(ctx.k(), ctx.n(), cols.get<std::vector<std::vector<int>>>()));
            c.expect(got == expect, "rank-" + rank_str + " fixed-point set mismatch (" +
                                        std::to_string(got.size()) + " vs " +
                                        std::to_string(expect.size()) + ")");
            c.expect(got_stable == expect_stable, "rank-" + rank_str + " stable set mismatch");
        }
    }

    // 6: fixed-point catalogues
    void catalogues(Checker& c) {
        check_catalogue(
            c, GrContext(3, 9),
            load_json_file(cfg.fixtures_dir + "/catalogues/gr39_sigma1_fixed_points.json"));
        check_catalogue(
            c, GrContext(4, 8),
            load_json_file(cfg.fixtures_dir + "/catalogues/gr48_sigma1_fixed_points.json"));
    }

    // 7: stable points across the four families
    void stable_points(Checker& c) {
        json all = load_json_file(cfg.fixtures_dir + "/catalogues/stable_fixed_points.json");
        StabilityParams params;
        params.rng_seed = cfg.rng_seed;
        for (const auto& [fam, data] : all.items()) {
            GrContext ctx(data.at("k").get<int>(), data.at("n").get<int>());
            const auto gens = data.at("generators").get<std::vector<std::string>>();
            const auto& tabs = data.at("tableaux");
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const QuasiAuto gen = parse_quasi_auto(gens[i]);
                Tableau t = tableau_from_json(tabs[i]);
                IntVec g = tableau_to_gvector(t);
                c.expect(trop_Q(ctx, gen, g, Conv::Max) == g,
                         fam + ": " + gens[i] + " does not fix its listed tableau");
                c.expect(classify_stability(ctx, gen, g, params) == Stability::Stable,
                         fam + ": " + gens[i] + " listed tableau not classified stable");
            }
        }
    }

    // 8: the displayed braid images of the cone generators
    void cone_relations(Checker& c) {
        for (const std::string file : {"gr48_cone.json", "gr39_cone.json"}) {
            json cone = load_json_file(cfg.fixtures_dir + "/catalogues/" + file);
            GrContext ctx(cone.at("k").get<int>(), cone.at("n").get<int>());
            std::map<std::string, IntVec> g;
            for (const auto& [name, vec] : cone.at("g").items()) g[name] = vec.get<IntVec>();
            for (const auto& [name, cols] : cone.at("tableaux").items()) {
                Tableau t(ctx.k(), ctx.n(), cols.get<std::vector<std::vector<int>>>());
                c.expect(tableau_to_gvector(t) == g.at(name),
                         file + ": tableau of " + name + " has wrong g-vector");
            }
            for (const auto& rel : cone.at("relations")) {
                QuasiAuto f = parse_quasi_auto(rel[0].get<std::string>());
                const IntVec& from = g.at(rel[1].get<std::string>());
                IntVec expect(ctx.m(), 0);
                for (const auto& [name, coeff] : rel[2].items())
                    for (int i = 0; i < ctx.m(); ++i)
                        expect[i] += coeff.get<long long>() * g.at(name)[i];
                c.expect(trop_Q(ctx, f, from, Conv::Max) == expect,
                         file + ": " + rel[0].get<std::string>() + "(" +
                             rel[1].get<std::string>() + ") mismatch");
            }
            if (cone.contains("sigma3_equals_sigma1_on")) {
                for (const auto& name : cone.at("sigma3_equals_sigma1_on")) {
                    const IntVec& v = g.at(name.get<std::string>());
                    c.expect(trop_Q(ctx, QuasiAuto::sigma(3), v, Conv::Max) ==
                                 trop_Q(ctx, QuasiAuto::sigma(1), v, Conv::Max),
                             file + ": sigma3 != sigma1 on " + name.get<std::string>());
                    c.expect(trop_Q(ctx, QuasiAuto::sigma_inv(3), v, Conv::Max) ==
                                 trop_Q(ctx, QuasiAuto::sigma_inv(1), v, Conv::Max),
                             file + ": sigma3-inv != sigma1-inv on " + name.get<std::string>());
                }
            }
            if (cone.contains("sum_relations")) {
                for (const auto& rel : cone.at("sum_relations")) {
                    IntVec lhs = g.at(rel[0].get<std::string>());
                    IntVec rhs(ctx.m(), 0);
                    for (const auto& [name, coeff] : rel[1].items())
                        for (int i = 0; i < ctx.m(); ++i)
                            rhs[i] += coeff.get<long long>() * g.at(name)[i];
                    c.expect(lhs == rhs, file + ": sum relation failed");
                }
            }
            for (const auto& group : cone.at("independent")) {
                IntMat rows;
                for (const auto& name : group) {
                    const IntVec& v = g.at(name.get<std::string>());
                    rows.push_back(std::vector<long long>(v.begin(), v.end()));
                }
                c.expect(mat_rank(rows) == static_cast<int>(rows.size()),
                         file + ": generators not linearly independent");
            }
        }
    }

    // 9: totient profiles and the degree labels on the cone
    void totient(Checker& c) {
        {
            GrContext ctx(4, 8);
            json cone = load_json_file(cfg.fixtures_dir + "/catalogues/gr48_cone.json");
            IntVec g1 = cone.at("g").at("g1").get<IntVec>();
            IntVec g2 = cone.at("g").at("g2").get<IntVec>();
            IntVec g3 = cone.at("g").at("g3").get<IntVec>();
            IntVec g4 = cone.at("g").at("g4").get<IntVec>();
            BraidOrbit orbit = braid_orbit(ctx, {g1, g2}, 30);
            auto profile = totient_profile(orbit, 30);
            for (int r = 1; r <= 30; ++r) {
                const long long want = (r % 2 == 0) ? 2 * euler_phi(r / 2) : 0;
                c.expect(profile[r - 1] == want,
                         "N(4,8," + std::to_string(r) + ") = " +
                             std::to_string(profile[r - 1]) + " != " + std::to_string(want));
            }
            const std::vector<long long> printed{0, 2, 0, 2, 0, 4,  0, 4,  0, 8,
                                                 0, 4, 0, 12, 0, 8, 0, 12, 0, 8};
            for (int r = 1; r <= 20; ++r)
                c.expect(profile[r - 1] == printed[r - 1],
                         "printed prefix mismatch at r=" + std::to_string(r));
            auto cone_deg = [&](long long b, long long cc) {
                IntVec v(9);
                for (int i = 0; i < 9; ++i) v[i] = b * g3[i] + cc * g4[i];
                return gvector_degree(v, 4, 8);
            };
            c.expect(cone_deg(1, 1) == 2, "cone degree at (1,1)");
            c.expect(cone_deg(2, 1) == 6, "cone degree at (2,1)");
            c.expect(cone_deg(3, 2) == 8, "cone degree at (3,2)");
            for (long long b = 1; b <= 15; ++b)
                for (long long cc = 1; cc <= 15; ++cc) {
                    if (std::gcd(b, cc) != 1) continue;
                    const long long want =
                        b == cc ? 2 : (b > cc ? 4 * b - 2 * cc : 4 * cc - 2 * b);
                    if (want > 30) continue;
                    c.expect(cone_deg(b, cc) == want, "cone degree at (" + std::to_string(b) +
                                                          "," + std::to_string(cc) + ")");
                }
            // side cones carry the linear degree 2b + 4c
            auto side_deg = [&](const IntVec& y, long long b, long long cc) {
                IntVec v(9);
                for (int i = 0; i < 9; ++i) v[i] = b * g1[i] + cc * y[i];
                return gvector_degree(v, 4, 8);
            };
            for (long long b = 1; b <= 6; ++b)
                for (long long cc = 1; cc <= 6; ++cc) {
                    if (std::gcd(b, cc) != 1 || 2 * b + 4 * cc > 30) continue;
                    c.expect(side_deg(g3, b, cc) == 2 * b + 4 * cc, "side cone (g1,g3) degree");
                    c.expect(side_deg(g4, b, cc) == 2 * b + 4 * cc, "side cone (g1,g4) degree");
                }
            // cone membership with coprime nonnegative coordinates
            auto decompose = [&](const IntVec& v, const IntVec& x, const IntVec& y,
                                 long long& b, long long& cc) {
                for (int i = 0; i < 9; ++i)
                    for (int j = i + 1; j < 9; ++j) {
                        const long long det = x[i] * y[j] - x[j] * y[i];
                        if (det == 0) continue;
                        const long long nb = v[i] * y[j] - v[j] * y[i];
                        const long long nc = x[i] * v[j] - x[j] * v[i];
                        if (nb % det || nc % det) return false;
                        b = nb / det;
                        cc = nc / det;
                        for (int q = 0; q < 9; ++q)
                            if (v[q] != b * x[q] + cc * y[q]) return false;
                        return true;
                    }
                return false;
            };
            auto in_cone = [&](const IntVec& v, const IntVec& x, const IntVec& y) {
                long long b = 0, cc = 0;
                if (!decompose(v, x, y, b, cc)) return false;
                if (b < 0 || cc < 0) return false;
                return std::gcd(b, cc) == 1;
            };
            for (const auto& e : orbit.entries) {
                const bool member = in_cone(e.g, g1, g3) || in_cone(e.g, g1, g4) ||
                                    in_cone(e.g, g3, g4);
                c.expect(member, "orbit point outside the three cones: " + vec_str(e.g));
            }
        }
        {
            GrContext ctx(3, 9);
            json cone = load_json_file(cfg.fixtures_dir + "/catalogues/gr39_cone.json");
            IntVec g1 = cone.at("g").at("g1").get<IntVec>();
            IntVec g2 = cone.at("g").at("g2").get<IntVec>();
            IntVec g3 = cone.at("g").at("g3").get<IntVec>();
            BraidOrbit orbit = braid_orbit(ctx, {g1, g2, g3}, 24);
            auto profile = totient_profile(orbit, 24);
            for (int r = 1; r <= 24; ++r) {
                const long long want = (r % 3 == 0) ? 3 * euler_phi(r / 3) : 0;
                c.expect(profile[r - 1] == want,
                         "N(3,9," + std::to_string(r) + ") = " +
                             std::to_string(profile[r - 1]) + " != " + std::to_string(want));
            }
            const std::vector<long long> printed{0, 0, 3,  0, 0, 3, 0, 0, 6,  0, 0, 6,
                                                 0, 0, 12, 0, 0, 6, 0, 0, 18, 0, 0, 12};
            for (int r = 1; r <= 24; ++r)
                c.expect(profile[r - 1] == printed[r - 1],
                         "printed prefix mismatch at r=" + std::to_string(r));
        }
    }

    // 10: conjecture reports (reproducing the verified instances)
    void conjecture_reports(Checker& c) {
        GrContext ctx(3, 6);
        auto neg_rev = [](const IntVec& v) {
            IntVec out(v.rbegin(), v.rend());
            for (auto& x : out) x = -x;
            return out;
        };
        for (const auto& [name, gs] : gr36) {
            IntVec got =
                trop_Q_word(ctx, {QuasiAuto::theta(), QuasiAuto::tau()}, gs.first, Conv::Max);
            c.expect(got == neg_rev(gs.first), "theta-tau on g(" + name + ")");
            IntVec gotm =
                trop_Q_word(ctx, {QuasiAuto::theta(), QuasiAuto::tau()}, gs.first, Conv::Min);
            c.expect(gotm == neg_rev(gs.first), "theta-tau (min) on g(" + name + ")");
        }
        Tableau t124(3, 6, {{1, 2, 4}});
        c.expect(act_on_tableau(QuasiAuto::rho(), t124, ctx) == promotion(t124),
                 "rho vs promotion on [1,2,4]");
        c.expect(promotion(t124) == Tableau(3, 6, {{2, 3, 5}}), "pr([1,2,4])");
        Tableau t125(3, 6, {{1, 2, 5}});
        Tableau theta_t = act_on_tableau(QuasiAuto::theta(), t125, ctx);
        c.expect(theta_t == Tableau(3, 6, {{1, 4, 6}}), "theta([1,2,5])");
        Tableau tau_inv_t = act_on_tableau(QuasiAuto::tau_inv(), t125, ctx);
        c.expect(tau_inv_t == Tableau(3, 6, {{1, 3, 6}}), "tau^{-1}([1,2,5])");
        c.expect(evacuation(tau_inv_t) == theta_t, "eva(tau^{-1}) vs theta");
        Tableau t8 = Tableau::from_rows(3, 8, {{1, 2, 3}, {4, 4, 5}, {6, 7, 8}});
        IntVec g8 = tableau_to_gvector(t8);
        c.expect(g8 == IntVec{0, -1, -2, 1, 0, 1, 1, 0}, "g-vector of the 3x[8] example");
        IntVec nrev(g8.rbegin(), g8.rend());
        for (auto& x : nrev) x = -x;
        c.expect(gvector_to_tableau(nrev, 3, 8) == evacuation(t8),
                 "reversed-negated g-vector vs evacuation");
    }

    // 11: property suites
    void property_suites(Checker& c) {
        std::mt19937_64 rng(cfg.rng_seed + 1);
        for (int rep = 0; rep < 500; ++rep) {
            Tableau a = random_tableau(3, 6, 3, rng);
            std::uniform_int_distribution<int> letter(1, 5);
            const int i = letter(rng);
            c.expect(bender_knuth(bender_knuth(a, i), i) == a, "BK not involutive");
            c.expect(evacuation(evacuation(a)) == a, "eva not involutive");
        }
        for (int rep = 0; rep < 300; ++rep) {
            Tableau a = random_tableau(3, 6, 2, rng);
            Tableau cur = a;
            for (int i = 0; i < 6; ++i) cur = promotion(cur);
            c.expect(cur == a, "pr^n != id");
        }
        for (int rep = 0; rep < 300; ++rep) {
            Tableau a = random_tableau(3, 8, 3, rng);
            Tableau b = random_tableau(3, 8, 3, rng);
            c.expect(tableau_union(a, b) == tableau_union(b, a), "union not commutative");
            c.expect(tableau_quotient(tableau_union(a, b), a) == b, "quotient law");
        }
        std::uniform_int_distribution<long long> coord(-4, 4);
        for (int rep = 0; rep < 1000; ++rep) {
            const int k = (rep % 2) ? 3 : 4;
            const int n = (rep % 2) ? 9 : 8;
            IntVec g((k - 1) * (n - k - 1));
            for (auto& x : g) x = coord(rng);
            Tableau t = gvector_to_tableau(g, k, n);
            c.expect(!has_frozen_factor(t), "reconstructed tableau has a frozen factor");
            c.expect(tableau_to_gvector(t) == g, "roundtrip failed at " + vec_str(g));
        }
        {
            GrContext ctx(3, 6);
            std::uniform_int_distribution<long long> shift(-4, 4);
            for (int rep = 0; rep < 40; ++rep) {
                IntVec v = random_point(ctx.m(), rng, -8, 8);
                LMatrix w = web_matrix(ctx, v);
                LMatrix scaled = w;
                for (int col = 0; col < 6; ++col) {
                    const long long e = shift(rng);
                    for (int r = 0; r < 3; ++r) scaled.at(r, col) = w.at(r, col).shifted(e);
                }
                for (int idx = 0; idx < ctx.m(); ++idx) {
                    auto [num, den] = yhat_value(w, ctx, idx);
                    auto [num2, den2] = yhat_value(scaled, ctx, idx);
                    c.expect(num * den2 == num2 * den, "rescaling changed a coefficient value");
                }
            }
        }
        for (auto [k, n] : {std::pair{3, 9}, {4, 8}}) {
            GrContext ctx(k, n);
            for (int rep = 0; rep < 200; ++rep) {
                IntVec v = random_point(ctx.m(), rng, -8, 8);
                auto s = [&](int j, const IntVec& x) {
                    return trop_Q(ctx, QuasiAuto::sigma(j), x, Conv::Max);
                };
                for (int i = 1; i + 1 <= ctx.d() - 1; ++i)
                    c.expect(s(i, s(i + 1, s(i, v))) == s(i + 1, s(i, s(i + 1, v))),
                             "braid relation failed");
                IntVec lhs = trop_Q(ctx, QuasiAuto::tau(), v, Conv::Max);
                lhs = trop_Q(ctx, QuasiAuto::tau(), lhs, Conv::Max);
                IntVec rhs = v;
                for (int i = 0; i < k; ++i)
                    rhs = trop_Q(ctx, QuasiAuto::rho_inv(), rhs, Conv::Max);
                c.expect(lhs == rhs, "twist square != inverse rotation power");
            }
        }
    }
};

} // namespace

bool run_acceptance(const AcceptanceConfig& cfg, std::ostream& out,
                    std::vector<CriterionResult>* results) {
    Suite suite(cfg);
    struct Item {
        int id;
        std::string name;
        double budget;
        std::function<void(Checker&)> fn;
    };
    std::vector<Item> items = {
        {1, "rank-2 table reproduction", 1.0, [&](Checker& c) { suite.rank2_tables(c); }},
        {2, "tropical transport along words <= 8", 10.0,
         [&](Checker& c) { suite.tropical_transport(c); }},
        {3, "Gr(3,6) dictionary and transports", 5.0,
         [&](Checker& c) { suite.gr36_dictionary(c); }},
        {4, "Gr(3,6) braid action table", 10.0, [&](Checker& c) { suite.gr36_braid_table(c); }},
        {5, "oracle equivalence on displayed maps", 120.0,
         [&](Checker& c) { suite.oracle_equivalence(c); }},
        {6, "fixed-point catalogues", 600.0, [&](Checker& c) { suite.catalogues(c); }},
        {7, "stable fixed points", 300.0, [&](Checker& c) { suite.stable_points(c); }},
        {8, "braid images of the cone generators", 60.0,
         [&](Checker& c) { suite.cone_relations(c); }},
        {9, "totient profiles and cone degrees", 900.0, [&](Checker& c) { suite.totient(c); }},
        {10, "conjecture reports", 60.0, [&](Checker& c) { suite.conjecture_reports(c); }},
        {11, "property suites", 300.0, [&](Checker& c) { suite.property_suites(c); }},
    };
    bool all_pass = true;
    for (auto& item : items) {
        Checker c;
        const auto start = Clock::now();
        try {
            item.fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool pass = c.ok;
        std::string detail = c.detail.str();
        if (cfg.enforce_time_budgets && secs > item.budget) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("time budget exceeded");
        }
        all_pass = all_pass && pass;
        out << "criterion " << item.id << " [" << (pass ? "PASS" : "FAIL") << "] " << item.name
            << " (" << secs << "s, budget " << item.budget << "s)";
        if (!detail.empty()) out << " -- " << detail;
        out << "\n";
        out.flush();
        if (results) results->push_back({item.id, item.name, pass, secs, item.budget, detail});
    }
    out << (all_pass ? "all criteria passed" : "ACCEPTANCE FAILURE") << "\n";
    return all_pass;
}

} // namespace tropsym

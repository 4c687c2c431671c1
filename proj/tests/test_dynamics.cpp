#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "tropsym/dynamics.hpp"
#include "tropsym/io_json.hpp"

using namespace tropsym;

namespace {

std::string fixtures() {
    const char* env = std::getenv("TROPSYM_FIXTURES");
    return env ? env : "fixtures";
}

} // namespace

TEST_CASE("action on tableaux: worked examples") {
    GrContext ctx(3, 6);
    CHECK(act_on_tableau(QuasiAuto::sigma(1), Tableau(3, 6, {{1, 3, 5}}), ctx) ==
          Tableau(3, 6, {{1, 3, 5}, {2, 4, 6}}));
    CHECK(act_on_tableau(QuasiAuto::tau(), Tableau(3, 6, {{1, 2, 4}}), ctx) ==
          Tableau(3, 6, {{2, 3, 6}}));
    CHECK(act_on_tableau(QuasiAuto::rho(), Tableau(3, 6, {{1, 2, 4}}), ctx) ==
          Tableau(3, 6, {{2, 3, 5}}));
    CHECK_THROWS_AS(act_on_tableau(QuasiAuto::rho(), Tableau(3, 6, {{1, 2, 3}}), ctx),
                    HasFrozenFactor);
}

TEST_CASE("braid table on all sixteen cluster variables") {
    GrContext ctx(3, 6);
    json tbl = load_json_file(fixtures() + "/tables/gr36_braid_actions.json");
    for (const auto& row : tbl.at("rows")) {
        Tableau x(3, 6, row.at("x").get<std::vector<std::vector<int>>>());
        Tableau s1(3, 6, row.at("sigma1").get<std::vector<std::vector<int>>>());
        Tableau s2(3, 6, row.at("sigma2").get<std::vector<std::vector<int>>>());
        CHECK(act_on_tableau(QuasiAuto::sigma(1), x, ctx) == s1);
        CHECK(act_on_tableau(QuasiAuto::sigma(2), x, ctx) == s2);
    }
}

TEST_CASE("rank-1 fixed points of the first braid generator in Gr(3,9)") {
    GrContext ctx(3, 9);
    StabilityParams params;
    params.rng_seed = 99;
    auto reports = find_fixed_points(ctx, QuasiAuto::sigma(1), 1, params);
    std::set<Tableau> got;
    for (const auto& r : reports) {
        got.insert(r.tableau);
        CHECK(r.stability == Stability::Unstable);
        CHECK(trop_Q(ctx, QuasiAuto::sigma(1), r.g, Conv::Max) == r.g);
    }
    std::set<Tableau> expect{Tableau(3, 9, {{1, 2, 6}}), Tableau(3, 9, {{3, 6, 9}}),
                             Tableau(3, 9, {{3, 7, 8}}), Tableau(3, 9, {{4, 5, 9}})};
    CHECK(got == expect);
}

TEST_CASE("finite type: every fixed vector is unstable") {
    // sigma_1 permutes all sixteen Gr(3,6) cluster variables, so its fixed
    // vectors are found by a small lattice search instead.
    GrContext ctx(3, 6);
    StabilityParams params;
    params.rng_seed = 5;
    int found = 0;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c)
                for (long long d = -2; d <= 2; ++d) {
                    IntVec v{a, b, c, d};
                    if (v == IntVec{0, 0, 0, 0}) continue;
                    if (trop_Q(ctx, QuasiAuto::sigma(1), v, Conv::Max) != v) continue;
                    ++found;
                    CHECK(classify_stability(ctx, QuasiAuto::sigma(1), v, params) ==
                          Stability::Unstable);
                }
    CHECK(found > 0);
}

TEST_CASE("stable fixed points of the two Gr(4,8) generators") {
    GrContext ctx(4, 8);
    StabilityParams params;
    params.rng_seed = 31;
    Tableau t1 = Tableau::from_rows(4, 8, {{1, 3}, {2, 5}, {4, 7}, {6, 8}});
    Tableau t2 = Tableau::from_rows(4, 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    IntVec g1 = tableau_to_gvector(t1);
    IntVec g2 = tableau_to_gvector(t2);
    CHECK(trop_Q(ctx, QuasiAuto::sigma(1), g1, Conv::Max) == g1);
    CHECK(trop_Q(ctx, QuasiAuto::sigma(2), g2, Conv::Max) == g2);
    CHECK(classify_stability(ctx, QuasiAuto::sigma(1), g1, params) == Stability::Stable);
    CHECK(classify_stability(ctx, QuasiAuto::sigma(2), g2, params) == Stability::Stable);
    CHECK(trop_Q(ctx, QuasiAuto::sigma(2), g1, Conv::Max) != g1);
}

TEST_CASE("cone relations for the Gr(4,8) stable points") {
    GrContext ctx(4, 8);
    json cone = load_json_file(fixtures() + "/catalogues/gr48_cone.json");
    std::map<std::string, IntVec> g;
    for (const auto& [name, vec] : cone.at("g").items()) g[name] = vec.get<IntVec>();
    for (const auto& [name, cols] : cone.at("tableaux").items()) {
        Tableau t(4, 8, cols.get<std::vector<std::vector<int>>>());
        CHECK(tableau_to_gvector(t) == g.at(name));
    }
    for (const auto& rel : cone.at("relations")) {
        QuasiAuto f = parse_quasi_auto(rel[0].get<std::string>());
        IntVec from = g.at(rel[1].get<std::string>());
        IntVec expect(9, 0);
        for (const auto& [name, coeff] : rel[2].items())
            for (int i = 0; i < 9; ++i) expect[i] += coeff.get<long long>() * g.at(name)[i];
        CHECK(trop_Q(ctx, f, from, Conv::Max) == expect);
    }
    for (int i = 0; i < 9; ++i) CHECK(g["g2"][i] == g["g3"][i] + g["g4"][i]);
}

TEST_CASE("orbit restricted to a small degree cap") {
    GrContext ctx(4, 8);
    Tableau t1 = Tableau::from_rows(4, 8, {{1, 3}, {2, 5}, {4, 7}, {6, 8}});
    Tableau t2 = Tableau::from_rows(4, 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    BraidOrbit orbit =
        braid_orbit(ctx, {tableau_to_gvector(t1), tableau_to_gvector(t2)}, 10);
    auto profile = totient_profile(orbit, 10);
    CHECK(profile == std::vector<long long>{0, 2, 0, 2, 0, 4, 0, 4, 0, 8});
    CHECK_THROWS_AS(totient_profile(orbit, 12), CapTooSmall);
    for (const auto& e : orbit.entries) {
        CHECK(e.degree == gvector_degree(e.g, 4, 8));
        if (!e.word.empty()) {
            IntVec cur = e.g; // backtrack by applying inverses in reverse
            for (auto it = e.word.rbegin(); it != e.word.rend(); ++it)
                cur = trop_Q(ctx, it->inverse(), cur, Conv::Max);
            CHECK((cur == tableau_to_gvector(t1) || cur == tableau_to_gvector(t2)));
        }
    }
}

TEST_CASE("orbit closure is generator-order independent") {
    GrContext ctx(4, 8);
    Tableau t1 = Tableau::from_rows(4, 8, {{1, 3}, {2, 5}, {4, 7}, {6, 8}});
    Tableau t2 = Tableau::from_rows(4, 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    IntVec g1 = tableau_to_gvector(t1), g2 = tableau_to_gvector(t2);
    BraidOrbit a = braid_orbit(ctx, {g1, g2}, 8);
    BraidOrbit b = braid_orbit(ctx, {g2, g1}, 8);
    std::set<IntVec> sa, sb;
    for (const auto& e : a.entries) sa.insert(e.g);
    for (const auto& e : b.entries) sb.insert(e.g);
    CHECK(sa == sb);
}

TEST_CASE("degree labels on the Gr(3,9) cone") {
    json cone = load_json_file(fixtures() + "/catalogues/gr39_cone.json");
    IntVec g1 = cone.at("g").at("g1").get<IntVec>();
    IntVec g4 = cone.at("g").at("g4").get<IntVec>();
    auto deg = [&](long long b, long long c) {
        IntVec v(10);
        for (int i = 0; i < 10; ++i) v[i] = b * g1[i] + c * g4[i];
        return gvector_degree(v, 3, 9);
    };
    CHECK(deg(1, 0) == 3);
    CHECK(deg(0, 1) == 6);
    CHECK(deg(1, 1) == 9);
    CHECK(deg(2, 1) == 12);
    CHECK(deg(1, 2) == 15);
    CHECK(deg(3, 2) == 21);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(16) == 8);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>

#include "tropsym/grassmann.hpp"
#include "tropsym/io_json.hpp"
#include "tropsym/sfexpr.hpp"

using namespace tropsym;

namespace {

std::string fixtures() {
    const char* env = std::getenv("TROPSYM_FIXTURES");
    return env ? env : "fixtures";
}

IntVec random_point(int m, std::mt19937_64& rng, long long lo = -10, long long hi = 10) {
    std::uniform_int_distribution<long long> coord(lo, hi);
    IntVec v(m);
    for (auto& x : v) x = coord(rng);
    return v;
}

// g-vector lookup from the Gr(3,6) table fixture
std::map<std::string, std::pair<IntVec, IntVec>> gr36_table() {
    std::map<std::string, std::pair<IntVec, IntVec>> out;
    json tbl = load_json_file(fixtures() + "/tables/gr36_gvectors.json");
    for (const auto& e : tbl.at("entries"))
        out[e.at("var").get<std::string>()] = {e.at("g").get<IntVec>(),
                                               e.at("g_op").get<IntVec>()};
    return out;
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

} // namespace

TEST_CASE("context bookkeeping") {
    GrContext ctx(3, 6);
    CHECK(ctx.d() == 3);
    CHECK(ctx.m() == 4);
    CHECK(ctx.node_index(1, 1) == 0);
    CHECK(ctx.node_index(2, 2) == 3);
    CHECK(ctx.pluecker_columns(1, 1) == std::vector<int>{0, 1, 3});
    CHECK(ctx.pluecker_columns(2, 2) == std::vector<int>{0, 3, 4});
    CHECK(ctx.pluecker_columns(0, 0) == std::vector<int>{0, 1, 2});
    GrContext c48(4, 8);
    CHECK(c48.pluecker_columns(3, 3) == std::vector<int>{0, 4, 5, 6});
}

TEST_CASE("per-column balance of the coefficient ratios") {
    for (auto [k, n] : {std::pair{3, 6}, {3, 9}, {4, 8}, {4, 12}, {5, 10}}) {
        GrContext ctx(k, n);
        for (int idx = 0; idx < ctx.m(); ++idx) {
            std::vector<int> count(n, 0);
            for (const auto& cols : ctx.yhat_num(idx))
                for (int c : cols) ++count[c];
            for (const auto& cols : ctx.yhat_den(idx))
                for (int c : cols) --count[c];
            for (int c = 0; c < n; ++c) CHECK(count[c] == 0);
        }
    }
}

TEST_CASE("web matrix structure") {
    GrContext ctx(3, 6);
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 20; ++rep) {
        IntVec v = random_point(ctx.m(), rng);
        LMatrix w = web_matrix(ctx, v);
        // bottom row of M is all ones; M_{k-1,1} = -1
        for (int j = 3; j < 6; ++j) CHECK(w.at(2, j) == LaurentPoly::one());
        CHECK(w.at(1, 3) == -LaurentPoly::one());
    }
}

TEST_CASE("coefficient values on the web matrix reproduce the coordinates") {
    std::mt19937_64 rng(2);
    for (auto [k, n] : {std::pair{3, 6}, {3, 9}, {4, 8}, {4, 12}, {5, 10}}) {
        GrContext ctx(k, n);
        for (int rep = 0; rep < 5; ++rep) {
            IntVec v = random_point(ctx.m(), rng, -5, 5);
            LMatrix w = web_matrix(ctx, v);
            for (int idx = 0; idx < ctx.m(); ++idx) {
                auto [num, den] = yhat_value(w, ctx, idx);
                // num/den == t^{v_idx} exactly
                CHECK(num == den.shifted(v[idx]));
            }
        }
    }
}

TEST_CASE("coefficient ratios at the origin are constant") {
    GrContext ctx(3, 6);
    LMatrix w = web_matrix(ctx, IntVec(4, 0));
    for (int idx = 0; idx < 4; ++idx) {
        auto [num, den] = yhat_value(w, ctx, idx);
        CHECK(num.deg() == den.deg());
        CHECK(num.val() == den.val());
    }
}

TEST_CASE("column rescaling invariance of coefficient values") {
    std::mt19937_64 rng(3);
    GrContext ctx(3, 6);
    std::uniform_int_distribution<long long> shift(-4, 4);
    for (int rep = 0; rep < 25; ++rep) {
        IntVec v = random_point(ctx.m(), rng);
        LMatrix w = web_matrix(ctx, v);
        LMatrix scaled = w;
        for (int c = 0; c < 6; ++c) {
            const long long e = shift(rng);
            for (int r = 0; r < 3; ++r) scaled.at(r, c) = w.at(r, c).shifted(e);
        }
        for (int idx = 0; idx < 4; ++idx) {
            auto [num, den] = yhat_value(w, ctx, idx);
            auto [num2, den2] = yhat_value(scaled, ctx, idx);
            CHECK(num * den2 == num2 * den);
        }
    }
}

TEST_CASE("worked single-map transports") {
    GrContext ctx(3, 6);
    auto table = gr36_table();
    const IntVec g124 = table.at("P124").first;

    CHECK(trop_Q(ctx, QuasiAuto::rho(), g124, Conv::Max) == table.at("P235").first);
    CHECK(trop_Q(ctx, QuasiAuto::rho(), table.at("P124").second, Conv::Min) ==
          table.at("P235").second);

    // theta has signature -1: g^op(theta x) = -Q^+ g(x), g(theta x) = -Q^- g^op(x)
    IntVec qp = trop_Q(ctx, QuasiAuto::theta(), g124, Conv::Max);
    for (auto& x : qp) x = -x;
    CHECK(qp == table.at("P356").second);
    IntVec qm = trop_Q(ctx, QuasiAuto::theta(), table.at("P124").second, Conv::Min);
    for (auto& x : qm) x = -x;
    CHECK(qm == table.at("P356").first);

    CHECK(trop_Q(ctx, QuasiAuto::tau(), g124, Conv::Max) == table.at("P236").first);
    CHECK(trop_Q(ctx, QuasiAuto::tau(), table.at("P124").second, Conv::Min) ==
          table.at("P236").second);

    CHECK(trop_Q(ctx, QuasiAuto::sigma(1), g124, Conv::Max) == table.at("P125").first);
    CHECK(trop_Q(ctx, QuasiAuto::sigma(1), table.at("P124").second, Conv::Min) ==
          table.at("P125").second);

    // twist examples on tableau side: tau^{-1}(P125) = P136, theta action
    CHECK(trop_Q(ctx, QuasiAuto::tau_inv(), table.at("P125").first, Conv::Max) ==
          table.at("P136").first);
    CHECK(trop_Q(ctx, QuasiAuto::theta(), table.at("P125").first, Conv::Max) ==
          table.at("P146").first);
}

TEST_CASE("full rho and theta transport across the table") {
    GrContext ctx(3, 6);
    auto table = gr36_table();
    auto shift = [](const std::string& p) {
        std::string out = "P";
        for (std::size_t i = 1; i < p.size(); ++i) {
            int d = (p[i] - '0') % 6 + 1;
            out += char('0' + d);
        }
        std::sort(out.begin() + 1, out.end());
        return out;
    };
    auto reflect = [](const std::string& p) {
        std::string out = "P";
        for (std::size_t i = 1; i < p.size(); ++i) out += char('0' + 7 - (p[i] - '0'));
        std::sort(out.begin() + 1, out.end());
        return out;
    };
    for (const auto& [name, gs] : table) {
        std::string rho_img = (name == "q1") ? "q2" : (name == "q2") ? "q1" : shift(name);
        CHECK(trop_Q(ctx, QuasiAuto::rho(), gs.first, Conv::Max) == table.at(rho_img).first);

        std::string th_img = (name[0] == 'q') ? name : reflect(name);
        IntVec img = trop_Q(ctx, QuasiAuto::theta(), gs.first, Conv::Max);
        for (auto& x : img) x = -x;
        CHECK(img == table.at(th_img).second);
    }
}

TEST_CASE("matrix-level involutions") {
    GrContext ctx(3, 6);
    std::mt19937_64 rng(77);
    IntVec v = random_point(ctx.m(), rng);
    LMatrix w = web_matrix(ctx, v);
    LMatrix back = apply_quasi_auto(apply_quasi_auto(w, QuasiAuto::rho(), ctx),
                                    QuasiAuto::rho_inv(), ctx);
    LMatrix twice = apply_quasi_auto(apply_quasi_auto(w, QuasiAuto::theta(), ctx),
                                     QuasiAuto::theta(), ctx);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) {
            CHECK(back.at(r, c) == w.at(r, c));
            CHECK(twice.at(r, c) == w.at(r, c));
        }
}

TEST_CASE("inverse pairs compose to the identity") {
    std::mt19937_64 rng(4);
    for (auto [k, n] : {std::pair{3, 6}, {4, 8}}) {
        GrContext ctx(k, n);
        std::vector<std::pair<QuasiAuto, QuasiAuto>> pairs = {
            {QuasiAuto::rho(), QuasiAuto::rho_inv()},
            {QuasiAuto::tau(), QuasiAuto::tau_inv()},
            {QuasiAuto::sigma(1), QuasiAuto::sigma_inv(1)},
        };
        for (int rep = 0; rep < 10; ++rep) {
            IntVec v = random_point(ctx.m(), rng, -6, 6);
            for (const auto& [f, finv] : pairs) {
                CHECK(trop_Q(ctx, finv, trop_Q(ctx, f, v, Conv::Max), Conv::Max) == v);
                CHECK(trop_Q(ctx, finv, trop_Q(ctx, f, v, Conv::Min), Conv::Min) == v);
            }
            // theta is an involution
            CHECK(trop_Q(ctx, QuasiAuto::theta(),
                         trop_Q(ctx, QuasiAuto::theta(), v, Conv::Max), Conv::Max) == v);
        }
    }
}

TEST_CASE("sigma_1 has order four on the finite-type table") {
    GrContext ctx(3, 6);
    auto table = gr36_table();
    for (const auto& [name, gs] : table) {
        for (Conv conv : {Conv::Max, Conv::Min}) {
            IntVec v = (conv == Conv::Max) ? gs.first : gs.second;
            IntVec cur = v;
            for (int i = 0; i < 4; ++i) cur = trop_Q(ctx, QuasiAuto::sigma(1), cur, conv);
            CHECK(cur == v);
        }
    }
}

TEST_CASE("braid relations hold pointwise") {
    std::mt19937_64 rng(5);
    for (auto [k, n] : {std::pair{3, 9}, {4, 8}}) {
        GrContext ctx(k, n);
        const int reps = 25;
        for (int i = 1; i + 1 <= ctx.d() - 1; ++i) {
            for (int rep = 0; rep < reps; ++rep) {
                IntVec v = random_point(ctx.m(), rng, -8, 8);
                auto s = [&](int j, const IntVec& x) {
                    return trop_Q(ctx, QuasiAuto::sigma(j), x, Conv::Max);
                };
                CHECK(s(i, s(i + 1, s(i, v))) == s(i + 1, s(i, s(i + 1, v))));
            }
        }
    }
}

TEST_CASE("structural identities on the larger families") {
    std::mt19937_64 rng(123);
    for (auto [k, n] : {std::pair{4, 12}, {5, 10}}) {
        GrContext ctx(k, n);
        std::uniform_int_distribution<long long> c(-6, 6);
        for (int rep = 0; rep < 5; ++rep) {
            IntVec v(ctx.m());
            for (auto& x : v) x = c(rng);
            auto s = [&](int j, const IntVec& x) {
                return trop_Q(ctx, QuasiAuto::sigma(j), x, Conv::Max);
            };
            for (int i = 1; i + 1 <= ctx.d() - 1; ++i)
                CHECK(s(i, s(i + 1, s(i, v))) == s(i + 1, s(i, s(i + 1, v))));
            if (ctx.d() >= 4) CHECK(s(1, s(3, v)) == s(3, s(1, v)));
            IntVec lhs = trop_Q(ctx, QuasiAuto::tau(), v, Conv::Max);
            lhs = trop_Q(ctx, QuasiAuto::tau(), lhs, Conv::Max);
            IntVec rhs = v;
            for (int i = 0; i < k; ++i) rhs = trop_Q(ctx, QuasiAuto::rho_inv(), rhs, Conv::Max);
            CHECK(lhs == rhs);
            CHECK(trop_Q(ctx, QuasiAuto::sigma_inv(ctx.d()),
                         trop_Q(ctx, QuasiAuto::sigma(ctx.d()), v, Conv::Max),
                         Conv::Max) == v);
        }
    }
}

TEST_CASE("conjugation by the rotation shifts braid indices") {
    std::mt19937_64 rng(6);
    for (auto [k, n] : {std::pair{3, 6}, {4, 8}}) {
        GrContext ctx(k, n);
        for (int i = 1; i + 1 <= ctx.d(); ++i) {
            for (int rep = 0; rep < 15; ++rep) {
                IntVec v = random_point(ctx.m(), rng, -6, 6);
                IntVec direct = trop_Q(ctx, QuasiAuto::sigma(i + 1), v, Conv::Max);
                IntVec conj = trop_Q_word(
                    ctx, {QuasiAuto::rho(), QuasiAuto::sigma(i), QuasiAuto::rho_inv()}, v,
                    Conv::Max);
                CHECK(direct == conj);
            }
        }
    }
}

TEST_CASE("twist squared equals the inverse rotation to the k-th power") {
    std::mt19937_64 rng(7);
    for (auto [k, n] : {std::pair{3, 6}, {3, 9}, {4, 8}}) {
        GrContext ctx(k, n);
        for (int rep = 0; rep < 20; ++rep) {
            IntVec v = random_point(ctx.m(), rng, -6, 6);
            for (Conv conv : {Conv::Max, Conv::Min}) {
                IntVec lhs = trop_Q(ctx, QuasiAuto::tau(), v, conv);
                lhs = trop_Q(ctx, QuasiAuto::tau(), lhs, conv);
                IntVec rhs = v;
                for (int i = 0; i < k; ++i) rhs = trop_Q(ctx, QuasiAuto::rho_inv(), rhs, conv);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reflection composed with twist reverses coordinates") {
    std::mt19937_64 rng(8);
    GrContext ctx(3, 6);
    auto check_point = [&](const IntVec& v) {
        IntVec expect(v.rbegin(), v.rend());
        for (auto& x : expect) x = -x;
        for (Conv conv : {Conv::Max, Conv::Min}) {
            IntVec got = trop_Q_word(ctx, {QuasiAuto::theta(), QuasiAuto::tau()}, v, conv);
            CHECK(got == expect);
        }
    };
    auto table = gr36_table();
    for (const auto& [name, gs] : table) check_point(gs.first);
    for (int rep = 0; rep < 200; ++rep) check_point(random_point(ctx.m(), rng, -7, 7));
}

TEST_CASE("oracle equivalence against the displayed maps") {
    std::mt19937_64 rng(9);
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
    for (const auto& mc : cases) {
        GrContext ctx(mc.k, mc.n);
        auto lines = load_sf_file(fixtures() + "/maps/" + mc.file);
        REQUIRE(static_cast<int>(lines.size()) == ctx.m());
        for (int rep = 0; rep < 40; ++rep) {
            IntVec v = random_point(ctx.m(), rng);
            for (Conv conv : {Conv::Max, Conv::Min}) {
                INFO(mc.file);
                CHECK(trop_Q(ctx, mc.f, v, conv) == eval_sf_map(lines, ctx, v, conv));
            }
        }
    }
}

#include "tropsym/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace tropsym {

Tableau act_on_tableau(const QuasiAuto& f, const Tableau& t, const GrContext& ctx) {
    IntVec g = tableau_to_gvector(t);
    IntVec image = trop_Q(ctx, f, g, Conv::Max);
    return gvector_to_tableau(image, ctx.k(), ctx.n());
}

namespace {

std::vector<double> unit_direction(const IntVec& v) {
    double norm = 0;
    for (long long x : v) norm += double(x) * double(x);
    norm = std::sqrt(norm);
    std::vector<double> out(v.size(), 0.0);
    if (norm == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = double(v[i]) / norm;
    return out;
}

double dir_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

// The tropicalised maps are positively homogeneous, so iterates may be
// rescaled without disturbing the direction dynamics. Rescaling keeps the
// integer entries within 64-bit range; the rounding noise (~2^-40 relative)
// sits far below the classification tolerance.
void rescale(IntVec& v) {
    long long mx = 0;
    for (long long x : v) mx = std::max(mx, std::llabs(x));
    if (mx <= (1LL << 45)) return;
    const double f = double(1LL << 40) / double(mx);
    for (auto& x : v) x = llround(double(x) * f);
}

} // namespace

namespace {

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// d = c * g for some positive rational c?
bool positive_multiple_of(const IntVec& d, const IntVec& g) {
    long long dot = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] * g[j] != d[j] * g[i]) return false;
        dot += d[i] * g[i];
    }
    return dot > 0;
}

enum class TrialVerdict { ToRay, Away, Cycle, Inconclusive };

} // namespace

// A trial iterates the generator from a random integer start. On the fans at
// hand the orbit settles into an exact affine period v_{j+P} = v_j + D: the
// sequence then drifts along the ray of D, so D decides the directional
// limit. A pure cycle (D = 0 off the ray) has no limit; the float fallback
// covers contracting behaviour where the direction meets the tolerance
// outright.
Stability classify_stability(const GrContext& ctx, const QuasiAuto& generator, const IntVec& g,
                             const StabilityParams& params, StabilityWitness* witness) {
    if (params.trials <= 0) {
        if (witness) *witness = {};
        return Stability::Inconclusive;
    }
    const auto ghat = unit_direction(g);
    std::mt19937_64 rng(params.rng_seed);
    std::uniform_int_distribution<long long> coord(-20, 20);
    const int max_period = 12;

    bool any_away = false, all_to_ray = true;
    StabilityWitness best{};

    for (int trial = 0; trial < params.trials && !any_away; ++trial) {
        bool done_trial = false;
        for (int attempt = 0; attempt < 50 && !done_trial; ++attempt) {
            IntVec v(ctx.m());
            for (auto& x : v) x = coord(rng);
            if (is_zero_vec(v)) continue;
            try {
                std::vector<IntVec> hist{v};
                std::vector<double> prev_dir = unit_direction(v);
                TrialVerdict verdict = TrialVerdict::Inconclusive;
                double final_dist = -1.0;
                bool exact = true;
                for (int it = 0; it < params.max_iter && verdict == TrialVerdict::Inconclusive;
                     ++it) {
                    v = trop_Q(ctx, generator, v, Conv::Max);
                    if (is_zero_vec(v)) throw SingularPivot(); // degenerate, resample
                    long long maxabs = 0;
                    for (long long x : v) maxabs = std::max(maxabs, std::llabs(x));
                    if (maxabs > (1LL << 45)) {
                        rescale(v);
                        exact = false; // affine detection is off after rounding
                        hist.clear();
                    }
                    hist.push_back(v);
                    auto dir = unit_direction(v);
                    final_dist = dir_distance(dir, ghat);
                    // exact affine period with two confirmations
                    if (exact) {
                        const int j = static_cast<int>(hist.size()) - 1;
                        for (int p = 1; p <= max_period && 2 * p <= j; ++p) {
                            IntVec d1(v.size()), d2(v.size());
                            for (std::size_t q = 0; q < v.size(); ++q) {
                                d1[q] = hist[j][q] - hist[j - p][q];
                                d2[q] = hist[j - p][q] - hist[j - 2 * p][q];
                            }
                            if (d1 != d2) continue;
                            if (is_zero_vec(d1)) {
                                verdict = positive_multiple_of(v, g) ? TrialVerdict::ToRay
                                                                     : TrialVerdict::Cycle;
                            } else if (positive_multiple_of(d1, g)) {
                                verdict = TrialVerdict::ToRay;
                            } else {
                                verdict = TrialVerdict::Away; // drift off the ray
                            }
                            break;
                        }
                    }
                    // float fallback
                    if (verdict == TrialVerdict::Inconclusive) {
                        const double step = dir_distance(dir, prev_dir);
                        if (final_dist < params.tol)
                            verdict = TrialVerdict::ToRay;
                        else if (step < 1e-13 && final_dist > 1e-4 && it > 10)
                            verdict = TrialVerdict::Away;
                    }
                    prev_dir = dir;
                    if (verdict != TrialVerdict::Inconclusive) {
                        best.iterations = std::max(best.iterations, it + 1);
                        best.final_distance = final_dist;
                        if (verdict != TrialVerdict::ToRay) {
                            any_away = true;
                            all_to_ray = false;
                            best.divergent_start = hist.empty() ? v : hist.front();
                        }
                    }
                }
                if (verdict == TrialVerdict::Inconclusive) all_to_ray = false;
                done_trial = true;
            } catch (const SingularPivot&) {
                // resample this trial
            }
        }
        if (!done_trial) all_to_ray = false;
    }
    if (witness) *witness = best;
    if (any_away) return Stability::Unstable;
    if (all_to_ray) return Stability::Stable;
    return Stability::Inconclusive;
}

namespace {

// Strict k-subsets of [n] in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int p = k - 1;
        while (p >= 0 && cur[p] == n - (k - 1 - p)) --p;
        if (p < 0) break;
        ++cur[p];
        for (int q = p + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
    }
    return out;
}

bool entrywise_le(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

} // namespace

std::vector<FixedPointReport> find_fixed_points(const GrContext& ctx, const QuasiAuto& generator,
                                                int rank, const StabilityParams& params) {
    const int k = ctx.k(), n = ctx.n();
    const auto subsets = k_subsets(n, k);
    std::vector<FixedPointReport> out;

    std::vector<std::vector<int>> chosen;
    auto emit = [&]() {
        Tableau t(k, n, chosen);
        if (has_frozen_factor(t)) return;
        IntVec g = tableau_to_gvector(t);
        if (trop_Q(ctx, generator, g, Conv::Max) != g) return;
        FixedPointReport r;
        r.g = g;
        r.tableau = t;
        r.rank = rank;
        r.stability = classify_stability(ctx, generator, g, params, &r.witness);
        out.push_back(std::move(r));
    };
    // columns chosen entrywise non-decreasing
    std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == rank) {
            emit();
            return;
        }
        for (std::size_t s = from; s < subsets.size(); ++s) {
            if (!chosen.empty() && !entrywise_le(chosen.back(), subsets[s])) continue;
            chosen.push_back(subsets[s]);
            dfs(s);
            chosen.pop_back();
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end(),
              [](const FixedPointReport& a, const FixedPointReport& b) {
                  return a.tableau.cols() < b.tableau.cols();
              });
    return out;
}

BraidOrbit braid_orbit(const GrContext& ctx, const std::vector<IntVec>& seeds, int degree_cap,
                       int word_cap) {
    std::vector<QuasiAuto> gens;
    for (int i = 1; i <= ctx.d(); ++i) {
        gens.push_back(QuasiAuto::sigma(i));
        gens.push_back(QuasiAuto::sigma_inv(i));
    }
    std::set<IntVec> visited;
    std::deque<OrbitEntry> frontier;
    BraidOrbit orbit;
    orbit.degree_cap = degree_cap;
    for (const auto& s : seeds) {
        if (gvector_degree(s, ctx.k(), ctx.n()) > degree_cap) continue;
        if (visited.insert(s).second) {
            OrbitEntry e{s, gvector_degree(s, ctx.k(), ctx.n()), {}};
            frontier.push_back(e);
            orbit.entries.push_back(e);
        }
    }
    while (!frontier.empty()) {
        OrbitEntry cur = frontier.front();
        frontier.pop_front();
        if (static_cast<int>(cur.word.size()) >= word_cap)
            throw CapTooSmall("orbit word-length cap hit; degree pruning may be incomplete");
        for (const auto& gmap : gens) {
            IntVec img = trop_Q(ctx, gmap, cur.g, Conv::Max);
            if (visited.count(img)) continue;
            const int deg = gvector_degree(img, ctx.k(), ctx.n());
            if (deg > degree_cap) continue;
            visited.insert(img);
            OrbitEntry e{img, deg, cur.word};
            e.word.push_back(gmap);
            frontier.push_back(e);
            orbit.entries.push_back(e);
        }
    }
    std::sort(orbit.entries.begin(), orbit.entries.end(),
              [](const OrbitEntry& a, const OrbitEntry& b) {
                  return a.degree != b.degree ? a.degree < b.degree : a.g < b.g;
              });
    return orbit;
}

std::vector<long long> totient_profile(const BraidOrbit& orbit, int r_max) {
    if (orbit.degree_cap < r_max)
        throw CapTooSmall("orbit degree cap " + std::to_string(orbit.degree_cap) +
                          " < requested r_max " + std::to_string(r_max));
    std::vector<long long> out(r_max + 1, 0);
    for (const auto& e : orbit.entries)
        if (e.degree >= 1 && e.degree <= r_max) ++out[e.degree];
    out.erase(out.begin());
    return out;
}

long long euler_phi(long long m) {
    long long result = m, x = m;
    for (long long p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        while (x % p == 0) x /= p;
        result -= result / p;
    }
    if (x > 1) result -= result / x;
    return result;
}

} // namespace tropsym

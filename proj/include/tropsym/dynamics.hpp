#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropsym/grassmann.hpp"
#include "tropsym/tableau.hpp"

namespace tropsym {

// Quasi-automorphism action on a tableau without frozen factors.
Tableau act_on_tableau(const QuasiAuto& f, const Tableau& t, const GrContext& ctx);

enum class Stability { Stable, Unstable, Inconclusive };

inline const char* stability_name(Stability s) {
    switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct StabilityParams {
    int trials = 8;
    int max_iter = 60;
    double tol = 1e-9;
    std::uint64_t rng_seed = 1;
};

struct StabilityWitness {
    int iterations = 0;           // of the longest trial
    double final_distance = 0.0;  // directional distance at the verdict
    IntVec divergent_start;       // for unstable: a start whose direction leaves g
};

// Directional iteration from random integer starts; see StabilityParams for
// the defaults. Requires g to be a fixed point of the generator.
Stability classify_stability(const GrContext& ctx, const QuasiAuto& generator, const IntVec& g,
                             const StabilityParams& params, StabilityWitness* witness = nullptr);

struct FixedPointReport {
    IntVec g;
    Tableau tableau;
    int rank = 0;
    Stability stability = Stability::Inconclusive;
    StabilityWitness witness;
};

// All tableaux with exactly `rank` columns and no frozen factors whose
// g-vector is fixed by the generator, each classified.
std::vector<FixedPointReport> find_fixed_points(const GrContext& ctx, const QuasiAuto& generator,
                                                int rank, const StabilityParams& params = {});

struct OrbitEntry {
    IntVec g;
    int degree = 0;
    std::vector<QuasiAuto> word;
};

struct BraidOrbit {
    std::vector<OrbitEntry> entries;
    int degree_cap = 0;
};

// BFS closure of the seeds under sigma_i^{+-1}, i in [d], pruning vectors
// whose degree exceeds degree_cap. A word-length cap guards the pruning; the
// run aborts if it is hit.
BraidOrbit braid_orbit(const GrContext& ctx, const std::vector<IntVec>& seeds, int degree_cap,
                       int word_cap = 64);

// N_r = number of distinct orbit g-vectors of degree r, 1 <= r <= r_max.
std::vector<long long> totient_profile(const BraidOrbit& orbit, int r_max);

// Euler totient; reference profile values are d * phi(r/d) when d | r.
long long euler_phi(long long m);

} // namespace tropsym

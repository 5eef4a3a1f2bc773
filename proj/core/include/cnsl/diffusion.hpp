#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cnsl/graph.hpp"

namespace cnsl {

enum class DiffusionModel { LT, IC, SIS };

std::string to_string(DiffusionModel m);
DiffusionModel diffusion_model_from_string(const std::string& s);

struct DiffusionConfig {
    DiffusionModel model = DiffusionModel::IC;
    double ic_edge_prob = 0.1;
    // Negative = thresholds drawn U(0,1) per run; otherwise fixed value.
    double lt_fixed_threshold = -1.0;
    double sis_infect_prob = 0.1;
    double sis_recover_prob = 0.05;
    std::size_t max_steps = 20;
    std::size_t mc_samples = 100;
    std::uint64_t rng_seed = 0;

    void check() const;
};

// One training example: seeds and diffusion observations on both sides.
struct DiffusionSample {
    SeedVector x_s;
    InfectionVector y_s;
    InfectionVector x_t;
    InfectionVector y_t;
};

// Pre-drawn randomness for one run. Sharing a Draws instance between two
// seed sets is the common-random-numbers coupling: IC keeps per-arc
// coins, LT keeps per-node thresholds.
struct Draws {
    std::vector<double> arc_u;      // IC: one uniform per directed arc slot
    std::vector<double> thresholds; // LT: one threshold per node
};

Draws draw_randomness(const Network& net, const DiffusionConfig& cfg, std::mt19937_64& rng);

// One stochastic realization; returns the binary infected indicator.
// LT: synchronous threshold dynamics, weights 1/in-degree, to fixpoint
//     or max_steps. IC: live-arc reachability, capped at max_steps
//     rounds. SIS: per-step infection/recovery, reports infected at
//     horizon union seeds.
std::vector<std::uint8_t> simulate_once(const Network& net, const SeedVector& seeds,
                                        const DiffusionConfig& cfg, std::mt19937_64& rng);

// Same realization from pre-drawn randomness (LT/IC only; SIS draws
// per-step and cannot be replayed from a Draws instance).
std::vector<std::uint8_t> simulate_with_draws(const Network& net, const SeedVector& seeds,
                                              const DiffusionConfig& cfg, const Draws& draws,
                                              std::mt19937_64& sis_rng);

// Per-node empirical infection frequency over cfg.mc_samples runs. Each
// run i draws from an independent sub-stream of (cfg.rng_seed, i), and
// counts are integers, so the result is identical for any worker count.
InfectionVector monte_carlo_probs(const Network& net, const SeedVector& seeds,
                                  const DiffusionConfig& cfg, std::size_t threads = 1);

// Full forward process: source Monte Carlo, bridge hand-off, then target
// Monte Carlo where each run seeds node v as Bernoulli(x_t[v]).
DiffusionSample cross_network_diffuse(const CrossNetwork& cross, const SeedVector& x_s,
                                      const DiffusionConfig& cfg_s, const DiffusionConfig& cfg_t,
                                      std::uint64_t rng_seed, std::size_t threads = 1);

// Draws n_samples uniform-random seed sets of ceil(seed_fraction * N_s)
// nodes and runs cross_network_diffuse for each.
std::vector<DiffusionSample> generate_dataset(const CrossNetwork& cross, std::size_t n_samples,
                                              double seed_fraction, const DiffusionConfig& cfg_s,
                                              const DiffusionConfig& cfg_t, std::uint64_t rng_seed,
                                              std::size_t threads = 1);

// Runs x_small and x_small + extra under common random numbers so the
// returned target observations satisfy y_t_big >= y_t_small exactly.
// Rejects SIS configs.
std::pair<InfectionVector, InfectionVector> coupled_monotonic_pair(
    const CrossNetwork& cross, const SeedVector& x_small, const std::vector<NodeId>& extra,
    const DiffusionConfig& cfg_s, const DiffusionConfig& cfg_t, std::uint64_t rng_seed,
    std::size_t threads = 1);

}  // namespace cnsl

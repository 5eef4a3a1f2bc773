#include "cnsl/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "cnsl/common.hpp"
#include "cnsl/rng.hpp"

namespace cnsl {

std::string to_string(DiffusionModel m) {
    switch (m) {
        case DiffusionModel::LT: return "lt";
        case DiffusionModel::IC: return "ic";
        case DiffusionModel::SIS: return "sis";
    }
    return "?";
}

DiffusionModel diffusion_model_from_string(const std::string& s) {
    if (s == "lt" || s == "LT") return DiffusionModel::LT;
    if (s == "ic" || s == "IC") return DiffusionModel::IC;
    if (s == "sis" || s == "SIS") return DiffusionModel::SIS;
    throw ConfigError("unknown diffusion model: '" + s + "' (expected lt, ic, or sis)");
}

void DiffusionConfig::check() const {
    auto prob = [](double p, const char* name) {
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError(std::string(name) + " must be in [0, 1], got " + format_double(p));
    };
    prob(ic_edge_prob, "ic_edge_prob");
    prob(sis_infect_prob, "sis_infect_prob");
    prob(sis_recover_prob, "sis_recover_prob");
    if (lt_fixed_threshold >= 0.0) prob(lt_fixed_threshold, "lt_fixed_threshold");
    if (mc_samples < 1) throw ConfigError("mc_samples must be >= 1");
    if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
}

namespace {

void check_seed_size(const Network& net, const SeedVector& seeds) {
    if (seeds.size() != net.num_nodes()) {
        throw ShapeError("seed vector size " + std::to_string(seeds.size()) +
                         " does not match node count " + std::to_string(net.num_nodes()));
    }
}

// Arc slot index: position of the j-th out-neighbor of u in a flat array.
std::vector<std::size_t> arc_offsets(const Network& net) {
    std::vector<std::size_t> off(net.num_nodes() + 1, 0);
    for (NodeId u = 0; u < net.num_nodes(); ++u) off[u + 1] = off[u] + net.out_degree(u);
    return off;
}

std::vector<std::uint8_t> run_lt(const Network& net, const SeedVector& seeds,
                                 const DiffusionConfig& cfg, const Draws& draws) {
    const std::size_t n = net.num_nodes();
    std::vector<std::uint8_t> active(n, 0);
    std::vector<std::uint32_t> active_in(n, 0);
    std::vector<NodeId> frontier;
    for (NodeId v = 0; v < n; ++v) {
        if (seeds.bits[v]) {
            active[v] = 1;
            frontier.push_back(v);
        }
    }
    std::vector<NodeId> next;
    for (std::size_t step = 0; step < cfg.max_steps && !frontier.empty(); ++step) {
        for (NodeId u : frontier) {
            for (NodeId v : net.neighbors_out(u)) ++active_in[v];
        }
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : net.neighbors_out(u)) {
                if (active[v]) continue;
                const double frac =
                    static_cast<double>(active_in[v]) / static_cast<double>(net.in_degree(v));
                if (frac >= draws.thresholds[v]) {
                    active[v] = 1;
                    next.push_back(v);
                }
            }
        }
        // A node may appear via several frontier neighbors; dedupe.
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = next;
    }
    return active;
}

std::vector<std::uint8_t> run_ic(const Network& net, const SeedVector& seeds,
                                 const DiffusionConfig& cfg, const Draws& draws,
                                 const std::vector<std::size_t>& offsets) {
    const std::size_t n = net.num_nodes();
    std::vector<std::uint8_t> active(n, 0);
    std::vector<NodeId> frontier;
    for (NodeId v = 0; v < n; ++v) {
        if (seeds.bits[v]) {
            active[v] = 1;
            frontier.push_back(v);
        }
    }
    std::vector<NodeId> next;
    for (std::size_t step = 0; step < cfg.max_steps && !frontier.empty(); ++step) {
        next.clear();
        for (NodeId u : frontier) {
            const auto& nbrs = net.neighbors_out(u);
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                NodeId v = nbrs[j];
                if (active[v]) continue;
                if (draws.arc_u[offsets[u] + j] < cfg.ic_edge_prob) {
                    active[v] = 1;
                    next.push_back(v);
                }
            }
        }
        frontier = next;
    }
    return active;
}

std::vector<std::uint8_t> run_sis(const Network& net, const SeedVector& seeds,
                                  const DiffusionConfig& cfg, std::mt19937_64& rng) {
    const std::size_t n = net.num_nodes();
    std::vector<std::uint8_t> infected(n, 0);
    for (NodeId v = 0; v < n; ++v) infected[v] = seeds.bits[v];
    std::vector<std::uint8_t> next(n, 0);
    for (std::size_t step = 0; step < cfg.max_steps; ++step) {
        next = infected;
        // Infections from the state at step start.
        for (NodeId v = 0; v < n; ++v) {
            if (infected[v]) continue;
            for (NodeId u : net.neighbors_in(v)) {
                if (!infected[u]) continue;
                if (uniform01(rng) < cfg.sis_infect_prob) {
                    next[v] = 1;
                    break;
                }
            }
        }
        // Recovery of nodes infected at step start.
        for (NodeId v = 0; v < n; ++v) {
            if (infected[v] && uniform01(rng) < cfg.sis_recover_prob) next[v] = 0;
        }
        infected = next;
    }
    for (NodeId v = 0; v < n; ++v) {
        if (seeds.bits[v]) infected[v] = 1;
    }
    return infected;
}

}  // namespace

Draws draw_randomness(const Network& net, const DiffusionConfig& cfg, std::mt19937_64& rng) {
    Draws d;
    switch (cfg.model) {
        case DiffusionModel::IC: {
            auto off = arc_offsets(net);
            d.arc_u.resize(off.back());
            for (auto& u : d.arc_u) u = uniform01(rng);
            break;
        }
        case DiffusionModel::LT: {
            d.thresholds.resize(net.num_nodes());
            if (cfg.lt_fixed_threshold >= 0.0) {
                std::fill(d.thresholds.begin(), d.thresholds.end(), cfg.lt_fixed_threshold);
            } else {
                for (auto& t : d.thresholds) t = uniform01(rng);
            }
            break;
        }
        case DiffusionModel::SIS:
            throw Error("SIS draws cannot be pre-drawn; use simulate_once");
    }
    return d;
}

std::vector<std::uint8_t> simulate_with_draws(const Network& net, const SeedVector& seeds,
                                              const DiffusionConfig& cfg, const Draws& draws) {
    check_seed_size(net, seeds);
    switch (cfg.model) {
        case DiffusionModel::LT: return run_lt(net, seeds, cfg, draws);
        case DiffusionModel::IC: return run_ic(net, seeds, cfg, draws, arc_offsets(net));
        case DiffusionModel::SIS: throw Error("SIS cannot replay pre-drawn randomness");
    }
    throw Error("unreachable");
}

std::vector<std::uint8_t> simulate_once(const Network& net, const SeedVector& seeds,
                                        const DiffusionConfig& cfg, std::mt19937_64& rng) {
    check_seed_size(net, seeds);
    if (cfg.model == DiffusionModel::SIS) return run_sis(net, seeds, cfg, rng);
    Draws draws = draw_randomness(net, cfg, rng);
    return simulate_with_draws(net, seeds, cfg, draws);
}

namespace {

// Accumulates integer infection counts over [begin, end) sample indices.
void accumulate_counts(const Network& net, const SeedVector& seeds, const DiffusionConfig& cfg,
                       std::uint64_t stream_seed, std::size_t begin, std::size_t end,
                       std::vector<std::uint64_t>& counts) {
    for (std::size_t i = begin; i < end; ++i) {
        auto rng = make_rng(stream_seed, i);
        auto outcome = simulate_once(net, seeds, cfg, rng);
        for (std::size_t v = 0; v < outcome.size(); ++v) counts[v] += outcome[v];
    }
}

InfectionVector counts_to_probs(const std::vector<std::uint64_t>& counts, std::size_t samples) {
    InfectionVector out = InfectionVector::zeros(counts.size());
    for (std::size_t v = 0; v < counts.size(); ++v) {
        out.probs[v] = static_cast<double>(counts[v]) / static_cast<double>(samples);
    }
    return out;
}

}  // namespace

InfectionVector monte_carlo_probs(const Network& net, const SeedVector& seeds,
                                  const DiffusionConfig& cfg, std::size_t threads) {
    cfg.check();
    check_seed_size(net, seeds);
    const std::size_t n = net.num_nodes();
    const std::size_t blocks = std::max<std::size_t>(1, std::min(threads, cfg.mc_samples));
    std::vector<std::vector<std::uint64_t>> block_counts(blocks,
                                                         std::vector<std::uint64_t>(n, 0));
    const std::size_t chunk = (cfg.mc_samples + blocks - 1) / blocks;
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t begin = b * chunk;
        const std::size_t end = std::min(cfg.mc_samples, begin + chunk);
        if (begin < end) {
            accumulate_counts(net, seeds, cfg, cfg.rng_seed, begin, end, block_counts[b]);
        }
    });
    std::vector<std::uint64_t> counts(n, 0);
    for (const auto& bc : block_counts) {
        for (std::size_t v = 0; v < n; ++v) counts[v] += bc[v];
    }
    return counts_to_probs(counts, cfg.mc_samples);
}

namespace {

// Target-side Monte Carlo: each run first draws the initial active set
// as Bernoulli(x_t[v]) per node, then runs the configured dynamics.
InfectionVector target_monte_carlo(const Network& net, const InfectionVector& x_t,
                                   const DiffusionConfig& cfg, std::uint64_t stream_seed,
                                   std::size_t threads) {
    const std::size_t n = net.num_nodes();
    const std::size_t blocks = std::max<std::size_t>(1, std::min(threads, cfg.mc_samples));
    std::vector<std::vector<std::uint64_t>> block_counts(blocks,
                                                         std::vector<std::uint64_t>(n, 0));
    const std::size_t chunk = (cfg.mc_samples + blocks - 1) / blocks;
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t begin = b * chunk;
        const std::size_t end = std::min(cfg.mc_samples, begin + chunk);
        for (std::size_t i = begin; i < end; ++i) {
            auto rng = make_rng(stream_seed, i);
            SeedVector init = SeedVector::zeros(n);
            for (std::size_t v = 0; v < n; ++v) {
                init.bits[v] = uniform01(rng) < x_t.probs[v];
            }
            auto outcome = simulate_once(net, init, cfg, rng);
            for (std::size_t v = 0; v < n; ++v) block_counts[b][v] += outcome[v];
        }
    });
    std::vector<std::uint64_t> counts(n, 0);
    for (const auto& bc : block_counts) {
        for (std::size_t v = 0; v < n; ++v) counts[v] += bc[v];
    }
    return counts_to_probs(counts, cfg.mc_samples);
}

}  // namespace

DiffusionSample cross_network_diffuse(const CrossNetwork& cross, const SeedVector& x_s,
                                      const DiffusionConfig& cfg_s, const DiffusionConfig& cfg_t,
                                      std::uint64_t rng_seed, std::size_t threads) {
    cfg_s.check();
    cfg_t.check();
    check_seed_size(cross.source, x_s);

    DiffusionConfig src_cfg = cfg_s;
    src_cfg.rng_seed = mix_seed(rng_seed, 0x501);
    DiffusionSample sample;
    sample.x_s = x_s;
    sample.y_s = monte_carlo_probs(cross.source, x_s, src_cfg, threads);
    sample.x_t = bridge_transfer(sample.y_s, cross.bridges, cross.target.num_nodes());
    sample.y_t =
        target_monte_carlo(cross.target, sample.x_t, cfg_t, mix_seed(rng_seed, 0x7a9), threads);
    return sample;
}

std::vector<DiffusionSample> generate_dataset(const CrossNetwork& cross, std::size_t n_samples,
                                              double seed_fraction, const DiffusionConfig& cfg_s,
                                              const DiffusionConfig& cfg_t, std::uint64_t rng_seed,
                                              std::size_t threads) {
    if (!(seed_fraction > 0.0 && seed_fraction < 1.0)) {
        throw ConfigError("seed_fraction must be in (0, 1), got " + format_double(seed_fraction));
    }
    const std::size_t n_s = cross.source.num_nodes();
    const auto n_seeds = static_cast<std::size_t>(
        std::ceil(seed_fraction * static_cast<double>(n_s)));
    std::vector<DiffusionSample> samples(n_samples);
    parallel_for(n_samples, threads, [&](std::size_t i) {
        auto seed_rng = make_rng(stage_seed(rng_seed, "sample-seeds"), i);
        // Partial Fisher-Yates: first n_seeds entries of a shuffle.
        std::vector<NodeId> perm(n_s);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t j = 0; j < n_seeds; ++j) {
            std::uniform_int_distribution<std::size_t> pick(j, n_s - 1);
            std::swap(perm[j], perm[pick(seed_rng)]);
        }
        SeedVector x_s = SeedVector::from_support(
            n_s, std::vector<NodeId>(perm.begin(), perm.begin() + n_seeds));
        samples[i] = cross_network_diffuse(cross, x_s, cfg_s, cfg_t,
                                           mix_seed(stage_seed(rng_seed, "sample-diffuse"), i), 1);
    });
    return samples;
}

std::pair<InfectionVector, InfectionVector> coupled_monotonic_pair(
    const CrossNetwork& cross, const SeedVector& x_small, const std::vector<NodeId>& extra,
    const DiffusionConfig& cfg_s, const DiffusionConfig& cfg_t, std::uint64_t rng_seed,
    std::size_t threads) {
    cfg_s.check();
    cfg_t.check();
    check_seed_size(cross.source, x_small);
    if (cfg_s.model == DiffusionModel::SIS || cfg_t.model == DiffusionModel::SIS) {
        throw std::invalid_argument(
            "coupled_monotonic_pair supports LT and IC only (no exact SIS coupling)");
    }
    SeedVector x_big = x_small;
    for (NodeId v : extra) {
        if (v >= x_big.size()) {
            throw ValidationError("extra seed " + std::to_string(v) + " out of range");
        }
        if (x_small.bits[v]) {
            throw ValidationError("extra seed " + std::to_string(v) +
                                  " overlaps the base seed set");
        }
        x_big.bits[v] = 1;
    }

    const std::size_t n_s = cross.source.num_nodes();
    const std::size_t n_t = cross.target.num_nodes();
    const std::uint64_t src_stream = mix_seed(rng_seed, 0xC01);
    const std::uint64_t tgt_stream = mix_seed(rng_seed, 0xC02);

    // Source side: shared draws per run, so outcome_big >= outcome_small
    // on every realization.
    const std::size_t src_runs = cfg_s.mc_samples;
    std::vector<std::uint64_t> cnt_s_small(n_s, 0), cnt_s_big(n_s, 0);
    {
        std::mutex merge_mutex;
        const std::size_t blocks = std::max<std::size_t>(1, std::min(threads, src_runs));
        const std::size_t chunk = (src_runs + blocks - 1) / blocks;
        parallel_for(blocks, threads, [&](std::size_t b) {
            std::vector<std::uint64_t> local_small(n_s, 0), local_big(n_s, 0);
            const std::size_t begin = b * chunk;
            const std::size_t end = std::min(src_runs, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) {
                auto rng = make_rng(src_stream, i);
                Draws draws = draw_randomness(cross.source, cfg_s, rng);
                auto small = simulate_with_draws(cross.source, x_small, cfg_s, draws);
                auto big = simulate_with_draws(cross.source, x_big, cfg_s, draws);
                for (std::size_t v = 0; v < n_s; ++v) {
                    local_small[v] += small[v];
                    local_big[v] += big[v];
                }
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (std::size_t v = 0; v < n_s; ++v) {
                cnt_s_small[v] += local_small[v];
                cnt_s_big[v] += local_big[v];
            }
        });
    }
    InfectionVector y_s_small = counts_to_probs(cnt_s_small, src_runs);
    InfectionVector y_s_big = counts_to_probs(cnt_s_big, src_runs);

    InfectionVector x_t_small = bridge_transfer(y_s_small, cross.bridges, n_t);
    InfectionVector x_t_big = bridge_transfer(y_s_big, cross.bridges, n_t);

    // Target side: one shared uniform per node couples the Bernoulli
    // initial actives (x_t_big >= x_t_small makes the big init a
    // superset), then shared diffusion draws preserve dominance.
    const std::size_t tgt_runs = cfg_t.mc_samples;
    std::vector<std::uint64_t> cnt_t_small(n_t, 0), cnt_t_big(n_t, 0);
    {
        std::mutex merge_mutex;
        const std::size_t blocks = std::max<std::size_t>(1, std::min(threads, tgt_runs));
        const std::size_t chunk = (tgt_runs + blocks - 1) / blocks;
        parallel_for(blocks, threads, [&](std::size_t b) {
            std::vector<std::uint64_t> local_small(n_t, 0), local_big(n_t, 0);
            const std::size_t begin = b * chunk;
            const std::size_t end = std::min(tgt_runs, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) {
                auto rng = make_rng(tgt_stream, i);
                SeedVector init_small = SeedVector::zeros(n_t);
                SeedVector init_big = SeedVector::zeros(n_t);
                for (std::size_t v = 0; v < n_t; ++v) {
                    const double u = uniform01(rng);
                    init_small.bits[v] = u < x_t_small.probs[v];
                    init_big.bits[v] = u < x_t_big.probs[v];
                }
                Draws draws = draw_randomness(cross.target, cfg_t, rng);
                auto small = simulate_with_draws(cross.target, init_small, cfg_t, draws);
                auto big = simulate_with_draws(cross.target, init_big, cfg_t, draws);
                for (std::size_t v = 0; v < n_t; ++v) {
                    local_small[v] += small[v];
                    local_big[v] += big[v];
                }
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (std::size_t v = 0; v < n_t; ++v) {
                cnt_t_small[v] += local_small[v];
                cnt_t_big[v] += local_big[v];
            }
        });
    }
    return {counts_to_probs(cnt_t_small, tgt_runs), counts_to_probs(cnt_t_big, tgt_runs)};
}

}  // namespace cnsl

#pragma once

#include <cstdint>
#include <string>

#include "cnsl/graph.hpp"

namespace cnsl {

enum class GraphModel { ErdosRenyi, HubForest };

GraphModel graph_model_from_string(const std::string& s);
std::string to_string(GraphModel m);

struct SynthNetworkConfig {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    GraphModel model = GraphModel::HubForest;
    std::string name;
};

// Cross-platform-style synthetic cross-network: two sparse interaction
// graphs joined by uniform-random bridge pairs, plus structural node
// features for the source side.
struct SynthCrossConfig {
    SynthNetworkConfig source{1204, 1043, GraphModel::HubForest, "source"};
    SynthNetworkConfig target{3862, 3149, GraphModel::HubForest, "target"};
    std::size_t num_bridges = 900;
    std::size_t feature_dim = 4;
};

// ErdosRenyi: exactly num_edges distinct pairs, uniform.
// HubForest: preferential attachment of num_edges nodes to earlier
// nodes, giving the hub-and-leaf dependency-graph look of sparse
// interaction data (requires num_edges < num_nodes).
Network generate_network(const SynthNetworkConfig& cfg, std::uint64_t rng_seed);

// num_bridges distinct (source, target) pairs, uniform.
BridgeLinks generate_bridges(std::size_t n_source, std::size_t n_target, std::size_t num_bridges,
                             std::uint64_t rng_seed);

// Columns: normalized degree, mean neighbor degree, a fixed standard
// normal draw per node, constant 1. Extra columns repeat the normal
// draw pattern.
NodeFeatures structural_features(const Network& net, std::size_t dim, std::uint64_t rng_seed);

CrossNetwork generate_cross_network(const SynthCrossConfig& cfg, std::uint64_t rng_seed);

}  // namespace cnsl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cnsl/common.hpp"

namespace cnsl {

using NodeId = std::uint32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Binary indicator over the nodes of one network.
struct SeedVector {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    std::size_t count() const;
    std::vector<NodeId> support() const;

    static SeedVector zeros(std::size_t n) { return SeedVector{std::vector<std::uint8_t>(n, 0)}; }
    static SeedVector from_support(std::size_t n, const std::vector<NodeId>& nodes);
};

// Per-node infection probability in [0, 1].
struct InfectionVector {
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
    double sum() const;

    static InfectionVector zeros(std::size_t n) { return InfectionVector{std::vector<double>(n, 0.0)}; }
};

// Dense N x F real-valued node feature matrix.
struct NodeFeatures {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row major

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

// One graph layer. Edges are validated on finalize(); adjacency is
// prebuilt so simulators never touch the raw edge list.
class Network {
  public:
    Network() = default;
    Network(std::size_t num_nodes, EdgeList edges, bool directed = false, std::string name = "");

    std::size_t num_nodes() const { return num_nodes_; }
    std::size_t num_edges() const { return edges_.size(); }
    bool directed() const { return directed_; }
    const std::string& name() const { return name_; }
    const EdgeList& edges() const { return edges_; }

    // Out-neighbors (all neighbors for undirected graphs).
    const std::vector<NodeId>& neighbors_out(NodeId v) const { return adj_out_[v]; }
    // In-neighbors (same as neighbors_out for undirected graphs).
    const std::vector<NodeId>& neighbors_in(NodeId v) const {
        return directed_ ? adj_in_[v] : adj_out_[v];
    }
    std::size_t out_degree(NodeId v) const { return adj_out_[v].size(); }
    std::size_t in_degree(NodeId v) const { return directed_ ? adj_in_[v].size() : adj_out_[v].size(); }

  private:
    void finalize();

    std::size_t num_nodes_ = 0;
    EdgeList edges_;
    bool directed_ = false;
    std::string name_;
    std::vector<std::vector<NodeId>> adj_out_;
    std::vector<std::vector<NodeId>> adj_in_;
};

// Directed node pairs carrying infection probability source -> target.
struct BridgeLinks {
    EdgeList pairs;  // (source_node, target_node)

    std::size_t size() const { return pairs.size(); }
};

// Two interconnected networks plus the bridge links between them.
// Immutable after construction; safe to share across threads.
struct CrossNetwork {
    Network source;
    Network target;
    BridgeLinks bridges;
    std::optional<NodeFeatures> source_features;
    std::optional<NodeFeatures> target_features;
};

struct ValidationIssue {
    std::string code;
    std::string message;
};

// Report-only check of every structural invariant; empty on success.
std::vector<ValidationIssue> validate(const CrossNetwork& cross);

// x_t[v] = max over bridges (u, v) of y_s[u]; 0 where no bridge ends.
// Max aggregation: the most exposed incoming path wins.
InfectionVector bridge_transfer(const InfectionVector& y_s, const BridgeLinks& bridges,
                                std::size_t n_target);

}  // namespace cnsl

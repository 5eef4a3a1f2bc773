#include "cnsl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace cnsl {

std::size_t SeedVector::count() const {
    std::size_t c = 0;
    for (auto b : bits) c += b != 0;
    return c;
}

std::vector<NodeId> SeedVector::support() const {
    std::vector<NodeId> out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out.push_back(static_cast<NodeId>(i));
    }
    return out;
}

SeedVector SeedVector::from_support(std::size_t n, const std::vector<NodeId>& nodes) {
    SeedVector s = zeros(n);
    for (NodeId v : nodes) {
        if (v >= n) throw ValidationError("seed index " + std::to_string(v) + " out of range");
        s.bits[v] = 1;
    }
    return s;
}

double InfectionVector::sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Network::Network(std::size_t num_nodes, EdgeList edges, bool directed, std::string name)
    : num_nodes_(num_nodes), edges_(std::move(edges)), directed_(directed), name_(std::move(name)) {
    finalize();
}

void Network::finalize() {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& [u, v] : edges_) {
        if (u >= num_nodes_ || v >= num_nodes_) {
            throw ValidationError("network '" + name_ + "': edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") references node >= " +
                                  std::to_string(num_nodes_));
        }
        if (u == v) {
            throw ValidationError("network '" + name_ + "': self-loop at node " + std::to_string(u));
        }
        NodeId a = u, b = v;
        if (!directed_ && a > b) std::swap(a, b);
        if (!seen.insert(edge_key(a, b)).second) {
            throw ValidationError("network '" + name_ + "': duplicate edge (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
        }
    }
    adj_out_.assign(num_nodes_, {});
    if (directed_) adj_in_.assign(num_nodes_, {});
    for (auto& [u, v] : edges_) {
        adj_out_[u].push_back(v);
        if (directed_) {
            adj_in_[v].push_back(u);
        } else {
            adj_out_[v].push_back(u);
        }
    }
    // Sorted adjacency gives simulators a fixed draw order.
    for (auto& nb : adj_out_) std::sort(nb.begin(), nb.end());
    for (auto& nb : adj_in_) std::sort(nb.begin(), nb.end());
}

std::vector<ValidationIssue> validate(const CrossNetwork& cross) {
    std::vector<ValidationIssue> issues;
    auto add = [&](const std::string& code, const std::string& msg) {
        issues.push_back({code, msg});
    };

    auto check_net = [&](const Network& net, const std::string& label) {
        std::unordered_set<std::uint64_t> seen;
        for (auto& [u, v] : net.edges()) {
            if (u >= net.num_nodes() || v >= net.num_nodes()) {
                add("edge-out-of-range", label + ": edge (" + std::to_string(u) + ", " +
                                             std::to_string(v) + ") exceeds node count " +
                                             std::to_string(net.num_nodes()));
                continue;
            }
            if (u == v) add("self-loop", label + ": self-loop at node " + std::to_string(u));
            NodeId a = u, b = v;
            if (!net.directed() && a > b) std::swap(a, b);
            if (!seen.insert(edge_key(a, b)).second) {
                add("duplicate-edge", label + ": duplicate edge (" + std::to_string(u) + ", " +
                                          std::to_string(v) + ")");
            }
        }
    };
    check_net(cross.source, "source");
    check_net(cross.target, "target");

    std::set<std::pair<NodeId, NodeId>> bridge_seen;
    for (auto& [u, v] : cross.bridges.pairs) {
        if (u >= cross.source.num_nodes()) {
            add("bridge-source-out-of-range",
                "bridge (" + std::to_string(u) + ", " + std::to_string(v) +
                    "): source index exceeds " + std::to_string(cross.source.num_nodes()));
        }
        if (v >= cross.target.num_nodes()) {
            add("bridge-target-out-of-range",
                "bridge (" + std::to_string(u) + ", " + std::to_string(v) +
                    "): target index exceeds " + std::to_string(cross.target.num_nodes()));
        }
        if (!bridge_seen.insert({u, v}).second) {
            add("duplicate-bridge",
                "duplicate bridge pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
    }

    auto check_features = [&](const std::optional<NodeFeatures>& f, std::size_t n,
                              const std::string& label) {
        if (!f) return;
        if (f->rows != n) {
            add("feature-rows-mismatch", label + ": feature matrix has " + std::to_string(f->rows) +
                                             " rows for " + std::to_string(n) + " nodes");
        }
        if (f->values.size() != f->rows * f->cols) {
            add("feature-shape", label + ": feature storage does not match rows x cols");
        }
        for (double v : f->values) {
            if (!std::isfinite(v)) {
                add("feature-not-finite", label + ": non-finite feature value");
                break;
            }
        }
    };
    check_features(cross.source_features, cross.source.num_nodes(), "source features");
    check_features(cross.target_features, cross.target.num_nodes(), "target features");

    return issues;
}

InfectionVector bridge_transfer(const InfectionVector& y_s, const BridgeLinks& bridges,
                                std::size_t n_target) {
    InfectionVector x_t = InfectionVector::zeros(n_target);
    for (auto& [u, v] : bridges.pairs) {
        if (u >= y_s.size()) {
            throw ShapeError("bridge_transfer: bridge source " + std::to_string(u) +
                             " exceeds source vector size " + std::to_string(y_s.size()));
        }
        if (v >= n_target) {
            throw ShapeError("bridge_transfer: bridge target " + std::to_string(v) +
                             " exceeds target size " + std::to_string(n_target));
        }
        x_t.probs[v] = std::max(x_t.probs[v], y_s.probs[u]);
    }
    return x_t;
}

}  // namespace cnsl

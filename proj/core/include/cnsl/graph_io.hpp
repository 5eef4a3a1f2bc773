#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cnsl/graph.hpp"

namespace cnsl {

// File formats
//   edge list:  UTF-8, header "nodes=N" (optional "directed=1"), then one
//               "u<TAB>v" per line; '#' starts a comment.
//   bridges:    one "u_source<TAB>v_target" per line, '#' comments.
//   features:   CSV, N rows x F columns, no header.
//   vectors:    CSV "node_index,value", one row per node.

Network load_network(const std::filesystem::path& path, const std::string& name = "");
void save_network(const Network& net, const std::filesystem::path& path);

BridgeLinks load_bridges(const std::filesystem::path& path);
void save_bridges(const BridgeLinks& bridges, const std::filesystem::path& path);

NodeFeatures load_features(const std::filesystem::path& path);
void save_features(const NodeFeatures& features, const std::filesystem::path& path);

// Parses and cross-validates all parts; throws on any violated invariant.
CrossNetwork load_cross_network(const std::filesystem::path& source_edges,
                                const std::filesystem::path& target_edges,
                                const std::filesystem::path& bridges,
                                const std::optional<std::filesystem::path>& features = {});

InfectionVector load_infection_vector(const std::filesystem::path& path, std::size_t n);
void save_infection_vector(const InfectionVector& vec, const std::filesystem::path& path);

SeedVector load_seed_vector(const std::filesystem::path& path, std::size_t n);
void save_seed_vector(const SeedVector& vec, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace cnsl

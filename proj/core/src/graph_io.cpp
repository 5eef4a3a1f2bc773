#include "cnsl/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "cnsl/common.hpp"

namespace cnsl {

namespace {

std::string loc(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + std::to_string(line);
}

// Strips '#'-comments and surrounding whitespace; empty result = skip.
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    return s.substr(start);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path.string());
    return out;
}

std::pair<NodeId, NodeId> parse_pair(const std::string& s, const std::string& where) {
    auto tab = s.find('\t');
    if (tab == std::string::npos) tab = s.find(' ');
    if (tab == std::string::npos) {
        throw ParseError(where + ": expected 'u<TAB>v', got '" + s + "'");
    }
    long long u = parse_int(std::string_view(s).substr(0, tab), where);
    std::size_t vstart = tab + 1;
    while (vstart < s.size() && (s[vstart] == ' ' || s[vstart] == '\t')) ++vstart;
    long long v = parse_int(std::string_view(s).substr(vstart), where);
    if (u < 0 || v < 0) throw ParseError(where + ": negative node index");
    return {static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

}  // namespace

Network load_network(const std::filesystem::path& path, const std::string& name) {
    auto in = open_input(path);
    std::string raw;
    std::size_t lineno = 0;
    bool have_nodes = false;
    std::size_t num_nodes = 0;
    bool directed = false;
    EdgeList edges;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        if (s.rfind("nodes=", 0) == 0) {
            long long n = parse_int(std::string_view(s).substr(6), loc(path, lineno));
            if (n < 0) throw ParseError(loc(path, lineno) + ": negative node count");
            num_nodes = static_cast<std::size_t>(n);
            have_nodes = true;
            continue;
        }
        if (s.rfind("directed=", 0) == 0) {
            directed = parse_int(std::string_view(s).substr(9), loc(path, lineno)) != 0;
            continue;
        }
        if (!have_nodes) {
            throw ParseError(loc(path, lineno) + ": edge before 'nodes=N' header");
        }
        auto [u, v] = parse_pair(s, loc(path, lineno));
        if (u >= num_nodes || v >= num_nodes) {
            throw ParseError(loc(path, lineno) + ": edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") references node >= " + std::to_string(num_nodes));
        }
        edges.emplace_back(u, v);
    }
    if (!have_nodes) throw ParseError(path.string() + ": missing 'nodes=N' header");
    try {
        return Network(num_nodes, std::move(edges), directed,
                       name.empty() ? path.stem().string() : name);
    } catch (const ValidationError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_network(const Network& net, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "nodes=" << net.num_nodes() << "\n";
    if (net.directed()) out << "directed=1\n";
    for (auto& [u, v] : net.edges()) out << u << "\t" << v << "\n";
}

BridgeLinks load_bridges(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string raw;
    std::size_t lineno = 0;
    BridgeLinks bridges;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        bridges.pairs.push_back(parse_pair(s, loc(path, lineno)));
    }
    return bridges;
}

void save_bridges(const BridgeLinks& bridges, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (auto& [u, v] : bridges.pairs) out << u << "\t" << v << "\n";
}

NodeFeatures load_features(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::string raw;
    std::size_t lineno = 0;
    NodeFeatures f;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        std::size_t cols = 0;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.values.push_back(parse_double(cell, loc(path, lineno)));
            ++cols;
        }
        if (f.rows == 0) {
            f.cols = cols;
        } else if (cols != f.cols) {
            throw ParseError(loc(path, lineno) + ": row has " + std::to_string(cols) +
                             " columns, expected " + std::to_string(f.cols));
        }
        ++f.rows;
    }
    return f;
}

void save_features(const NodeFeatures& features, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (std::size_t r = 0; r < features.rows; ++r) {
        for (std::size_t c = 0; c < features.cols; ++c) {
            if (c) out << ",";
            out << format_double(features.at(r, c));
        }
        out << "\n";
    }
}

CrossNetwork load_cross_network(const std::filesystem::path& source_edges,
                                const std::filesystem::path& target_edges,
                                const std::filesystem::path& bridges,
                                const std::optional<std::filesystem::path>& features) {
    CrossNetwork cross;
    cross.source = load_network(source_edges, "source");
    cross.target = load_network(target_edges, "target");
    cross.bridges = load_bridges(bridges);
    if (features) cross.source_features = load_features(*features);

    for (auto& [u, v] : cross.bridges.pairs) {
        if (u >= cross.source.num_nodes() || v >= cross.target.num_nodes()) {
            throw ValidationError("bridge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") inconsistent with network sizes " +
                                  std::to_string(cross.source.num_nodes()) + "/" +
                                  std::to_string(cross.target.num_nodes()));
        }
    }
    if (auto issues = validate(cross); !issues.empty()) {
        throw ValidationError("cross-network invalid: " + issues.front().message + " (" +
                              std::to_string(issues.size()) + " issue(s) total)");
    }
    return cross;
}

namespace {

std::vector<double> load_indexed_values(const std::filesystem::path& path, std::size_t n) {
    auto in = open_input(path);
    std::vector<double> vals(n, 0.0);
    std::vector<bool> seen(n, false);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        auto comma = s.find(',');
        if (comma == std::string::npos) {
            throw ParseError(loc(path, lineno) + ": expected 'node_index,value'");
        }
        long long idx = parse_int(std::string_view(s).substr(0, comma), loc(path, lineno));
        double val = parse_double(std::string_view(s).substr(comma + 1), loc(path, lineno));
        if (idx < 0 || static_cast<std::size_t>(idx) >= n) {
            throw ParseError(loc(path, lineno) + ": node index " + std::to_string(idx) +
                             " out of range [0, " + std::to_string(n) + ")");
        }
        if (seen[idx]) {
            throw ParseError(loc(path, lineno) + ": duplicate node index " + std::to_string(idx));
        }
        seen[idx] = true;
        vals[idx] = val;
    }
    return vals;
}

}  // namespace

InfectionVector load_infection_vector(const std::filesystem::path& path, std::size_t n) {
    InfectionVector v{load_indexed_values(path, n)};
    for (double p : v.probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError(path.string() + ": infection probability " + format_double(p) +
                                  " outside [0, 1]");
        }
    }
    return v;
}

void save_infection_vector(const InfectionVector& vec, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (std::size_t i = 0; i < vec.probs.size(); ++i) {
        out << i << "," << format_double(vec.probs[i]) << "\n";
    }
}

SeedVector load_seed_vector(const std::filesystem::path& path, std::size_t n) {
    auto vals = load_indexed_values(path, n);
    SeedVector s = SeedVector::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (vals[i] != 0.0 && vals[i] != 1.0) {
            throw ValidationError(path.string() + ": seed entry " + format_double(vals[i]) +
                                  " is not binary");
        }
        s.bits[i] = vals[i] != 0.0;
    }
    return s;
}

void save_seed_vector(const SeedVector& vec, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (std::size_t i = 0; i < vec.bits.size(); ++i) {
        out << i << "," << int(vec.bits[i]) << "\n";
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    auto out = open_output(path);
    out << content;
}

}  // namespace cnsl

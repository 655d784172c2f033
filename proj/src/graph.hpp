#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace mdim {

using vertex = std::uint32_t;

struct edge {
    vertex u;
    vertex v;
    friend bool operator==(const edge &, const edge &) = default;
    friend auto operator<=>(const edge &a, const edge &b) {
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

// Immutable simple undirected graph with unique per-vertex display labels.
// Construction canonicalizes edges to (min,max) sorted lexicographically and
// rejects self-loops, duplicates and out-of-range endpoints. Connectivity is
// not required here; distance computation rejects disconnected graphs.
class graph {
public:
    graph() = default;
    graph(std::size_t n, std::vector<edge> edges);
    graph(std::size_t n, std::vector<edge> edges,
          std::vector<std::string> labels);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<edge> &edges() const { return edges_; }
    const std::vector<vertex> &neighbors(vertex u) const { return adj_[u]; }
    std::size_t degree(vertex u) const { return adj_[u].size(); }

    bool adjacent(vertex u, vertex v) const {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    const std::string &label(vertex u) const { return labels_[u]; }
    const std::vector<std::string> &labels() const { return labels_; }
    std::optional<vertex> find_label(const std::string &name) const;

    bool is_connected() const;

    static std::string default_label(vertex u);

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<edge> edges_;
    std::vector<std::vector<vertex>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, vertex> label_index_;
};

// Ordered set of distinct vertices; the member order fixes the coordinate
// order of representations computed against it.
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(std::vector<vertex> members);

    static vertex_set checked(std::vector<vertex> members, const graph &g);

    const std::vector<vertex> &members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(vertex v) const;
    vertex operator[](std::size_t i) const { return members_[i]; }

    friend bool operator==(const vertex_set &, const vertex_set &) = default;
    friend auto operator<=>(const vertex_set &a, const vertex_set &b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<vertex> members_;
};

std::vector<std::string> labels_of(const graph &g, const vertex_set &q);

// All-pairs hop distances, immutable after construction.
class distance_matrix {
public:
    distance_matrix() = default;

    std::size_t size() const { return n_; }
    std::uint8_t operator()(vertex u, vertex v) const {
        return d_[u * n_ + v];
    }
    std::uint8_t diameter() const;
    const std::uint8_t *row(vertex u) const { return d_.data() + u * n_; }

    friend distance_matrix all_pairs_distances(const graph &g);

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> d_;
};

// BFS from every vertex; throws errc::disconnected when some pair is
// unreachable.
distance_matrix all_pairs_distances(const graph &g);

// Edge-list text format: header "n m", m lines "u v" (0-based), then optional
// label lines "u <label>".
graph read_edge_list(const std::string &text);
std::string write_edge_list(const graph &g);

} // namespace mdim

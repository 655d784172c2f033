#pragma once

#include <utility>

#include "graph.hpp"

namespace mdim {

graph build_cycle(std::size_t n); // n >= 3, labels x1..xn
graph build_path(std::size_t k);  // k >= 2, labels x1..xk

// Standard Cartesian product; factor vertex (a,b) becomes index a*|V(h)|+b
// with label "(<la>,<lb>)". Both factors must be connected.
graph cartesian_product(const graph &g, const graph &h);

// One vertex per edge of g (in canonical edge order), adjacent iff the edges
// share an endpoint. Labels "{<lu>,<lv>}".
graph line_graph(const graph &g);

// Checks that `map` (indexed by V(g), values in V(h)) is a bijection that
// preserves adjacency and non-adjacency in both directions.
bool verify_isomorphism(const graph &g, const graph &h,
                        const std::vector<vertex> &map);

// The explicit stacked labeling of (C_n x P_k) x P_m: m copies of C_n x P_k,
// each with in-copy indices t = 1..n*k arranged in k cycle layers of n
// vertices; vertex x_t of copy r is adjacent to x_t of copy r+1. m = 1 gives
// the plain C_n x P_k with labels "x<t>"; for m >= 2 labels are "x<t>^<r>".
class layered_graph {
public:
    layered_graph(std::size_t n, std::size_t k, std::size_t m);

    const graph &g() const { return g_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t m() const { return m_; }

    // catalog-style coordinates, all 1-based
    vertex at(std::size_t t, std::size_t r = 1) const;
    std::size_t index_of(vertex v) const;    // t in [1..n*k]
    std::size_t copy_of(vertex v) const;     // r in [1..m]
    std::size_t layer_of(vertex v) const;    // p in [1..k]
    std::size_t position_of(vertex v) const; // q in [1..n]

    // Same-copy vertices whose in-copy indices differ by a multiple of n
    // (same cycle position). Throws errc::different_copies otherwise.
    bool compatible(vertex a, vertex b) const;

    vertex_set layer(std::size_t p, std::size_t r = 1) const; // V_p^{(r)}

private:
    std::size_t n_ = 0, k_ = 0, m_ = 0;
    graph g_;
};

// H(n): points v_1..v_n plus one vertex v_i v_j per unordered pair i < j;
// v_r is adjacent to v_i v_j iff r is one of i, j. Defined for n >= 5.
class h_graph {
public:
    explicit h_graph(std::size_t n);

    const graph &g() const { return g_; }
    std::size_t n() const { return n_; }

    vertex point(std::size_t r) const;                  // v_r, 1-based
    vertex pair(std::size_t i, std::size_t j) const;    // v_i v_j
    bool is_point(vertex v) const { return v < n_; }
    std::pair<std::size_t, std::size_t> pair_of(vertex v) const;

    vertex_set points() const; // V_1 in index order

private:
    std::size_t n_ = 0;
    graph g_;
};

// L(n): one vertex {v_r, v_i v_j} per edge of H(n); two vertices are adjacent
// iff they share the point v_r (clique W_r) or the pair v_i v_j. Vertices are
// grouped by clique: W_r occupies indices (r-1)(n-1) .. r(n-1)-1.
class l_graph {
public:
    explicit l_graph(std::size_t n);

    const graph &g() const { return g_; }
    std::size_t n() const { return n_; }

    vertex at(std::size_t r, std::size_t i, std::size_t j) const;
    std::size_t clique_of(vertex v) const; // r in [1..n]
    std::pair<std::size_t, std::size_t> hedge_of(vertex v) const;

    vertex_set clique(std::size_t r) const; // W_r

    // N(W_r): the n-1 vertices outside W_r adjacent to the clique, one per
    // other clique W_k, ordered by k. Element for clique k is
    // {v_k, v_min(r,k) v_max(r,k)}.
    vertex_set clique_neighborhood(std::size_t r) const;

private:
    std::size_t n_ = 0;
    graph g_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hedges_;
};

} // namespace mdim

#pragma once

#include <optional>

#include "graph.hpp"

namespace mdim {

// r(v|Q): hop distances from v to each member of Q, in Q's order.
using representation = std::vector<int>;

representation representation_of(vertex v, const vertex_set &q,
                                 const distance_matrix &d);

struct vertex_pair {
    vertex u;
    vertex v;
    friend bool operator==(const vertex_pair &, const vertex_pair &) = default;
};

// Two vertices with identical representations, if any. Scans vertices in
// index order, so the reported pair is deterministic.
std::optional<vertex_pair> find_resolving_violation(const vertex_set &q,
                                                    const distance_matrix &d);
bool is_resolving(const vertex_set &q, const distance_matrix &d);

// A pair whose representation difference is the constant vector lambda*(1..1).
struct doubly_violation {
    vertex u;
    vertex v;
    int lambda;
};
std::optional<doubly_violation> find_doubly_violation(const vertex_set &q,
                                                      const distance_matrix &d);
bool is_doubly_resolving(const vertex_set &q, const distance_matrix &d);

// w strongly resolves (u,v) iff v lies on a shortest u-w path or u lies on a
// shortest v-w path, stated metrically.
bool strongly_resolves(vertex w, vertex u, vertex v, const distance_matrix &d);

// A pair no member of q strongly resolves, if any.
std::optional<vertex_pair> find_strong_violation(const vertex_set &q,
                                                 const distance_matrix &d);
bool is_strong_resolving(const vertex_set &q, const distance_matrix &d);

// u is maximally distant from v when no neighbor of u is farther from v.
bool maximally_distant_from(vertex u, vertex v, const graph &g,
                            const distance_matrix &d);

// All unordered pairs that are mutually maximally distant, sorted.
std::vector<edge> mmd_pairs(const graph &g, const distance_matrix &d);

} // namespace mdim

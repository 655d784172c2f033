#pragma once

#include <cstdint>
#include <string>

#include "graph.hpp"
#include "resolving.hpp"

namespace mdim {

enum class set_kind { resolving, doubly, strong };

const char *set_kind_name(set_kind k);
set_kind parse_set_kind(const std::string &name);

inline constexpr std::uint64_t default_budget = 100'000'000;

struct solve_options {
    std::uint64_t budget = default_budget; // candidate evaluations
    unsigned jobs = 1;
};

// Exact minimum-size result. The witness is the lexicographically smallest
// minimum set (by member indices). certificate_checked records that the
// optimum is certified: either every smaller size was exhausted, or (strong
// kind) the vertex-cover lower bound matched a verified candidate. When the
// budget runs out the best known valid set is returned with optimal=false.
struct solve_result {
    set_kind kind = set_kind::resolving;
    std::size_t size = 0;
    vertex_set witness;
    bool certificate_checked = false;
    bool optimal = false;
    std::string method;
    std::uint64_t nodes_explored = 0;
};

bool check_set(set_kind kind, const vertex_set &q, const distance_matrix &d);

solve_result min_resolving(const graph &g, const distance_matrix &d,
                           const solve_options &opts = {});
solve_result min_doubly_resolving(const graph &g, const distance_matrix &d,
                                  const solve_options &opts = {});
solve_result min_strong_resolving(const graph &g, const distance_matrix &d,
                                  const solve_options &opts = {});

// Auxiliary graph on the same vertices whose edges are the mutually maximally
// distant pairs. Every strong resolving set must cover all of its edges.
graph build_sr_graph(const graph &g, const distance_matrix &d);

struct cover_result {
    vertex_set cover; // lexicographically smallest minimum cover when optimal
    std::uint64_t nodes = 0;
    bool optimal = false;
};

cover_result min_vertex_cover(const graph &g, const solve_options &opts = {});

// Greedy most-new-pairs-distinguished heuristic; the returned set is verified
// against the kind's predicate and bounds the exact search from above.
vertex_set greedy_upper_bound(const graph &g, const distance_matrix &d,
                              set_kind kind);

// One exhaustive size level of the search space, lexicographic order,
// partitioned by first element across jobs workers.
struct level_scan {
    bool found = false;
    std::vector<vertex> witness;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

level_scan scan_size(set_kind kind, const distance_matrix &d, std::size_t k,
                     std::uint64_t budget, unsigned jobs);

// Every valid set of the given size, lexicographic order (single-threaded).
std::vector<vertex_set> all_valid_sets(set_kind kind, const distance_matrix &d,
                                       std::size_t k);

} // namespace mdim

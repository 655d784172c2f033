#include "resolving.hpp"

#include <algorithm>
#include <map>

namespace mdim {

representation representation_of(vertex v, const vertex_set &q,
                                 const distance_matrix &d) {
    if (q.empty()) fail(errc::empty_set, "representation needs a non-empty set");
    representation r;
    r.reserve(q.size());
    for (vertex w : q.members()) r.push_back(d(v, w));
    return r;
}

std::optional<vertex_pair> find_resolving_violation(const vertex_set &q,
                                                    const distance_matrix &d) {
    if (q.empty()) fail(errc::empty_set, "resolving check needs a non-empty set");
    const std::size_t n = d.size();
    std::map<representation, vertex> seen;
    for (vertex v = 0; v < n; ++v) {
        auto [it, fresh] = seen.emplace(representation_of(v, q, d), v);
        if (!fresh) return vertex_pair{it->second, v};
    }
    return std::nullopt;
}

bool is_resolving(const vertex_set &q, const distance_matrix &d) {
    return !find_resolving_violation(q, d).has_value();
}

std::optional<doubly_violation> find_doubly_violation(const vertex_set &q,
                                                      const distance_matrix &d) {
    if (q.size() < 2)
        fail(errc::set_too_small, "doubly-resolving check needs at least 2 members");
    const std::size_t n = d.size();
    const auto &members = q.members();
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) {
            int lo = d(u, members[0]) - d(v, members[0]);
            int hi = lo;
            for (std::size_t i = 1; i < members.size(); ++i) {
                int t = d(u, members[i]) - d(v, members[i]);
                lo = std::min(lo, t);
                hi = std::max(hi, t);
                if (lo != hi) break;
            }
            if (lo == hi) return doubly_violation{u, v, lo};
        }
    return std::nullopt;
}

bool is_doubly_resolving(const vertex_set &q, const distance_matrix &d) {
    return !find_doubly_violation(q, d).has_value();
}

bool strongly_resolves(vertex w, vertex u, vertex v, const distance_matrix &d) {
    return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

std::optional<vertex_pair> find_strong_violation(const vertex_set &q,
                                                 const distance_matrix &d) {
    if (q.empty()) fail(errc::empty_set, "strong-resolving check needs a non-empty set");
    const std::size_t n = d.size();
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) {
            bool hit = false;
            for (vertex w : q.members())
                if (strongly_resolves(w, u, v, d)) {
                    hit = true;
                    break;
                }
            if (!hit) return vertex_pair{u, v};
        }
    return std::nullopt;
}

bool is_strong_resolving(const vertex_set &q, const distance_matrix &d) {
    return !find_strong_violation(q, d).has_value();
}

bool maximally_distant_from(vertex u, vertex v, const graph &g,
                            const distance_matrix &d) {
    for (vertex w : g.neighbors(u))
        if (d(v, w) > d(v, u)) return false;
    return true;
}

std::vector<edge> mmd_pairs(const graph &g, const distance_matrix &d) {
    const std::size_t n = g.vertex_count();
    std::vector<edge> out;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (maximally_distant_from(u, v, g, d) &&
                maximally_distant_from(v, u, g, d))
                out.push_back({u, v});
    return out;
}

} // namespace mdim

#include "families.hpp"

#include <algorithm>

namespace mdim {

graph build_cycle(std::size_t n) {
    if (n < 3) fail(errc::bad_parameter, "cycle needs n >= 3");
    std::vector<edge> edges;
    edges.reserve(n);
    for (vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    edges.push_back({0, static_cast<vertex>(n - 1)});
    return graph(n, std::move(edges));
}

graph build_path(std::size_t k) {
    if (k < 2) fail(errc::bad_parameter, "path needs k >= 2");
    std::vector<edge> edges;
    edges.reserve(k - 1);
    for (vertex u = 0; u + 1 < k; ++u) edges.push_back({u, u + 1});
    return graph(k, std::move(edges));
}

graph cartesian_product(const graph &g, const graph &h) {
    if (!g.is_connected() || !h.is_connected())
        fail(errc::disconnected, "cartesian product requires connected factors");
    const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
    auto idx = [nh](vertex a, vertex b) {
        return static_cast<vertex>(a * nh + b);
    };
    std::vector<edge> edges;
    edges.reserve(ng * h.edge_count() + nh * g.edge_count());
    for (vertex a = 0; a < ng; ++a)
        for (const auto &e : h.edges()) edges.push_back({idx(a, e.u), idx(a, e.v)});
    for (const auto &e : g.edges())
        for (vertex b = 0; b < nh; ++b) edges.push_back({idx(e.u, b), idx(e.v, b)});
    std::vector<std::string> labels;
    labels.reserve(ng * nh);
    for (vertex a = 0; a < ng; ++a)
        for (vertex b = 0; b < nh; ++b)
            labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    return graph(ng * nh, std::move(edges), std::move(labels));
}

graph line_graph(const graph &g) {
    if (!g.is_connected()) fail(errc::disconnected, "line graph of a disconnected graph");
    if (g.edge_count() == 0) fail(errc::bad_parameter, "line graph needs at least one edge");
    const auto &src = g.edges();
    const std::size_t m = src.size();
    std::vector<edge> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool incident = src[i].u == src[j].u || src[i].u == src[j].v ||
                            src[i].v == src[j].u || src[i].v == src[j].v;
            if (incident)
                edges.push_back({static_cast<vertex>(i), static_cast<vertex>(j)});
        }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto &e : src)
        labels.push_back("{" + g.label(e.u) + "," + g.label(e.v) + "}");
    return graph(m, std::move(edges), std::move(labels));
}

bool verify_isomorphism(const graph &g, const graph &h,
                        const std::vector<vertex> &map) {
    const std::size_t n = g.vertex_count();
    if (h.vertex_count() != n)
        fail(errc::not_a_bijection, "graphs have different orders");
    if (map.size() != n)
        fail(errc::not_a_bijection, "mapping does not cover every vertex");
    std::vector<char> hit(n, 0);
    for (vertex img : map) {
        if (img >= n) fail(errc::not_a_bijection, "mapping image out of range");
        if (hit[img]) fail(errc::not_a_bijection, "mapping is not injective");
        hit[img] = 1;
    }
    if (g.edge_count() != h.edge_count()) return false;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    return true;
}

layered_graph::layered_graph(std::size_t n, std::size_t k, std::size_t m)
    : n_(n), k_(k), m_(m) {
    if (n < 3) fail(errc::bad_parameter, "layered product needs n >= 3");
    if (k < 3) fail(errc::bad_parameter, "layered product needs k >= 3");
    if (m < 1) fail(errc::bad_parameter, "layered product needs m >= 1");

    const std::size_t nk = n * k;
    const std::size_t total = nk * m;
    auto id = [nk](std::size_t t, std::size_t r) {
        return static_cast<vertex>((r - 1) * nk + (t - 1));
    };

    std::vector<edge> edges;
    for (std::size_t r = 1; r <= m; ++r) {
        for (std::size_t p = 1; p <= k; ++p) {
            const std::size_t base = (p - 1) * n;
            // within a layer: indices differing by 1 or by n-1
            for (std::size_t q = 1; q < n; ++q)
                edges.push_back({id(base + q, r), id(base + q + 1, r)});
            edges.push_back({id(base + 1, r), id(base + n, r)});
        }
        // between consecutive layers: indices differing by n
        for (std::size_t t = 1; t + n <= nk; ++t)
            edges.push_back({id(t, r), id(t + n, r)});
    }
    // between consecutive copies: equal in-copy index
    for (std::size_t r = 1; r < m; ++r)
        for (std::size_t t = 1; t <= nk; ++t)
            edges.push_back({id(t, r), id(t, r + 1)});

    std::vector<std::string> labels;
    labels.reserve(total);
    for (std::size_t r = 1; r <= m; ++r)
        for (std::size_t t = 1; t <= nk; ++t)
            labels.push_back(m == 1 ? "x" + std::to_string(t)
                                    : "x" + std::to_string(t) + "^" +
                                          std::to_string(r));
    g_ = graph(total, std::move(edges), std::move(labels));
}

vertex layered_graph::at(std::size_t t, std::size_t r) const {
    if (t < 1 || t > n_ * k_)
        fail(errc::bad_params, "in-copy index " + std::to_string(t) +
                                   " out of range [1.." +
                                   std::to_string(n_ * k_) + "]");
    if (r < 1 || r > m_)
        fail(errc::bad_params, "copy index " + std::to_string(r) +
                                   " out of range [1.." + std::to_string(m_) +
                                   "]");
    return static_cast<vertex>((r - 1) * n_ * k_ + (t - 1));
}

std::size_t layered_graph::index_of(vertex v) const {
    return static_cast<std::size_t>(v) % (n_ * k_) + 1;
}

std::size_t layered_graph::copy_of(vertex v) const {
    return static_cast<std::size_t>(v) / (n_ * k_) + 1;
}

std::size_t layered_graph::layer_of(vertex v) const {
    return (index_of(v) - 1) / n_ + 1;
}

std::size_t layered_graph::position_of(vertex v) const {
    return (index_of(v) - 1) % n_ + 1;
}

bool layered_graph::compatible(vertex a, vertex b) const {
    if (copy_of(a) != copy_of(b))
        fail(errc::different_copies,
             "compatibility is defined within one copy (" + g_.label(a) +
                 " vs " + g_.label(b) + ")");
    return position_of(a) == position_of(b);
}

vertex_set layered_graph::layer(std::size_t p, std::size_t r) const {
    if (p < 1 || p > k_)
        fail(errc::bad_params, "layer index out of range");
    std::vector<vertex> members;
    members.reserve(n_);
    for (std::size_t q = 1; q <= n_; ++q)
        members.push_back(at((p - 1) * n_ + q, r));
    return vertex_set(std::move(members));
}

h_graph::h_graph(std::size_t n) : n_(n) {
    if (n < 5) fail(errc::bad_parameter, "H(n) needs n >= 5");
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::string> labels;
    labels.reserve(n + pairs);
    for (std::size_t r = 1; r <= n; ++r) labels.push_back("v" + std::to_string(r));
    std::vector<edge> edges;
    edges.reserve(2 * pairs);
    vertex next = static_cast<vertex>(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            labels.push_back("v" + std::to_string(i) + "v" + std::to_string(j));
            edges.push_back({static_cast<vertex>(i - 1), next});
            edges.push_back({static_cast<vertex>(j - 1), next});
            ++next;
        }
    g_ = graph(n + pairs, std::move(edges), std::move(labels));
}

vertex h_graph::point(std::size_t r) const {
    if (r < 1 || r > n_)
        fail(errc::bad_params, "point index out of range [1.." +
                                   std::to_string(n_) + "]");
    return static_cast<vertex>(r - 1);
}

vertex h_graph::pair(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j)
        fail(errc::bad_params, "pair vertex indices out of range");
    // pairs are laid out lexicographically after the n points
    std::size_t before = (i - 1) * n_ - (i - 1) * i / 2;
    return static_cast<vertex>(n_ + before + (j - i - 1));
}

std::pair<std::size_t, std::size_t> h_graph::pair_of(vertex v) const {
    if (is_point(v)) fail(errc::bad_params, "vertex is a point, not a pair");
    std::size_t rest = v - n_;
    std::size_t i = 1;
    while (rest >= n_ - i) {
        rest -= n_ - i;
        ++i;
    }
    return {i, i + 1 + rest};
}

vertex_set h_graph::points() const {
    std::vector<vertex> members(n_);
    for (std::size_t r = 0; r < n_; ++r) members[r] = static_cast<vertex>(r);
    return vertex_set(std::move(members));
}

l_graph::l_graph(std::size_t n) : n_(n) {
    if (n < 5) fail(errc::bad_parameter, "L(n) needs n >= 5");
    const std::size_t per_clique = n - 1;
    const std::size_t total = n * per_clique;
    std::vector<std::string> labels;
    labels.reserve(total);
    hedges_.reserve(total);
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t s = 1; s <= n; ++s) {
            if (s == r) continue;
            std::size_t i = std::min(r, s), j = std::max(r, s);
            hedges_.push_back({static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j)});
            labels.push_back("{v" + std::to_string(r) + ",v" +
                             std::to_string(i) + "v" + std::to_string(j) + "}");
        }

    std::vector<edge> edges;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t a = 0; a < per_clique; ++a)
            for (std::size_t b = a + 1; b < per_clique; ++b)
                edges.push_back({static_cast<vertex>(r * per_clique + a),
                                 static_cast<vertex>(r * per_clique + b)});
    // vertices sharing the underlying pair v_i v_j
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            vertex a = static_cast<vertex>((i - 1) * per_clique +
                                           (j > i ? j - 2 : j - 1));
            vertex b = static_cast<vertex>((j - 1) * per_clique + (i - 1));
            edges.push_back({a, b});
        }
    g_ = graph(total, std::move(edges), std::move(labels));
}

vertex l_graph::at(std::size_t r, std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (r < 1 || r > n_ || i < 1 || j > n_ || i == j)
        fail(errc::bad_params, "L(n) vertex indices out of range");
    if (r != i && r != j)
        fail(errc::bad_params, "no vertex {v" + std::to_string(r) + ",v" +
                                   std::to_string(i) + "v" +
                                   std::to_string(j) + "}: clique index must "
                                   "be an endpoint of the pair");
    std::size_t s = (r == i) ? j : i; // the other endpoint
    std::size_t off = s < r ? s - 1 : s - 2;
    return static_cast<vertex>((r - 1) * (n_ - 1) + off);
}

std::size_t l_graph::clique_of(vertex v) const {
    return static_cast<std::size_t>(v) / (n_ - 1) + 1;
}

std::pair<std::size_t, std::size_t> l_graph::hedge_of(vertex v) const {
    return {hedges_[v].first, hedges_[v].second};
}

vertex_set l_graph::clique(std::size_t r) const {
    if (r < 1 || r > n_) fail(errc::bad_clique_index, "clique index out of range");
    std::vector<vertex> members;
    members.reserve(n_ - 1);
    for (std::size_t a = 0; a < n_ - 1; ++a)
        members.push_back(static_cast<vertex>((r - 1) * (n_ - 1) + a));
    return vertex_set(std::move(members));
}

vertex_set l_graph::clique_neighborhood(std::size_t r) const {
    if (r < 1 || r > n_) fail(errc::bad_clique_index, "clique index out of range");
    std::vector<vertex> members;
    members.reserve(n_ - 1);
    for (std::size_t k = 1; k <= n_; ++k) {
        if (k == r) continue;
        members.push_back(at(k, std::min(r, k), std::max(r, k)));
    }
    return vertex_set(std::move(members));
}

} // namespace mdim

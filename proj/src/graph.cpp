#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace mdim {

std::string graph::default_label(vertex u) {
    return "x" + std::to_string(u + 1);
}

graph::graph(std::size_t n, std::vector<edge> edges)
    : graph(n, std::move(edges), {}) {}

graph::graph(std::size_t n, std::vector<edge> edges,
             std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ == 0)
        fail(errc::bad_parameter, "graph needs at least one vertex");

    for (auto &e : edges_) {
        if (e.u == e.v)
            fail(errc::self_loop,
                 "self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.v >= n_)
            fail(errc::index_error, "edge endpoint " + std::to_string(e.v) +
                                        " out of range (n=" +
                                        std::to_string(n_) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            fail(errc::duplicate_edge,
                 "duplicate edge " + std::to_string(edges_[i].u) + " " +
                     std::to_string(edges_[i].v));

    if (labels_.empty()) {
        labels_.reserve(n_);
        for (vertex u = 0; u < n_; ++u) labels_.push_back(default_label(u));
    } else if (labels_.size() != n_) {
        fail(errc::bad_parameter, "label count does not match vertex count");
    }
    for (vertex u = 0; u < n_; ++u) {
        if (labels_[u].empty())
            fail(errc::bad_parameter, "empty label for vertex " +
                                          std::to_string(u));
        if (!label_index_.emplace(labels_[u], u).second)
            fail(errc::bad_parameter, "duplicate label '" + labels_[u] + "'");
    }

    adj_.assign(n_, {});
    words_ = (n_ + 63) / 64;
    bits_.assign(n_ * words_, 0);
    for (const auto &e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
        bits_[e.u * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
        bits_[e.v * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    }
    for (auto &nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<vertex> graph::find_label(const std::string &name) const {
    auto it = label_index_.find(name);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

bool graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::queue<vertex> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        vertex u = q.front();
        q.pop();
        for (vertex w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n_;
}

vertex_set::vertex_set(std::vector<vertex> members)
    : members_(std::move(members)) {
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::bad_parameter, "vertex set has a duplicate member");
}

vertex_set vertex_set::checked(std::vector<vertex> members, const graph &g) {
    for (vertex v : members)
        if (v >= g.vertex_count())
            fail(errc::index_error,
                 "vertex index " + std::to_string(v) + " out of range");
    return vertex_set(std::move(members));
}

bool vertex_set::contains(vertex v) const {
    return std::find(members_.begin(), members_.end(), v) != members_.end();
}

std::vector<std::string> labels_of(const graph &g, const vertex_set &q) {
    std::vector<std::string> out;
    out.reserve(q.size());
    for (vertex v : q.members()) out.push_back(g.label(v));
    return out;
}

std::uint8_t distance_matrix::diameter() const {
    std::uint8_t best = 0;
    for (auto x : d_) best = std::max(best, x);
    return best;
}

distance_matrix all_pairs_distances(const graph &g) {
    const std::size_t n = g.vertex_count();
    distance_matrix m;
    m.n_ = n;
    m.d_.assign(n * n, 0);

    std::vector<int> dist(n);
    std::vector<vertex> queue(n);
    for (vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            vertex u = queue[head++];
            for (vertex w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail != n)
            fail(errc::disconnected,
                 "graph is disconnected: vertex " + g.label(s) +
                     " reaches only " + std::to_string(tail) + " of " +
                     std::to_string(n) + " vertices");
        for (vertex v = 0; v < n; ++v) {
            if (dist[v] > 254)
                fail(errc::internal, "distance exceeds 8-bit storage");
            m.d_[s * n + v] = static_cast<std::uint8_t>(dist[v]);
        }
    }
    return m;
}

namespace {

bool parse_size(const std::string &tok, std::size_t &out) {
    if (tok.empty()) return false;
    std::size_t val = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        val = val * 10 + static_cast<std::size_t>(c - '0');
        if (val > 1'000'000'000) return false;
    }
    out = val;
    return true;
}

} // namespace

graph read_edge_list(const std::string &text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        std::istringstream in(text);
        while (std::getline(in, cur)) {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
        }
    }
    std::size_t at = 0;
    while (at < lines.size() && lines[at].empty()) ++at;
    if (at == lines.size())
        fail(errc::parse_error, "edge list is empty: missing 'n m' header");

    std::istringstream header(lines[at]);
    std::string ntok, mtok, extra;
    header >> ntok >> mtok;
    if (header >> extra)
        fail(errc::parse_error, "malformed header line '" + lines[at] + "'");
    std::size_t n = 0, m = 0;
    if (!parse_size(ntok, n) || !parse_size(mtok, m))
        fail(errc::parse_error, "malformed header line '" + lines[at] + "'");
    ++at;

    std::vector<edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i, ++at) {
        while (at < lines.size() && lines[at].empty()) ++at;
        if (at >= lines.size())
            fail(errc::parse_error, "expected " + std::to_string(m) +
                                        " edge lines, got " +
                                        std::to_string(i));
        std::istringstream row(lines[at]);
        std::string utok, vtok;
        row >> utok >> vtok;
        if (row >> extra)
            fail(errc::parse_error, "malformed edge line '" + lines[at] + "'");
        std::size_t u = 0, v = 0;
        if (!parse_size(utok, u) || !parse_size(vtok, v))
            fail(errc::parse_error, "malformed edge line '" + lines[at] + "'");
        edges.push_back({static_cast<vertex>(u), static_cast<vertex>(v)});
    }

    std::vector<std::string> labels;
    for (; at < lines.size(); ++at) {
        if (lines[at].empty()) continue;
        std::size_t sp = lines[at].find(' ');
        if (sp == std::string::npos)
            fail(errc::parse_error, "malformed label line '" + lines[at] + "'");
        std::size_t u = 0;
        if (!parse_size(lines[at].substr(0, sp), u))
            fail(errc::parse_error, "malformed label line '" + lines[at] + "'");
        if (u >= n)
            fail(errc::index_error,
                 "label line for vertex " + std::to_string(u) +
                     " out of range (n=" + std::to_string(n) + ")");
        std::string name = lines[at].substr(sp + 1);
        if (name.empty())
            fail(errc::parse_error, "empty label in line '" + lines[at] + "'");
        if (labels.empty()) {
            labels.reserve(n);
            for (vertex w = 0; w < n; ++w)
                labels.push_back(graph::default_label(w));
        }
        labels[u] = name;
    }

    return labels.empty() ? graph(n, std::move(edges))
                          : graph(n, std::move(edges), std::move(labels));
}

std::string write_edge_list(const graph &g) {
    std::string out = std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const auto &e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    for (vertex u = 0; u < g.vertex_count(); ++u)
        if (g.label(u) != graph::default_label(u))
            out += std::to_string(u) + " " + g.label(u) + "\n";
    return out;
}

} // namespace mdim

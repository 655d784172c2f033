#include "solve.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <thread>

namespace mdim {

const char *set_kind_name(set_kind k) {
    switch (k) {
    case set_kind::resolving: return "resolving";
    case set_kind::doubly: return "doubly";
    case set_kind::strong: return "strong";
    }
    return "?";
}

set_kind parse_set_kind(const std::string &name) {
    if (name == "resolving") return set_kind::resolving;
    if (name == "doubly") return set_kind::doubly;
    if (name == "strong") return set_kind::strong;
    fail(errc::bad_parameter,
         "unknown kind '" + name + "' (expected resolving, doubly or strong)");
}

bool check_set(set_kind kind, const vertex_set &q, const distance_matrix &d) {
    switch (kind) {
    case set_kind::resolving: return is_resolving(q, d);
    case set_kind::doubly: return is_doubly_resolving(q, d);
    case set_kind::strong: return is_strong_resolving(q, d);
    }
    return false;
}

namespace {

// Per-worker candidate test. The resolving path hashes each vertex's
// representation into a generation-stamped open-addressing table and
// short-circuits on the first colliding pair; the doubly path reuses the
// representation rows for the constant-difference scan.
class candidate_eval {
public:
    candidate_eval(const distance_matrix &d, set_kind kind)
        : d_(d), kind_(kind), n_(d.size()) {
        std::size_t cap = std::bit_ceil(2 * n_ + 1);
        mask_ = cap - 1;
        slots_.assign(cap, 0);
    }

    bool operator()(const vertex *q, std::size_t k) {
        switch (kind_) {
        case set_kind::resolving: return distinct_representations(q, k);
        case set_kind::doubly:
            return distinct_representations(q, k) && no_constant_difference(k);
        case set_kind::strong: return covers_all_pairs(q, k);
        }
        return false;
    }

private:
    bool distinct_representations(const vertex *q, std::size_t k) {
        if (reps_.size() < n_ * k) reps_.resize(n_ * k);
        ++gen_;
        std::uint8_t *reps = reps_.data();
        for (vertex v = 0; v < n_; ++v) {
            std::uint8_t *row = reps + v * k;
            const std::uint8_t *dist = d_.row(v);
            std::uint32_t h = 2166136261u;
            for (std::size_t i = 0; i < k; ++i) {
                row[i] = dist[q[i]];
                h = (h ^ row[i]) * 16777619u;
            }
            std::size_t at = h & mask_;
            while (true) {
                std::uint64_t slot = slots_[at];
                if ((slot >> 32) != gen_) {
                    slots_[at] = (std::uint64_t{gen_} << 32) | (v + 1);
                    break;
                }
                vertex other = static_cast<vertex>(slot & 0xffffffffu) - 1;
                if (std::memcmp(reps + other * k, row, k) == 0) return false;
                at = (at + 1) & mask_;
            }
        }
        return true;
    }

    bool no_constant_difference(std::size_t k) {
        const std::uint8_t *reps = reps_.data();
        for (vertex u = 0; u < n_; ++u) {
            const std::uint8_t *ru = reps + u * k;
            for (vertex v = u + 1; v < n_; ++v) {
                const std::uint8_t *rv = reps + v * k;
                int first = int(ru[0]) - int(rv[0]);
                std::size_t i = 1;
                for (; i < k; ++i)
                    if (int(ru[i]) - int(rv[i]) != first) break;
                if (i == k) return false;
            }
        }
        return true;
    }

    bool covers_all_pairs(const vertex *q, std::size_t k) {
        for (vertex u = 0; u < n_; ++u) {
            const std::uint8_t *du = d_.row(u);
            for (vertex v = u + 1; v < n_; ++v) {
                const std::uint8_t *dv = d_.row(v);
                int duv = du[v];
                bool hit = false;
                for (std::size_t i = 0; i < k; ++i) {
                    vertex w = q[i];
                    if (du[w] == duv + dv[w] || dv[w] == duv + du[w]) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) return false;
            }
        }
        return true;
    }

    const distance_matrix &d_;
    set_kind kind_;
    std::size_t n_;
    std::size_t mask_ = 0;
    std::uint32_t gen_ = 0;
    std::vector<std::uint8_t> reps_;
    std::vector<std::uint64_t> slots_;
};

// Lexicographic combinations with a fixed first element. fn returns false to
// stop the stream.
template <typename Fn>
void combos_with_first(vertex first, std::size_t n, std::size_t k,
                       std::vector<vertex> &c, Fn &&fn) {
    c[0] = first;
    for (std::size_t i = 1; i < k; ++i) c[i] = first + static_cast<vertex>(i);
    if (c[k - 1] >= n) return;
    while (true) {
        if (!fn()) return;
        std::size_t i = k - 1;
        while (i >= 1 && c[i] == n - k + i) --i;
        if (i == 0) return;
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

level_scan scan_size(set_kind kind, const distance_matrix &d, std::size_t k,
                     std::uint64_t budget, unsigned jobs) {
    const std::size_t n = d.size();
    level_scan out;
    if (k == 0 || k > n) return out;

    const std::size_t first_count = n - k + 1;
    const unsigned workers =
        std::max<unsigned>(1, std::min<unsigned>(jobs ? jobs : 1,
                                                 static_cast<unsigned>(first_count)));
    const std::uint64_t cap = std::max<std::uint64_t>(1, budget / workers);

    std::vector<level_scan> parts(workers);
    auto run = [&](unsigned id) {
        candidate_eval eval(d, kind);
        level_scan &part = parts[id];
        std::vector<vertex> combo(k);
        for (std::size_t first = id; first < first_count; first += workers) {
            bool stop = false;
            combos_with_first(static_cast<vertex>(first), n, k, combo, [&] {
                if (part.nodes == cap) {
                    part.budget_exceeded = true;
                    stop = true;
                    return false;
                }
                ++part.nodes;
                if (eval(combo.data(), k)) {
                    part.found = true;
                    part.witness = combo;
                    stop = true;
                    return false;
                }
                return true;
            });
            if (stop) break;
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
        for (auto &t : pool) t.join();
    }

    for (auto &part : parts) {
        out.nodes += part.nodes;
        out.budget_exceeded = out.budget_exceeded || part.budget_exceeded;
        if (part.found && (!out.found || part.witness < out.witness)) {
            out.found = true;
            out.witness = part.witness;
        }
    }
    return out;
}

std::vector<vertex_set> all_valid_sets(set_kind kind, const distance_matrix &d,
                                       std::size_t k) {
    const std::size_t n = d.size();
    std::vector<vertex_set> out;
    if (k == 0 || k > n) return out;
    candidate_eval eval(d, kind);
    std::vector<vertex> combo(k);
    for (vertex first = 0; first + k <= n; ++first)
        combos_with_first(first, n, k, combo, [&] {
            if (eval(combo.data(), k)) out.push_back(vertex_set(combo));
            return true;
        });
    return out;
}

namespace {

std::uint64_t budget_left(std::uint64_t budget, std::uint64_t used) {
    return used >= budget ? 0 : budget - used;
}

solve_result solve_by_enumeration(set_kind kind, const distance_matrix &d,
                                  std::size_t lo, const vertex_set &greedy,
                                  const solve_options &opts,
                                  const std::string &method,
                                  std::uint64_t nodes_offset) {
    solve_result res;
    res.kind = kind;
    res.method = method;
    res.nodes_explored = nodes_offset;
    for (std::size_t k = lo; k <= greedy.size(); ++k) {
        level_scan level = scan_size(kind, d, k,
                                     budget_left(opts.budget, res.nodes_explored),
                                     opts.jobs);
        res.nodes_explored += level.nodes;
        if (level.budget_exceeded) {
            const bool have = level.found;
            res.witness = have ? vertex_set(level.witness) : greedy;
            res.size = res.witness.size();
            res.certificate_checked = false;
            res.optimal = false;
            return res;
        }
        if (level.found) {
            res.witness = vertex_set(level.witness);
            res.size = k;
            res.certificate_checked = true;
            res.optimal = true;
            return res;
        }
    }
    fail(errc::internal, "enumeration missed the greedy witness");
}

} // namespace

solve_result min_resolving(const graph &g, const distance_matrix &d,
                           const solve_options &opts) {
    vertex_set greedy = greedy_upper_bound(g, d, set_kind::resolving);
    return solve_by_enumeration(set_kind::resolving, d, 1, greedy, opts,
                                "subset-enumeration", 0);
}

solve_result min_doubly_resolving(const graph &g, const distance_matrix &d,
                                  const solve_options &opts) {
    if (d.size() < 2)
        fail(errc::bad_parameter,
             "doubly resolving sets need at least two vertices");
    // psi >= beta, so the exhausted resolving levels seed the lower bound
    solve_result beta = min_resolving(g, d, opts);
    vertex_set greedy = greedy_upper_bound(g, d, set_kind::doubly);
    if (!beta.optimal) {
        solve_result res;
        res.kind = set_kind::doubly;
        res.method = "subset-enumeration";
        res.witness = greedy;
        res.size = greedy.size();
        res.nodes_explored = beta.nodes_explored;
        return res;
    }
    std::size_t lo = std::max<std::size_t>(2, beta.size);
    return solve_by_enumeration(set_kind::doubly, d, lo, greedy, opts,
                                "subset-enumeration", beta.nodes_explored);
}

graph build_sr_graph(const graph &g, const distance_matrix &d) {
    return graph(g.vertex_count(), mmd_pairs(g, d), g.labels());
}

solve_result min_strong_resolving(const graph &g, const distance_matrix &d,
                                  const solve_options &opts) {
    graph sr = build_sr_graph(g, d);
    cover_result cov = min_vertex_cover(sr, opts);
    solve_result res;
    res.kind = set_kind::strong;
    if (!cov.optimal) {
        res.witness = greedy_upper_bound(g, d, set_kind::strong);
        res.size = res.witness.size();
        res.method = "sr-vertex-cover";
        res.nodes_explored = cov.nodes;
        return res;
    }
    if (!cov.cover.empty() && is_strong_resolving(cov.cover, d)) {
        res.witness = cov.cover;
        res.size = cov.cover.size();
        res.certificate_checked = true;
        res.optimal = true;
        res.method = "sr-vertex-cover";
        res.nodes_explored = cov.nodes;
        return res;
    }
    // The cover size is still a valid lower bound: every strong resolving set
    // covers every mutually-maximally-distant pair.
    vertex_set greedy = greedy_upper_bound(g, d, set_kind::strong);
    return solve_by_enumeration(set_kind::strong, d,
                                std::max<std::size_t>(1, cov.cover.size()),
                                greedy, opts, "sr-vertex-cover+enumeration",
                                cov.nodes);
}

namespace {

// Fixed-width bitset helpers for the vertex-cover search.
struct bitrows {
    std::size_t n = 0, w = 0;
    std::vector<std::uint64_t> rows;

    explicit bitrows(const graph &g)
        : n(g.vertex_count()), w((g.vertex_count() + 63) / 64),
          rows(n * w, 0) {
        for (const auto &e : g.edges()) {
            rows[e.u * w + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
            rows[e.v * w + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
        }
    }
    const std::uint64_t *row(vertex u) const { return rows.data() + u * w; }
};

using words = std::vector<std::uint64_t>;

bool test_bit(const words &m, vertex v) {
    return (m[v >> 6] >> (v & 63)) & 1u;
}
void set_bit(words &m, vertex v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }

// Greedy maximal matching on edges with both endpoints outside `cover`;
// its size lower-bounds the residual cover.
std::size_t matching_bound(const bitrows &bg, const words &cover) {
    words used = cover;
    std::size_t lb = 0;
    for (vertex u = 0; u < bg.n; ++u) {
        if (test_bit(used, u)) continue;
        const std::uint64_t *r = bg.row(u);
        for (std::size_t i = 0; i < bg.w; ++i) {
            std::uint64_t free = r[i] & ~used[i];
            if (free) {
                set_bit(used, u);
                used[i] |= free & (~free + 1);
                ++lb;
                break;
            }
        }
    }
    return lb;
}

struct vc_search {
    const bitrows &bg;
    std::uint64_t nodes = 0;
    std::uint64_t cap;
    bool exceeded = false;
    std::size_t best;
    words best_cover;

    vc_search(const bitrows &graph_bits, std::uint64_t budget_cap,
              std::size_t initial_best)
        : bg(graph_bits), cap(budget_cap), best(initial_best) {}

    // classic two-way branch: the smallest endpoint of the first uncovered
    // edge either joins the cover or all of its uncovered neighbors do
    void run(words cover, std::size_t count) {
        if (exceeded) return;
        if (nodes++ >= cap) {
            exceeded = true;
            return;
        }
        vertex u = 0;
        words nb(bg.w, 0);
        bool found_edge = false;
        for (; u < bg.n; ++u) {
            if (test_bit(cover, u)) continue;
            const std::uint64_t *r = bg.row(u);
            std::size_t popcnt = 0;
            for (std::size_t i = 0; i < bg.w; ++i) {
                nb[i] = r[i] & ~cover[i];
                popcnt += static_cast<std::size_t>(std::popcount(nb[i]));
            }
            if (popcnt) {
                found_edge = true;
                break;
            }
        }
        if (!found_edge) {
            if (count < best) {
                best = count;
                best_cover = cover;
            }
            return;
        }
        if (count + std::max<std::size_t>(1, matching_bound(bg, cover)) >= best)
            return;

        words with_u = cover;
        set_bit(with_u, u);
        run(std::move(with_u), count + 1);

        std::size_t forced = 0;
        words without_u = cover;
        for (std::size_t i = 0; i < bg.w; ++i) {
            forced += static_cast<std::size_t>(std::popcount(nb[i]));
            without_u[i] |= nb[i];
        }
        if (count + forced < best) run(std::move(without_u), count + forced);
    }
};

// Lexicographically smallest cover of exactly `target` vertices. Include-first
// depth-first search emits candidate sets in lexicographic order; skipping a
// vertex that has an already-skipped neighbor is pruned immediately since that
// edge could never be covered.
struct vc_lex {
    const bitrows &bg;
    std::size_t target;
    std::uint64_t nodes = 0;
    std::uint64_t cap;
    bool exceeded = false;
    std::vector<vertex> chosen;
    std::vector<vertex> result;
    words cover, skipped;

    vc_lex(const bitrows &graph_bits, std::size_t target_size,
           std::uint64_t budget_cap)
        : bg(graph_bits), target(target_size), cap(budget_cap),
          cover(graph_bits.w, 0), skipped(graph_bits.w, 0) {}

    bool covers_everything() const {
        for (vertex u = 0; u < bg.n; ++u) {
            if (test_bit(cover, u)) continue;
            const std::uint64_t *r = bg.row(u);
            for (std::size_t i = 0; i < bg.w; ++i)
                if (r[i] & ~cover[i]) return false;
        }
        return true;
    }

    bool dfs(vertex at) {
        if (exceeded) return false;
        if (nodes++ >= cap) {
            exceeded = true;
            return false;
        }
        if (chosen.size() == target) {
            if (!covers_everything()) return false;
            result = chosen;
            return true;
        }
        if (at == bg.n) return false;
        if (chosen.size() + (bg.n - at) < target) return false;

        chosen.push_back(at);
        set_bit(cover, at);
        if (dfs(at + 1)) return true;
        chosen.pop_back();
        cover[at >> 6] &= ~(std::uint64_t{1} << (at & 63));

        const std::uint64_t *r = bg.row(at);
        for (std::size_t i = 0; i < bg.w; ++i)
            if (r[i] & skipped[i]) return false; // an edge would stay uncovered
        set_bit(skipped, at);
        bool ok = dfs(at + 1);
        skipped[at >> 6] &= ~(std::uint64_t{1} << (at & 63));
        return ok;
    }
};

} // namespace

cover_result min_vertex_cover(const graph &g, const solve_options &opts) {
    cover_result out;
    bitrows bg(g);

    vc_search search(bg, std::max<std::uint64_t>(1, opts.budget),
                     g.vertex_count() + 1);
    search.run(words(bg.w, 0), 0);
    out.nodes = search.nodes;
    if (search.exceeded) return out;

    const std::size_t size = search.best == g.vertex_count() + 1 ? 0 : search.best;
    vc_lex lex(bg, size, std::max<std::uint64_t>(1, opts.budget - std::min<std::uint64_t>(opts.budget, search.nodes)));
    if (size == 0) {
        out.cover = vertex_set{};
        out.optimal = true;
        return out;
    }
    bool found = lex.dfs(0);
    out.nodes += lex.nodes;
    if (lex.exceeded || !found) return out;
    out.cover = vertex_set(lex.result);
    out.optimal = true;
    return out;
}

vertex_set greedy_upper_bound(const graph &, const distance_matrix &d,
                              set_kind kind) {
    const std::size_t n = d.size();
    if (n == 1) return vertex_set({0});
    struct open_pair {
        vertex u, v;
        int lambda = 0;
        bool lambda_set = false;
    };
    std::vector<open_pair> open;
    open.reserve(n * (n - 1) / 2);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) open.push_back({u, v});

    auto settles = [&](const open_pair &p, vertex x) {
        switch (kind) {
        case set_kind::resolving: return d(p.u, x) != d(p.v, x);
        case set_kind::strong: return strongly_resolves(x, p.u, p.v, d);
        case set_kind::doubly:
            return p.lambda_set && d(p.u, x) - d(p.v, x) != p.lambda;
        }
        return false;
    };

    std::vector<vertex> chosen;
    std::vector<char> used(n, 0);
    while (!open.empty() && chosen.size() < n) {
        vertex pick = 0;
        long best = -1;
        for (vertex x = 0; x < n; ++x) {
            if (used[x]) continue;
            long cnt = 0;
            for (const auto &p : open) cnt += settles(p, x) ? 1 : 0;
            if (cnt > best) {
                best = cnt;
                pick = x;
            }
        }
        used[pick] = 1;
        chosen.push_back(pick);
        std::vector<open_pair> next;
        next.reserve(open.size());
        for (auto p : open) {
            if (settles(p, pick)) continue;
            if (kind == set_kind::doubly && !p.lambda_set) {
                p.lambda = d(p.u, pick) - d(p.v, pick);
                p.lambda_set = true;
            }
            next.push_back(p);
        }
        open.swap(next);
    }

    vertex_set result{chosen};
    if (kind == set_kind::doubly && result.size() < 2 && n >= 2) {
        // pad to the predicate's minimum arity
        for (vertex x = 0; x < n && result.size() < 2; ++x)
            if (!result.contains(x)) {
                chosen.push_back(x);
                result = vertex_set(chosen);
            }
    }
    if (!check_set(kind, result, d))
        fail(errc::internal, "greedy upper bound produced an invalid set");
    return result;
}

} // namespace mdim

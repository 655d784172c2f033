#include "mdim.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "claims.hpp"
#include "instance.hpp"
#include "named_sets.hpp"
#include "solve.hpp"

using ordered_json = nlohmann::ordered_json;

struct mdim_graph {
    mdim::family_instance inst;
    mutable std::optional<mdim::distance_matrix> dist;

    const mdim::distance_matrix &distances() const {
        if (!dist) dist = mdim::all_pairs_distances(inst.g);
        return *dist;
    }
};

namespace {

thread_local std::string t_last_error;

mdim_status map_errc(mdim::errc c) {
    using mdim::errc;
    switch (c) {
    case errc::bad_parameter: return MDIM_ERR_BAD_PARAMETER;
    case errc::parse_error:
    case errc::index_error:
    case errc::self_loop:
    case errc::duplicate_edge: return MDIM_ERR_PARSE;
    case errc::disconnected: return MDIM_ERR_DISCONNECTED;
    case errc::empty_set: return MDIM_ERR_EMPTY_SET;
    case errc::set_too_small: return MDIM_ERR_SET_TOO_SMALL;
    case errc::not_a_bijection: return MDIM_ERR_NOT_A_BIJECTION;
    case errc::different_copies:
    case errc::bad_clique_index:
    case errc::bad_params: return MDIM_ERR_BAD_PARAMS;
    case errc::unknown_claim: return MDIM_ERR_UNKNOWN_CLAIM;
    case errc::io_error: return MDIM_ERR_IO;
    case errc::internal: return MDIM_ERR_INTERNAL;
    }
    return MDIM_ERR_INTERNAL;
}

template <typename Fn> mdim_status guarded(Fn &&fn) {
    try {
        fn();
        return MDIM_OK;
    } catch (const mdim::error &e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::exception &e) {
        t_last_error = e.what();
        return MDIM_ERR_INTERNAL;
    }
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mdim_status require(bool ok, const char *message) {
    if (ok) return MDIM_OK;
    t_last_error = message;
    return MDIM_ERR_BAD_PARAMETER;
}

ordered_json witness_json(const mdim::graph &g, const mdim::vertex_set &q) {
    ordered_json arr = ordered_json::array();
    for (const std::string &label : mdim::labels_of(g, q)) arr.push_back(label);
    return arr;
}

mdim::solve_options solver_options(uint64_t budget, unsigned jobs) {
    mdim::solve_options opts;
    if (budget) opts.budget = budget;
    opts.jobs = jobs ? jobs : 1;
    return opts;
}

ordered_json report_json(const mdim::claim_report &rep, bool with_timing) {
    ordered_json j;
    j["id"] = rep.id;
    j["verdict"] = rep.verdict;
    j["expected"] = rep.expected;
    j["computed"] = rep.computed;
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    if (!rep.note.empty()) j["note"] = rep.note;
    if (with_timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

} // namespace

extern "C" {

const char *mdim_version(void) { return "1.0.0"; }

const char *mdim_status_name(mdim_status status) {
    switch (status) {
    case MDIM_OK: return "ok";
    case MDIM_ERR_BAD_PARAMETER: return "bad parameter";
    case MDIM_ERR_PARSE: return "parse error";
    case MDIM_ERR_DISCONNECTED: return "disconnected graph";
    case MDIM_ERR_EMPTY_SET: return "empty set";
    case MDIM_ERR_SET_TOO_SMALL: return "set too small";
    case MDIM_ERR_NOT_A_BIJECTION: return "not a bijection";
    case MDIM_ERR_BAD_PARAMS: return "bad parameters";
    case MDIM_ERR_UNKNOWN_CLAIM: return "unknown claim";
    case MDIM_ERR_IO: return "io error";
    case MDIM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *mdim_last_error(void) { return t_last_error.c_str(); }

mdim_status mdim_graph_build(const char *family_spec, mdim_graph **out) {
    if (auto st = require(family_spec && out, "null argument")) return st;
    return guarded([&] {
        auto handle = std::make_unique<mdim_graph>();
        handle->inst = mdim::build_family(family_spec);
        *out = handle.release();
    });
}

mdim_status mdim_graph_from_edge_list(const char *text, mdim_graph **out) {
    if (auto st = require(text && out, "null argument")) return st;
    return guarded([&] {
        auto handle = std::make_unique<mdim_graph>();
        handle->inst = mdim::family_from_text(text, "file:<memory>");
        *out = handle.release();
    });
}

mdim_status mdim_graph_from_file(const char *path, mdim_graph **out) {
    if (auto st = require(path && out, "null argument")) return st;
    return guarded([&] {
        std::ifstream in(path);
        if (!in)
            mdim::fail(mdim::errc::io_error,
                       std::string("cannot open '") + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        auto handle = std::make_unique<mdim_graph>();
        handle->inst = mdim::family_from_text(text.str(),
                                              std::string("file:") + path);
        *out = handle.release();
    });
}

mdim_status mdim_graph_to_edge_list(const mdim_graph *g, char **out_text) {
    if (auto st = require(g && out_text, "null argument")) return st;
    return guarded([&] { *out_text = dup_string(mdim::write_edge_list(g->inst.g)); });
}

void mdim_graph_free(mdim_graph *g) { delete g; }

void mdim_string_free(char *s) { delete[] s; }

size_t mdim_graph_vertex_count(const mdim_graph *g) {
    return g ? g->inst.g.vertex_count() : 0;
}

size_t mdim_graph_edge_count(const mdim_graph *g) {
    return g ? g->inst.g.edge_count() : 0;
}

mdim_status mdim_graph_vertex_label(const mdim_graph *g, size_t v, char **out) {
    if (auto st = require(g && out, "null argument")) return st;
    return guarded([&] {
        if (v >= g->inst.g.vertex_count())
            mdim::fail(mdim::errc::index_error, "vertex index out of range");
        *out = dup_string(g->inst.g.label(static_cast<mdim::vertex>(v)));
    });
}

mdim_status mdim_graph_distance(const mdim_graph *g, size_t u, size_t v,
                                unsigned *out) {
    if (auto st = require(g && out, "null argument")) return st;
    return guarded([&] {
        if (u >= g->inst.g.vertex_count() || v >= g->inst.g.vertex_count())
            mdim::fail(mdim::errc::index_error, "vertex index out of range");
        *out = g->distances()(static_cast<mdim::vertex>(u),
                              static_cast<mdim::vertex>(v));
    });
}

mdim_status mdim_check(const mdim_graph *g, const char *kind,
                       const char *set_literal, int with_timing,
                       char **out_json) {
    if (auto st = require(g && kind && set_literal && out_json, "null argument"))
        return st;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        mdim::set_kind sk = mdim::parse_set_kind(kind);
        mdim::vertex_set q = mdim::parse_vertex_set(g->inst, set_literal);
        const mdim::distance_matrix &d = g->distances();

        ordered_json j;
        j["kind"] = kind;
        j["graph"] = g->inst.spec;
        j["set"] = witness_json(g->inst.g, q);
        switch (sk) {
        case mdim::set_kind::resolving: {
            auto bad = mdim::find_resolving_violation(q, d);
            j["holds"] = !bad.has_value();
            if (bad)
                j["violation"] = {{"u", g->inst.g.label(bad->u)},
                                  {"v", g->inst.g.label(bad->v)},
                                  {"reason", "equal representations"}};
            break;
        }
        case mdim::set_kind::doubly: {
            auto bad = mdim::find_doubly_violation(q, d);
            j["holds"] = !bad.has_value();
            if (bad)
                j["violation"] = {{"u", g->inst.g.label(bad->u)},
                                  {"v", g->inst.g.label(bad->v)},
                                  {"lambda", bad->lambda},
                                  {"reason", "constant difference vector"}};
            break;
        }
        case mdim::set_kind::strong: {
            auto bad = mdim::find_strong_violation(q, d);
            j["holds"] = !bad.has_value();
            if (bad)
                j["violation"] = {{"u", g->inst.g.label(bad->u)},
                                  {"v", g->inst.g.label(bad->v)},
                                  {"reason", "no member strongly resolves"}};
            break;
        }
        }
        if (with_timing) {
            auto t1 = std::chrono::steady_clock::now();
            j["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        *out_json = dup_string(j.dump());
    });
}

mdim_status mdim_solve(const mdim_graph *g, const char *kind, uint64_t budget,
                       unsigned jobs, int with_timing, char **out_json) {
    if (auto st = require(g && kind && out_json, "null argument")) return st;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        mdim::set_kind sk = mdim::parse_set_kind(kind);
        const mdim::distance_matrix &d = g->distances();
        mdim::solve_options opts = solver_options(budget, jobs);
        mdim::solve_result r;
        switch (sk) {
        case mdim::set_kind::resolving:
            r = mdim::min_resolving(g->inst.g, d, opts);
            break;
        case mdim::set_kind::doubly:
            r = mdim::min_doubly_resolving(g->inst.g, d, opts);
            break;
        case mdim::set_kind::strong:
            r = mdim::min_strong_resolving(g->inst.g, d, opts);
            break;
        }
        ordered_json j;
        j["kind"] = kind;
        j["graph"] = g->inst.spec;
        j["size"] = r.size;
        j["witness"] = witness_json(g->inst.g, r.witness);
        j["certificate_checked"] = r.certificate_checked;
        j["optimal"] = r.optimal;
        j["method"] = r.method;
        j["nodes_explored"] = r.nodes_explored;
        if (with_timing) {
            auto t1 = std::chrono::steady_clock::now();
            j["elapsed_ms"] =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        *out_json = dup_string(j.dump());
    });
}

mdim_status mdim_named_set(const mdim_graph *g, const char *set_spec,
                           char **out_json) {
    if (auto st = require(g && set_spec && out_json, "null argument")) return st;
    return guarded([&] {
        mdim::vertex_set q = mdim::build_named_set(g->inst, set_spec);
        ordered_json j;
        j["graph"] = g->inst.spec;
        j["set"] = mdim::named_set_display(g->inst, set_spec);
        j["members"] = witness_json(g->inst.g, q);
        ordered_json idx = ordered_json::array();
        for (mdim::vertex v : q.members()) idx.push_back(v);
        j["indices"] = idx;
        *out_json = dup_string(j.dump());
    });
}

mdim_status mdim_table(const mdim_graph *g, const char *set_spec,
                       char **out_text) {
    if (auto st = require(g && set_spec && out_text, "null argument")) return st;
    return guarded(
        [&] { *out_text = dup_string(mdim::emit_table(g->inst, set_spec)); });
}

mdim_status mdim_claims_list(char **out_json) {
    if (auto st = require(out_json != nullptr, "null argument")) return st;
    return guarded([&] {
        ordered_json arr = ordered_json::array();
        for (const auto &info : mdim::claim_registry()) {
            ordered_json j;
            j["id"] = info.id;
            j["title"] = info.title;
            j["family"] = info.family;
            j["slow"] = info.slow;
            arr.push_back(j);
        }
        *out_json = dup_string(arr.dump());
    });
}

mdim_status mdim_claims_run(const char *id, const char *params, uint64_t budget,
                            unsigned jobs, int include_slow, int with_timing,
                            char **out_jsonl, int *out_fail_count,
                            int *out_skip_count) {
    if (auto st = require(out_jsonl != nullptr, "null argument")) return st;
    return guarded([&] {
        mdim::claim_options opts;
        if (budget) opts.budget = budget;
        opts.jobs = jobs ? jobs : 1;
        opts.include_slow = include_slow != 0;

        std::map<std::string, long> overrides;
        if (params && *params) overrides = mdim::parse_params(params);

        auto reports =
            mdim::verify_claims(id ? id : "", overrides, opts);
        std::string lines;
        int fails = 0, skips = 0;
        for (const auto &rep : reports) {
            if (rep.verdict == "FAIL") ++fails;
            if (rep.verdict.rfind("SKIPPED", 0) == 0) ++skips;
            lines += report_json(rep, with_timing != 0).dump();
            lines += "\n";
        }
        *out_jsonl = dup_string(lines);
        if (out_fail_count) *out_fail_count = fails;
        if (out_skip_count) *out_skip_count = skips;
    });
}

} // extern "C"

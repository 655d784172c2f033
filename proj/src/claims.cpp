#include "claims.hpp"

#include <chrono>
#include <functional>

namespace mdim {

namespace {

using params_t = std::map<std::string, long>;

struct claim_ctx {
    params_t params;
    solve_options solver;
};

struct claim_def {
    claim_info info;
    params_t defaults;
    std::function<claim_report(const claim_ctx &)> run;
};

long P(const claim_ctx &c, const char *key) { return c.params.at(key); }

void need_odd(long n) {
    if (n < 3 || n % 2 == 0)
        fail(errc::bad_params, "claim needs odd n >= 3, got n=" + std::to_string(n));
}
void need_even(long n) {
    if (n < 4 || n % 2 != 0)
        fail(errc::bad_params, "claim needs even n >= 4, got n=" + std::to_string(n));
}
void need_copies(long m) {
    if (m < 2) fail(errc::bad_params, "claim needs m >= 2");
}

std::string cp_spec(const claim_ctx &c) {
    return "cp:n=" + std::to_string(P(c, "n")) + ",k=" + std::to_string(P(c, "k"));
}
std::string cpm_spec(long n, long k, long m) {
    return "cpm:n=" + std::to_string(n) + ",k=" + std::to_string(k) +
           ",m=" + std::to_string(m);
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string format_set(const graph &g, const vertex_set &q) {
    return "{" + join(labels_of(g, q), ", ") + "}";
}

std::string format_tuple(const representation &r) {
    std::vector<std::string> parts;
    parts.reserve(r.size());
    for (int x : r) parts.push_back(std::to_string(x));
    return "(" + join(parts, ", ") + ")";
}

std::string describe_violation(const graph &g, const distance_matrix &d,
                               set_kind kind, const vertex_set &q) {
    switch (kind) {
    case set_kind::resolving:
        if (auto v = find_resolving_violation(q, d))
            return "equal representations for (" + g.label(v->u) + ", " +
                   g.label(v->v) + ")";
        break;
    case set_kind::doubly:
        if (auto v = find_doubly_violation(q, d))
            return "violating pair (" + g.label(v->u) + ", " + g.label(v->v) +
                   "), lambda=" + std::to_string(v->lambda);
        break;
    case set_kind::strong:
        if (auto v = find_strong_violation(q, d))
            return "unresolved pair (" + g.label(v->u) + ", " + g.label(v->v) +
                   ")";
        break;
    }
    return "";
}

solve_result run_solver(set_kind kind, const graph &g, const distance_matrix &d,
                        const solve_options &opts) {
    switch (kind) {
    case set_kind::resolving: return min_resolving(g, d, opts);
    case set_kind::doubly: return min_doubly_resolving(g, d, opts);
    case set_kind::strong: return min_strong_resolving(g, d, opts);
    }
    fail(errc::internal, "bad kind");
}

claim_report solver_claim(const std::string &family_spec, set_kind kind,
                          long expected, const claim_ctx &c,
                          std::string note = "") {
    family_instance inst = build_family(family_spec);
    distance_matrix d = all_pairs_distances(inst.g);
    solve_result r = run_solver(kind, inst.g, d, c.solver);
    claim_report rep;
    rep.expected = std::to_string(expected);
    rep.note = std::move(note);
    if (!r.optimal) {
        rep.verdict = "SKIPPED(budget)";
        rep.computed = "<= " + std::to_string(r.size);
        return rep;
    }
    rep.computed = std::to_string(r.size);
    rep.detail = "witness " + format_set(inst.g, r.witness) + ", method " +
                 r.method;
    rep.verdict = static_cast<long>(r.size) == expected ? "PASS" : "FAIL";
    return rep;
}

// Every listed named set must satisfy (expect=true) or violate (expect=false)
// the predicate. Negative verdicts always carry a concrete violation.
claim_report witness_claim(const family_instance &inst,
                           const std::vector<std::string> &set_names,
                           set_kind kind, bool expect,
                           const std::string &expected_text) {
    distance_matrix d = all_pairs_distances(inst.g);
    claim_report rep;
    rep.expected = expected_text;
    std::vector<std::string> notes;
    for (const std::string &name : set_names) {
        vertex_set q = build_named_set(inst, name);
        bool holds = check_set(kind, q, d);
        if (holds != expect) {
            rep.verdict = "FAIL";
            rep.computed = name + " " + format_set(inst.g, q) +
                           (holds ? " satisfies " : " violates ") +
                           set_kind_name(kind);
            if (!holds) rep.detail = describe_violation(inst.g, d, kind, q);
            return rep;
        }
        if (!expect && rep.detail.empty())
            rep.detail = name + ": " + describe_violation(inst.g, d, kind, q);
    }
    rep.verdict = "PASS";
    rep.computed = expected_text;
    return rep;
}

// No valid set of any size in [lo..hi] exists.
claim_report absence_claim(const family_instance &inst, set_kind kind,
                           std::size_t lo, std::size_t hi, const claim_ctx &c,
                           const std::string &expected_text) {
    distance_matrix d = all_pairs_distances(inst.g);
    claim_report rep;
    rep.expected = expected_text;
    for (std::size_t k = lo; k <= hi; ++k) {
        level_scan scan = scan_size(kind, d, k, c.solver.budget, c.solver.jobs);
        if (scan.budget_exceeded) {
            rep.verdict = "SKIPPED(budget)";
            rep.computed = "size-" + std::to_string(k) + " scan unfinished";
            return rep;
        }
        if (scan.found) {
            rep.verdict = "FAIL";
            rep.computed = "found " + format_set(inst.g, vertex_set(scan.witness));
            return rep;
        }
    }
    rep.verdict = "PASS";
    rep.computed = expected_text;
    return rep;
}

std::vector<std::string> indexed_names(const std::string &base, long lo, long hi) {
    std::vector<std::string> out;
    for (long i = lo; i <= hi; ++i) out.push_back(base + std::to_string(i));
    return out;
}

// ---- golden tables ------------------------------------------------------
//
// Entries ordered by in-copy index t, then copy r. Two cells of the source
// for the (5,4,4) table are inconsistent with the graph itself: x11 and x16
// are adjacent (in-copy indices differ by n), which forces
// d(x11^3, x16^4) = 2 and d(x11^4, x16^4) = 1, while the printed tuples end
// in 4 and 3. kEx31Corrections holds the consistent values; the claim
// reports the substitution instead of silently adopting either side.

const char *const kEx31Printed[80] = {
    "(0, 2, 3, 6)", "(1, 3, 4, 5)", "(2, 4, 5, 4)", "(3, 5, 6, 3)",
    "(1, 1, 4, 7)", "(2, 2, 5, 6)", "(3, 3, 6, 5)", "(4, 4, 7, 4)",
    "(2, 0, 5, 8)", "(3, 1, 6, 7)", "(4, 2, 7, 6)", "(5, 3, 8, 5)",
    "(2, 1, 5, 8)", "(3, 2, 6, 7)", "(4, 3, 7, 6)", "(5, 4, 8, 5)",
    "(1, 2, 4, 7)", "(2, 3, 5, 6)", "(3, 4, 6, 5)", "(4, 5, 7, 4)",
    "(1, 3, 2, 5)", "(2, 4, 3, 4)", "(3, 5, 4, 3)", "(4, 6, 5, 2)",
    "(2, 2, 3, 6)", "(3, 3, 4, 5)", "(4, 4, 5, 4)", "(5, 5, 6, 3)",
    "(3, 1, 4, 7)", "(4, 2, 5, 6)", "(5, 3, 6, 5)", "(6, 4, 7, 4)",
    "(3, 2, 4, 7)", "(4, 3, 5, 6)", "(5, 4, 6, 5)", "(6, 5, 7, 4)",
    "(2, 3, 3, 6)", "(3, 4, 4, 5)", "(4, 5, 5, 4)", "(5, 6, 6, 3)",
    "(2, 4, 1, 4)", "(3, 5, 2, 3)", "(4, 6, 3, 4)", "(5, 7, 4, 3)",
    "(3, 3, 2, 5)", "(4, 4, 3, 4)", "(5, 5, 4, 3)", "(6, 6, 5, 2)",
    "(4, 2, 3, 6)", "(5, 3, 4, 5)", "(6, 4, 5, 4)", "(7, 5, 6, 3)",
    "(4, 3, 3, 6)", "(5, 4, 4, 5)", "(6, 5, 5, 4)", "(7, 6, 6, 3)",
    "(3, 4, 2, 5)", "(4, 5, 3, 4)", "(5, 6, 4, 3)", "(6, 7, 5, 2)",
    "(3, 5, 0, 3)", "(4, 6, 1, 2)", "(5, 7, 2, 1)", "(6, 8, 3, 0)",
    "(4, 4, 1, 4)", "(5, 5, 2, 3)", "(6, 6, 3, 2)", "(7, 7, 4, 1)",
    "(5, 3, 2, 5)", "(6, 4, 3, 4)", "(7, 5, 4, 3)", "(8, 6, 5, 2)",
    "(5, 4, 2, 5)", "(6, 5, 3, 4)", "(7, 6, 4, 3)", "(8, 7, 5, 2)",
    "(4, 5, 1, 4)", "(5, 6, 2, 3)", "(6, 7, 3, 2)", "(7, 8, 4, 1)",
};

struct table_fix {
    int index;
    const char *value;
};
const table_fix kEx31Corrections[] = {
    {42, "(4, 6, 3, 2)"}, // x11^3
    {43, "(5, 7, 4, 1)"}, // x11^4
};

const char *const kEx32Printed[48] = {
    "(0, 1, 2, 2, 5)", "(1, 2, 3, 3, 4)", "(2, 3, 4, 4, 3)", "(3, 4, 5, 5, 2)",
    "(1, 0, 1, 3, 6)", "(2, 1, 2, 4, 5)", "(3, 2, 3, 5, 4)", "(4, 3, 4, 6, 3)",
    "(2, 1, 0, 4, 7)", "(3, 2, 1, 5, 6)", "(4, 3, 2, 6, 5)", "(5, 4, 3, 7, 4)",
    "(1, 2, 1, 3, 6)", "(2, 3, 2, 4, 5)", "(3, 4, 3, 5, 4)", "(4, 5, 4, 6, 3)",
    "(1, 2, 3, 1, 4)", "(2, 3, 4, 2, 3)", "(3, 4, 5, 3, 2)", "(4, 5, 6, 4, 1)",
    "(2, 1, 2, 2, 5)", "(3, 2, 3, 3, 4)", "(4, 3, 4, 4, 3)", "(5, 4, 5, 5, 2)",
    "(3, 2, 1, 3, 6)", "(4, 3, 2, 4, 5)", "(5, 4, 3, 5, 4)", "(6, 5, 4, 6, 3)",
    "(2, 3, 2, 2, 5)", "(3, 4, 3, 3, 4)", "(4, 5, 4, 4, 3)", "(5, 6, 5, 5, 2)",
    "(2, 3, 4, 0, 3)", "(3, 4, 5, 1, 2)", "(4, 5, 6, 2, 1)", "(5, 6, 7, 3, 0)",
    "(3, 2, 3, 1, 4)", "(4, 3, 4, 2, 3)", "(5, 4, 5, 3, 2)", "(6, 5, 6, 4, 1)",
    "(4, 3, 2, 2, 5)", "(5, 4, 3, 3, 4)", "(6, 5, 4, 4, 3)", "(7, 6, 5, 5, 2)",
    "(3, 4, 3, 1, 4)", "(4, 5, 4, 2, 3)", "(5, 6, 5, 3, 2)", "(6, 7, 6, 4, 1)",
};

claim_report table_claim(const std::string &family_spec,
                         const std::string &set_name, const char *const *tuples,
                         std::size_t count, const table_fix *fixes,
                         std::size_t fix_count) {
    family_instance inst = build_family(family_spec);
    const layered_graph &lp = *inst.layered;

    std::vector<std::string> expected(tuples, tuples + count);
    std::string note;
    for (std::size_t i = 0; i < fix_count; ++i) {
        int at = fixes[i].index;
        std::size_t t = static_cast<std::size_t>(at) / lp.m() + 1;
        std::size_t r = static_cast<std::size_t>(at) % lp.m() + 1;
        if (!note.empty()) note += "; ";
        note += "x" + std::to_string(t) + "^" + std::to_string(r) +
                " printed as " + expected[at] + ", corrected to " +
                fixes[i].value + " (x" + std::to_string(t) + " and the layer-V" +
                std::to_string(lp.k()) + " anchor are adjacent)";
        expected[at] = fixes[i].value;
    }

    std::vector<std::string> expected_lines;
    expected_lines.reserve(count);
    std::size_t at = 0;
    for (std::size_t t = 1; t <= lp.n() * lp.k(); ++t)
        for (std::size_t r = 1; r <= lp.m(); ++r, ++at)
            expected_lines.push_back("r(" + inst.g.label(lp.at(t, r)) + "|" +
                                     set_name + ") = " + expected[at]);

    std::string table = emit_table(inst, set_name);
    std::vector<std::string> got;
    std::size_t start = 0;
    while (start < table.size()) {
        std::size_t nl = table.find('\n', start);
        got.push_back(table.substr(start, nl - start));
        start = nl == std::string::npos ? table.size() : nl + 1;
    }

    claim_report rep;
    rep.expected = std::to_string(count) + " tuples";
    rep.note = note;
    if (got.size() != expected_lines.size()) {
        rep.verdict = "FAIL";
        rep.computed = std::to_string(got.size()) + " rows";
        return rep;
    }
    std::size_t matched = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (got[i] == expected_lines[i]) {
            ++matched;
        } else if (rep.detail.empty()) {
            rep.detail = "first mismatch: computed '" + got[i] +
                         "', expected '" + expected_lines[i] + "'";
        }
    }
    rep.computed = std::to_string(matched) + " of " +
                   std::to_string(count) + " tuples match";
    rep.verdict = matched == count ? "PASS" : "FAIL";
    return rep;
}

// ---- registry ------------------------------------------------------------

std::vector<claim_def> build_registry() {
    std::vector<claim_def> defs;
    auto add = [&](std::string id, std::string title, std::string family,
                   params_t defaults, bool slow,
                   std::function<claim_report(const claim_ctx &)> run) {
        defs.push_back({{std::move(id), std::move(title), std::move(family), slow},
                        std::move(defaults),
                        std::move(run)});
    };

    // --- cycles and paths -------------------------------------------------
    add("Rem2.1-beta", "metric dimension of an even cycle is 2", "cycle:n=6",
        {{"n", 6}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::resolving, 2, c);
        });
    add("Rem2.1-psi", "minimum doubly resolving set of an even cycle is 3",
        "cycle:n=6", {{"n", 6}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::doubly, 3, c);
        });
    add("Rem2.1-sdim", "strong metric dimension of an even cycle is n/2",
        "cycle:n=6", {{"n", 6}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::strong, (P(c, "n") + 1) / 2, c);
        });
    add("Rem2.2-beta", "metric dimension of an odd cycle is 2", "cycle:n=5",
        {{"n", 5}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::resolving, 2, c);
        });
    add("Rem2.2-psi", "minimum doubly resolving set of an odd cycle is 2",
        "cycle:n=5", {{"n", 5}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::doubly, 2, c);
        });
    add("Rem2.2-sdim", "strong metric dimension of an odd cycle is ceil(n/2)",
        "cycle:n=5", {{"n", 5}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim("cycle:n=" + std::to_string(P(c, "n")),
                                set_kind::strong, (P(c, "n") + 1) / 2, c);
        });
    add("Rem2.3-beta", "metric dimension of a path is 1", "path:k=4",
        {{"n", 4}}, false, [](const claim_ctx &c) {
            return solver_claim("path:k=" + std::to_string(P(c, "n")),
                                set_kind::resolving, 1, c);
        });
    add("Rem2.3-psi", "minimum doubly resolving set of a path is 2", "path:k=4",
        {{"n", 4}}, false, [](const claim_ctx &c) {
            return solver_claim("path:k=" + std::to_string(P(c, "n")),
                                set_kind::doubly, 2, c);
        });

    // --- C_n x P_k ----------------------------------------------------------
    add("Thm2.1", "metric dimension of C_n x P_k is 2 for odd n", "cp:n=5,k=3",
        {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim(cp_spec(c), set_kind::resolving, 2, c);
        });
    add("Thm2.2", "metric dimension of C_n x P_k is 3 for even n", "cp:n=4,k=3",
        {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            return solver_claim(cp_spec(c), set_kind::resolving, 3, c);
        });
    add("Thm2.3", "strong metric dimension of C_n x P_k is n", "cp:n=4,k=3",
        {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            return solver_claim(cp_spec(c), set_kind::strong, P(c, "n"), c);
        });
    add("Thm3.1", "minimum doubly resolving set of C_n x P_k is 3 for odd n",
        "cp:n=5,k=3", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim(cp_spec(c), set_kind::doubly, 3, c);
        });
    add("Thm3.1-A", "every A_i doubly resolves C_n x P_k (odd n)",
        "cp:n=5,k=3", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, indexed_names("A", 1, (P(c, "n") + 1) / 2),
                                 set_kind::doubly, true, "all doubly resolving");
        });
    add("Thm3.1-B", "every B_j doubly resolves C_n x P_k (odd n)",
        "cp:n=5,k=3", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, indexed_names("B", 1, P(c, "n") / 2),
                                 set_kind::doubly, true, "all doubly resolving");
        });
    add("Thm3.1-M", "no M_i doubly resolves C_n x P_k (odd n)", "cp:n=5,k=3",
        {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            need_odd(n);
            family_instance inst = build_family(cp_spec(c));
            distance_matrix d = all_pairs_distances(inst.g);
            claim_report rep = witness_claim(
                inst, indexed_names("M", 1, (n + 1) / 2), set_kind::doubly,
                false, "none doubly resolving");
            if (rep.verdict != "PASS") return rep;
            // the quoted failure mode: the layer-V2/V3 vertices compatible
            // with x_i differ by the constant vector (-1, -1)
            const layered_graph &lp = *inst.layered;
            for (long i = 1; i <= (n + 1) / 2; ++i) {
                vertex_set m_i = build_named_set(inst, "M" + std::to_string(i));
                representation a = representation_of(lp.at(i + n), m_i, d);
                representation b = representation_of(lp.at(i + 2 * n), m_i, d);
                for (std::size_t t = 0; t < a.size(); ++t)
                    if (a[t] - b[t] != -1) {
                        rep.verdict = "FAIL";
                        rep.computed = "compatible pair of M" +
                                       std::to_string(i) +
                                       " does not differ by -1*(1,1)";
                        return rep;
                    }
            }
            return rep;
        });
    add("Thm3.1-N", "no N_j doubly resolves C_n x P_k (odd n)", "cp:n=5,k=3",
        {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, indexed_names("N", 1, P(c, "n") / 2),
                                 set_kind::doubly, false,
                                 "none doubly resolving");
        });
    add("Thm3.2", "metric dimension of (C_n x P_k) x P_2 is 3 for odd n",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), 2),
                                set_kind::resolving, 3, c);
        });
    add("Thm3.2-A1", "every copy-1 A_i resolves (C_n x P_k) x P_2",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cpm_spec(P(c, "n"), P(c, "k"), 2));
            return witness_claim(inst, indexed_names("A", 1, (P(c, "n") + 1) / 2),
                                 set_kind::resolving, true, "all resolving");
        });
    add("Lem3.1", "no 3-set doubly resolves (C_n x P_k) x P_2 (odd n)",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cpm_spec(P(c, "n"), P(c, "k"), 2));
            return absence_claim(inst, set_kind::doubly, 2, 3, c,
                                 "no doubly resolving set of size <= 3");
        });
    add("Lem3.1-A1", "no copy-1 A_i doubly resolves (C_n x P_k) x P_2",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cpm_spec(P(c, "n"), P(c, "k"), 2));
            return witness_claim(inst, indexed_names("A", 1, (P(c, "n") + 1) / 2),
                                 set_kind::doubly, false,
                                 "none doubly resolving");
        });
    add("Thm3.3", "minimum doubly resolving set of (C_n x P_k) x P_2 is 4",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), 2),
                                set_kind::doubly, 4, c);
        });
    add("Thm3.3-C", "every C_i doubly resolves (C_n x P_k) x P_2",
        "cpm:n=5,k=3,m=2", {{"n", 5}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            family_instance inst = build_family(cpm_spec(P(c, "n"), P(c, "k"), 2));
            return witness_claim(inst, indexed_names("C", 1, (P(c, "n") + 1) / 2),
                                 set_kind::doubly, true, "all doubly resolving");
        });
    for (long m : {2, 3, 4})
        add("Con3.1-m" + std::to_string(m),
            "minimum doubly resolving set of (C_n x P_k) x P_m is 4 (odd n)",
            cpm_spec(3, 3, m), {{"n", 3}, {"k", 3}}, false,
            [m](const claim_ctx &c) {
                need_odd(P(c, "n"));
                return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), m),
                                    set_kind::doubly, 4, c,
                                    "spot check of a statement for all m >= 2");
            });
    add("Con3.1-D", "every D_i doubly resolves (C_n x P_k) x P_m",
        "cpm:n=3,k=3,m=3", {{"n", 3}, {"k", 3}, {"m", 3}}, false,
        [](const claim_ctx &c) {
            need_odd(P(c, "n"));
            need_copies(P(c, "m"));
            family_instance inst =
                build_family(cpm_spec(P(c, "n"), P(c, "k"), P(c, "m")));
            return witness_claim(inst, indexed_names("D", 1, (P(c, "n") + 1) / 2),
                                 set_kind::doubly, true, "all doubly resolving");
        });
    add("Rem3.1", "no pair of vertices resolves C_n x P_k for even n",
        "cp:n=4,k=3", {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return absence_claim(inst, set_kind::resolving, 2, 2, c,
                                 "no resolving set of size 2");
        });
    add("Lem3.2", "minimum doubly resolving set of C_n x P_k is 4 for even n",
        "cp:n=4,k=3", {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            return solver_claim(cp_spec(c), set_kind::doubly, 4, c);
        });
    add("Lem3.2-E3", "E3 doubly resolves C_n x P_k (even n)", "cp:n=4,k=3",
        {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, {"E3"}, set_kind::doubly, true,
                                 "doubly resolving");
        });
    add("Lem3.2-E1", "E1 does not doubly resolve C_n x P_k (even n)",
        "cp:n=4,k=3", {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, {"E1"}, set_kind::doubly, false,
                                 "not doubly resolving");
        });
    add("Lem3.2-E2", "E2 does not doubly resolve C_n x P_k (even n)",
        "cp:n=4,k=3", {{"n", 4}, {"k", 3}}, false, [](const claim_ctx &c) {
            need_even(P(c, "n"));
            family_instance inst = build_family(cp_spec(c));
            return witness_claim(inst, {"E2"}, set_kind::doubly, false,
                                 "not doubly resolving");
        });
    for (long m : {2, 3, 4})
        add("Thm3.4-m" + std::to_string(m),
            "metric dimension of (C_n x P_k) x P_m is 4 (even n)",
            cpm_spec(4, 3, m), {{"n", 4}, {"k", 3}}, false,
            [m](const claim_ctx &c) {
                need_even(P(c, "n"));
                return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), m),
                                    set_kind::resolving, 4, c,
                                    "spot check of a statement for all m >= 2");
            });
    add("Thm3.4-E3", "copy-1 E3 resolves (C_n x P_k) x P_m (even n)",
        "cpm:n=4,k=3,m=2", {{"n", 4}, {"k", 3}, {"m", 2}}, false,
        [](const claim_ctx &c) {
            need_even(P(c, "n"));
            need_copies(P(c, "m"));
            family_instance inst =
                build_family(cpm_spec(P(c, "n"), P(c, "k"), P(c, "m")));
            return witness_claim(inst, {"E3"}, set_kind::resolving, true,
                                 "resolving");
        });
    for (long m : {2, 3, 4})
        add("Thm3.5-m" + std::to_string(m),
            "minimum doubly resolving set of (C_n x P_k) x P_m is 5 (even n)",
            cpm_spec(4, 3, m), {{"n", 4}, {"k", 3}}, false,
            [m](const claim_ctx &c) {
                need_even(P(c, "n"));
                return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), m),
                                    set_kind::doubly, 5, c,
                                    "spot check of a statement for all m >= 2");
            });
    add("Thm3.5-E4", "E4 doubly resolves (C_n x P_k) x P_m (even n)",
        "cpm:n=4,k=3,m=2", {{"n", 4}, {"k", 3}, {"m", 2}}, false,
        [](const claim_ctx &c) {
            need_even(P(c, "n"));
            need_copies(P(c, "m"));
            family_instance inst =
                build_family(cpm_spec(P(c, "n"), P(c, "k"), P(c, "m")));
            return witness_claim(inst, {"E4"}, set_kind::doubly, true,
                                 "doubly resolving");
        });
    add("Thm3.6", "strong metric dimension of (C_n x P_k) x P_m is 2n",
        "cpm:n=3,k=3,m=2", {{"n", 3}, {"k", 3}, {"m", 2}}, false,
        [](const claim_ctx &c) {
            need_copies(P(c, "m"));
            return solver_claim(cpm_spec(P(c, "n"), P(c, "k"), P(c, "m")),
                                set_kind::strong, 2 * P(c, "n"), c);
        });
    add("Thm3.6-T", "T strongly resolves (C_n x P_k) x P_m",
        "cpm:n=3,k=3,m=2", {{"n", 3}, {"k", 3}, {"m", 2}}, false,
        [](const claim_ctx &c) {
            need_copies(P(c, "m"));
            family_instance inst =
                build_family(cpm_spec(P(c, "n"), P(c, "k"), P(c, "m")));
            return witness_claim(inst, {"T"}, set_kind::strong, true,
                                 "strong resolving");
        });

    // --- H(n) ---------------------------------------------------------------
    add("Prop3.1", "every (n-1)-subset of the points doubly resolves H(n)",
        "h:n=5", {{"n", 5}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            family_instance inst = build_family("h:n=" + std::to_string(n));
            std::vector<std::string> names;
            for (long omit = 1; omit <= n; ++omit)
                names.push_back("R1:omit=" + std::to_string(omit));
            return witness_claim(inst, names, set_kind::doubly, true,
                                 "all " + std::to_string(n) +
                                     " subsets doubly resolving");
        });
    add("Prop3.2", "R2 resolves H(n) but never doubly", "h:n=5", {{"n", 5}},
        false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            family_instance inst = build_family("h:n=" + std::to_string(n));
            distance_matrix d = all_pairs_distances(inst.g);
            vertex_set r2 = build_named_set(inst, "R2");
            claim_report rep;
            rep.expected = "resolving, not doubly, violated by (v1, v" +
                           std::to_string(n) + ")";
            if (!is_resolving(r2, d)) {
                rep.verdict = "FAIL";
                rep.computed = "R2 is not even resolving";
                return rep;
            }
            auto bad = find_doubly_violation(r2, d);
            if (!bad) {
                rep.verdict = "FAIL";
                rep.computed = "R2 is doubly resolving";
                return rep;
            }
            const h_graph &hg = *inst.hg;
            bool is_v1_vn = bad->u == hg.point(1) &&
                            bad->v == hg.point(static_cast<std::size_t>(n));
            rep.computed = "resolving, violating pair (" + inst.g.label(bad->u) +
                           ", " + inst.g.label(bad->v) +
                           "), lambda=" + std::to_string(bad->lambda);
            rep.verdict = is_v1_vn ? "PASS" : "FAIL";
            return rep;
        });
    add("Thm3.7", "metric dimension of H(n) is n - n/3 when 3 | n", "h:n=6",
        {{"n", 6}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            if (n < 6 || n % 3 != 0)
                fail(errc::bad_params, "claim needs n >= 6 with 3 | n");
            return solver_claim("h:n=" + std::to_string(n),
                                set_kind::resolving, n - n / 3, c);
        });
    add("Thm3.7-P", "the paired-off set P resolves H(n)", "h:n=6", {{"n", 6}},
        false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            if (n < 6 || n % 3 != 0)
                fail(errc::bad_params, "claim needs n >= 6 with 3 | n");
            family_instance inst = build_family("h:n=" + std::to_string(n));
            return witness_claim(inst, {"P"}, set_kind::resolving, true,
                                 "resolving");
        });
    add("Thm3.7-n9", "metric dimension of H(9) is 6", "h:n=9", {{"n", 9}},
        true, [](const claim_ctx &c) {
            const long n = P(c, "n");
            if (n < 6 || n % 3 != 0)
                fail(errc::bad_params, "claim needs n >= 6 with 3 | n");
            return solver_claim("h:n=" + std::to_string(n),
                                set_kind::resolving, n - n / 3, c);
        });
    add("Cor3.1", "strict growth of the metric dimension after a 3-multiple",
        "h:n=6", {{"n", 6}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            if (n < 6 || n % 3 != 0)
                fail(errc::bad_params, "claim needs n >= 6 with 3 | n");
            const long k = n / 3;
            claim_report rep;
            rep.expected = "beta(H(" + std::to_string(n + 1) +
                           "))=" + std::to_string(2 * k + 1) + ", beta(H(" +
                           std::to_string(n + 2) +
                           "))=" + std::to_string(2 * k + 2);
            rep.note = "the only integers satisfying 2k < b1 < b2 <= 2k+2";
            family_instance h1 = build_family("h:n=" + std::to_string(n + 1));
            family_instance h2 = build_family("h:n=" + std::to_string(n + 2));
            distance_matrix d1 = all_pairs_distances(h1.g);
            distance_matrix d2 = all_pairs_distances(h2.g);
            solve_result b1 = min_resolving(h1.g, d1, c.solver);
            solve_result b2 = min_resolving(h2.g, d2, c.solver);
            if (!b1.optimal || !b2.optimal) {
                rep.verdict = "SKIPPED(budget)";
                return rep;
            }
            rep.computed = "beta(H(" + std::to_string(n + 1) +
                           "))=" + std::to_string(b1.size) + ", beta(H(" +
                           std::to_string(n + 2) +
                           "))=" + std::to_string(b2.size);
            bool chain = 2 * k < static_cast<long>(b1.size) &&
                         b1.size < b2.size &&
                         static_cast<long>(b2.size) <= 2 * (k + 1);
            bool forced = static_cast<long>(b1.size) == 2 * k + 1 &&
                          static_cast<long>(b2.size) == 2 * k + 2;
            rep.verdict = chain && forced ? "PASS" : "FAIL";
            return rep;
        });

    // --- L(n) ---------------------------------------------------------------
    add("Lem3.3-C2", "C2 = N(W_1) minus one vertex resolves L(n)", "l:n=5",
        {{"n", 5}}, false, [](const claim_ctx &c) {
            family_instance inst =
                build_family("l:n=" + std::to_string(P(c, "n")));
            return witness_claim(inst, {"C2"}, set_kind::resolving, true,
                                 "resolving");
        });
    add("Lem3.3-C1", "C1 = N(W_1) minus two vertices cannot resolve L(n)",
        "l:n=5", {{"n", 5}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            family_instance inst = build_family("l:n=" + std::to_string(n));
            distance_matrix d = all_pairs_distances(inst.g);
            const l_graph &lg = *inst.lg;
            vertex_set c1 = build_named_set(inst, "C1");
            claim_report rep;
            rep.expected = "{v1,v1v" + std::to_string(n - 1) + "} and {v1,v1v" +
                           std::to_string(n) + "} collide at (2, ..., 2)";
            if (is_resolving(c1, d)) {
                rep.verdict = "FAIL";
                rep.computed = "C1 resolves";
                return rep;
            }
            vertex a = lg.at(1, 1, static_cast<std::size_t>(n - 1));
            vertex b = lg.at(1, 1, static_cast<std::size_t>(n));
            representation ra = representation_of(a, c1, d);
            representation rb = representation_of(b, c1, d);
            bool all_two = ra == rb;
            for (int x : ra) all_two = all_two && x == 2;
            rep.computed = "r(" + inst.g.label(a) + "|C1) = " +
                           format_tuple(ra) + ", r(" + inst.g.label(b) +
                           "|C1) = " + format_tuple(rb);
            rep.verdict = all_two ? "PASS" : "FAIL";
            return rep;
        });
    add("Thm3.8", "metric dimension of L(n) is n - 2", "l:n=5", {{"n", 5}},
        false, [](const claim_ctx &c) {
            return solver_claim("l:n=" + std::to_string(P(c, "n")),
                                set_kind::resolving, P(c, "n") - 2, c);
        });
    add("Thm3.8-n6", "metric dimension of L(6) is 4", "l:n=6", {{"n", 6}},
        true, [](const claim_ctx &c) {
            return solver_claim("l:n=" + std::to_string(P(c, "n")),
                                set_kind::resolving, P(c, "n") - 2, c);
        });
    add("Lem3.4", "C2 cannot doubly resolve L(n)", "l:n=5", {{"n", 5}}, false,
        [](const claim_ctx &c) {
            const long n = P(c, "n");
            family_instance inst = build_family("l:n=" + std::to_string(n));
            distance_matrix d = all_pairs_distances(inst.g);
            const l_graph &lg = *inst.lg;
            vertex_set c2 = build_named_set(inst, "C2");
            claim_report rep;
            rep.expected = "not doubly resolving; ({v1,v1v" +
                           std::to_string(n) + "}, {v" + std::to_string(n) +
                           ",v1v" + std::to_string(n) + "}) differs by -1";
            if (is_doubly_resolving(c2, d)) {
                rep.verdict = "FAIL";
                rep.computed = "C2 is doubly resolving";
                return rep;
            }
            vertex u = lg.at(1, 1, static_cast<std::size_t>(n));
            vertex yn = lg.at(static_cast<std::size_t>(n), 1,
                              static_cast<std::size_t>(n));
            representation ru = representation_of(u, c2, d);
            representation ry = representation_of(yn, c2, d);
            bool constant = true;
            for (std::size_t i = 0; i < ru.size(); ++i)
                constant = constant && ru[i] == 2 && ry[i] == 3;
            rep.computed = "r(" + inst.g.label(u) + "|C2) = " +
                           format_tuple(ru) + ", r(" + inst.g.label(yn) +
                           "|C2) = " + format_tuple(ry);
            rep.verdict = constant ? "PASS" : "FAIL";
            return rep;
        });
    add("Thm3.9", "minimum doubly resolving set of L(n) is n - 1", "l:n=5",
        {{"n", 5}}, false, [](const claim_ctx &c) {
            return solver_claim("l:n=" + std::to_string(P(c, "n")),
                                set_kind::doubly, P(c, "n") - 1, c);
        });
    add("Thm3.9-C3", "C3 = N(W_1) doubly resolves L(n)", "l:n=5", {{"n", 5}},
        false, [](const claim_ctx &c) {
            family_instance inst =
                build_family("l:n=" + std::to_string(P(c, "n")));
            return witness_claim(inst, {"C3"}, set_kind::doubly, true,
                                 "doubly resolving");
        });
    add("Prop3.3", "N(W_r) cannot strongly resolve L(n)", "l:n=5", {{"n", 5}},
        false, [](const claim_ctx &c) {
            family_instance inst =
                build_family("l:n=" + std::to_string(P(c, "n")));
            return witness_claim(inst, {"C3"}, set_kind::strong, false,
                                 "not strong resolving");
        });
    add("Thm3.10", "strong metric dimension of L(n) is n(n-2)", "l:n=5",
        {{"n", 5}}, false, [](const claim_ctx &c) {
            const long n = P(c, "n");
            return solver_claim("l:n=" + std::to_string(n), set_kind::strong,
                                n * (n - 2), c);
        });

    // --- worked examples ----------------------------------------------------
    add("Ex3.1-table", "the 80 representation tuples of D1 on (C5 x P4) x P4",
        "cpm:n=5,k=4,m=4", {}, false, [](const claim_ctx &) {
            return table_claim("cpm:n=5,k=4,m=4", "D1", kEx31Printed, 80,
                               kEx31Corrections, 2);
        });
    add("Ex3.1-psi", "minimum doubly resolving set of (C5 x P4) x P4 is 4",
        "cpm:n=5,k=4,m=4", {}, false, [](const claim_ctx &c) {
            return solver_claim("cpm:n=5,k=4,m=4", set_kind::doubly, 4, c);
        });
    add("Ex3.2-table", "the 48 representation tuples of E on (C4 x P3) x P4",
        "cpm:n=4,k=3,m=4", {}, false, [](const claim_ctx &) {
            return table_claim("cpm:n=4,k=3,m=4", "E", kEx32Printed, 48,
                               nullptr, 0);
        });
    add("Ex3.2-psi", "minimum doubly resolving set of (C4 x P3) x P4 is 5",
        "cpm:n=4,k=3,m=4", {}, false, [](const claim_ctx &c) {
            return solver_claim(
                "cpm:n=4,k=3,m=4", set_kind::doubly, 5, c,
                "the source example's prose says 4 for its 5-element witness "
                "while the even-n stack statement says 5; the expected value "
                "follows the statement, and the exhaustive search decides");
        });
    add("Ex3.3", "P1 u P4 u P7 u P10 is a minimal resolving set of H(12)",
        "h:n=12", {}, false, [](const claim_ctx &) {
            family_instance inst = build_family("h:n=12");
            distance_matrix d = all_pairs_distances(inst.g);
            vertex_set p = build_named_set(inst, "P");
            claim_report rep;
            rep.expected = "resolving, and no proper subset resolves";
            if (!is_resolving(p, d)) {
                rep.verdict = "FAIL";
                rep.computed = "P does not resolve";
                return rep;
            }
            for (std::size_t skip = 0; skip < p.size(); ++skip) {
                std::vector<vertex> sub;
                for (std::size_t i = 0; i < p.size(); ++i)
                    if (i != skip) sub.push_back(p[i]);
                if (is_resolving(vertex_set(sub), d)) {
                    rep.verdict = "FAIL";
                    rep.computed = "still resolving without " +
                                   inst.g.label(p[skip]);
                    return rep;
                }
            }
            rep.verdict = "PASS";
            rep.computed = "resolving, minimal (8 one-element deletions fail)";
            return rep;
        });

    return defs;
}

const std::vector<claim_def> &registry() {
    static const std::vector<claim_def> defs = build_registry();
    return defs;
}

} // namespace

std::vector<claim_info> claim_registry() {
    std::vector<claim_info> out;
    out.reserve(registry().size());
    for (const auto &def : registry()) out.push_back(def.info);
    return out;
}

std::vector<claim_report>
verify_claims(const std::string &id_filter,
              const std::map<std::string, long> &overrides,
              const claim_options &opts) {
    std::vector<claim_report> out;
    bool matched = false;
    for (const auto &def : registry()) {
        const std::string &id = def.info.id;
        bool selected = id_filter.empty() || id == id_filter ||
                        id.rfind(id_filter + "-", 0) == 0;
        if (!selected) continue;
        matched = true;
        if (def.info.slow && !opts.include_slow && id_filter.empty()) continue;

        claim_ctx ctx;
        ctx.params = def.defaults;
        for (const auto &[key, value] : overrides) {
            if (!ctx.params.count(key))
                fail(errc::bad_params,
                     "claim " + id + " has no parameter '" + key + "'");
            ctx.params[key] = value;
        }
        ctx.solver.budget = opts.budget;
        ctx.solver.jobs = opts.jobs;

        auto t0 = std::chrono::steady_clock::now();
        claim_report rep = def.run(ctx);
        auto t1 = std::chrono::steady_clock::now();
        rep.id = id;
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.push_back(std::move(rep));
    }
    if (!matched)
        fail(errc::unknown_claim, "no claim matches id '" + id_filter + "'");
    return out;
}

std::string emit_table(const family_instance &inst,
                       const std::string &set_spec) {
    vertex_set q;
    std::string display;
    try {
        q = build_named_set(inst, set_spec);
        display = named_set_display(inst, set_spec);
    } catch (const error &named_err) {
        try {
            q = parse_vertex_set(inst, set_spec);
            display = "Q";
        } catch (const error &) {
            throw named_err;
        }
    }

    distance_matrix d = all_pairs_distances(inst.g);
    std::vector<vertex> order;
    order.reserve(inst.g.vertex_count());
    if (inst.layered) {
        const layered_graph &lp = *inst.layered;
        for (std::size_t t = 1; t <= lp.n() * lp.k(); ++t)
            for (std::size_t r = 1; r <= lp.m(); ++r)
                order.push_back(lp.at(t, r));
    } else {
        for (vertex v = 0; v < inst.g.vertex_count(); ++v) order.push_back(v);
    }

    std::string out;
    for (vertex v : order)
        out += "r(" + inst.g.label(v) + "|" + display + ") = " +
               format_tuple(representation_of(v, q, d)) + "\n";
    return out;
}

} // namespace mdim

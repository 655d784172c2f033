// mdim command line tool. All graph work goes through the shared library's C
// interface (mdim.h); this file only parses arguments and renders output.
//
// Exit codes: 0 success / all claims pass, 1 claim failed, 2 usage error,
// 3 budget exhausted before an exact answer.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdim.h"

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_claim_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

struct string_box {
    char *value = nullptr;
    ~string_box() { mdim_string_free(value); }
};

struct graph_box {
    mdim_graph *value = nullptr;
    ~graph_box() { mdim_graph_free(value); }
};

[[noreturn]] void die(mdim_status status) {
    std::cerr << "error: " << mdim_last_error() << " ("
              << mdim_status_name(status) << ")\n";
    std::exit(exit_usage);
}

void check_status(mdim_status status) {
    if (status != MDIM_OK) die(status);
}

mdim_graph *load_graph(const std::string &spec) {
    graph_box box;
    mdim_status st;
    if (spec.rfind("file:", 0) == 0)
        st = mdim_graph_from_file(spec.substr(5).c_str(), &box.value);
    else
        st = mdim_graph_build(spec.c_str(), &box.value);
    check_status(st);
    mdim_graph *out = box.value;
    box.value = nullptr;
    return out;
}

uint64_t default_budget_from_env() {
    const char *env = std::getenv("MDIM_BUDGET");
    if (!env || !*env) return 0;
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end) {
        std::cerr << "error: MDIM_BUDGET must be a positive integer\n";
        std::exit(exit_usage);
    }
    return static_cast<uint64_t>(v);
}

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        std::exit(exit_usage);
    }
    out << text;
}

std::string join(const json &labels, const char *sep) {
    std::string out;
    for (const auto &item : labels) {
        if (!out.empty()) out += sep;
        out += item.get<std::string>();
    }
    return out;
}

void print_solve_human(const json &j) {
    std::cout << j["kind"].get<std::string>() << " minimum on "
              << j["graph"].get<std::string>() << "\n";
    std::cout << "  size: " << j["size"] << "\n";
    std::cout << "  witness: {" << join(j["witness"], ", ") << "}\n";
    std::cout << "  method: " << j["method"].get<std::string>()
              << (j["certificate_checked"].get<bool>() ? ", certified" : "")
              << (j["optimal"].get<bool>() ? "" : ", NOT optimal (budget)")
              << "\n";
    std::cout << "  nodes explored: " << j["nodes_explored"] << "\n";
    if (j.contains("elapsed_ms"))
        std::cout << "  elapsed: " << j["elapsed_ms"].get<double>() << " ms\n";
}

void print_check_human(const json &j) {
    std::cout << j["kind"].get<std::string>() << " check of {"
              << join(j["set"], ", ") << "} on "
              << j["graph"].get<std::string>() << ": "
              << (j["holds"].get<bool>() ? "YES" : "NO") << "\n";
    if (j.contains("violation")) {
        const json &v = j["violation"];
        std::cout << "  violating pair (" << v["u"].get<std::string>() << ", "
                  << v["v"].get<std::string>() << ")";
        if (v.contains("lambda")) std::cout << ", lambda=" << v["lambda"];
        std::cout << " — " << v["reason"].get<std::string>() << "\n";
    }
}

void print_claims_human(const std::string &jsonl) {
    std::istringstream in(jsonl);
    std::string line;
    int pass = 0, fail = 0, skip = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::string verdict = j["verdict"].get<std::string>();
        if (verdict == "PASS")
            ++pass;
        else if (verdict == "FAIL")
            ++fail;
        else
            ++skip;
        std::printf("  [%-15s] %-12s expected %s, got %s\n",
                    verdict.c_str(), j["id"].get<std::string>().c_str(),
                    j["expected"].get<std::string>().c_str(),
                    j["computed"].get<std::string>().c_str());
        if (j.contains("detail"))
            std::printf("      %s\n", j["detail"].get<std::string>().c_str());
        if (j.contains("note"))
            std::printf("      note: %s\n", j["note"].get<std::string>().c_str());
    }
    std::printf("claims: %d pass, %d fail, %d skipped\n", pass, fail, skip);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact resolving, doubly resolving and strong resolving "
                 "computations on cylinder products, H(n) and L(n)"};
    app.require_subcommand(1);

    std::string graph_spec, kind = "resolving", set_literal, out_path = "-";
    std::string claim_id, claim_params, format = "json";
    uint64_t budget = default_budget_from_env();
    unsigned jobs = 1;
    bool no_timing = false, run_all = false, slow = false;

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "output format: json or human")
            ->check(CLI::IsMember({"json", "human"}));
        cmd->add_flag("--no-timing", no_timing,
                      "omit elapsed times for byte-stable output");
    };

    CLI::App *build = app.add_subcommand(
        "build", "construct a family graph and emit its edge list");
    build->add_option("--graph", graph_spec,
                      "family spec, e.g. cpm:n=5,k=4,m=4 or file:<path>")
        ->required();
    build->add_option("--out", out_path, "output path, - for stdout");

    CLI::App *check = app.add_subcommand(
        "check", "test whether a vertex set resolves a graph");
    check->add_option("--kind", kind, "resolving | doubly | strong")
        ->check(CLI::IsMember({"resolving", "doubly", "strong"}));
    check->add_option("--graph", graph_spec, "family spec or file:<path>")
        ->required();
    check->add_option("--set", set_literal,
                      "comma-separated members, e.g. x1,x3,x16:1,x16:4")
        ->required();
    add_format(check);

    CLI::App *solve = app.add_subcommand(
        "solve", "exact minimum resolving / doubly / strong resolving set");
    solve->add_option("--kind", kind, "resolving | doubly | strong")
        ->check(CLI::IsMember({"resolving", "doubly", "strong"}));
    solve->add_option("--graph", graph_spec, "family spec or file:<path>")
        ->required();
    solve->add_option("--budget", budget, "candidate-evaluation budget");
    solve->add_option("--jobs", jobs, "search workers (default 1)");
    add_format(solve);

    CLI::App *claims = app.add_subcommand(
        "claims", "machine-check the catalog of named claims");
    claims->add_flag("--all", run_all, "run the whole registry (default)");
    claims->add_option("--id", claim_id, "claim id or id prefix, e.g. Thm3.7");
    claims->add_option("--params", claim_params,
                       "parameter overrides, e.g. n=9 (needs --id)");
    claims->add_option("--budget", budget, "candidate-evaluation budget");
    claims->add_option("--jobs", jobs, "search workers forwarded to solvers");
    claims->add_flag("--slow", slow, "include slow claims");
    claims->add_option("--format", format,
                       "output format: json, human or both")
        ->check(CLI::IsMember({"json", "human", "both"}));
    claims->add_flag("--no-timing", no_timing,
                     "omit elapsed times for byte-stable output");

    CLI::App *table = app.add_subcommand(
        "table", "print the representation table of a named or literal set");
    table->add_option("--graph", graph_spec, "family spec or file:<path>")
        ->required();
    table->add_option("--set", set_literal, "set name (D1, E, T, C2, ...) or literal")
        ->required();
    table->add_option("--out", out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (build->parsed()) {
        graph_box g{load_graph(graph_spec)};
        string_box text;
        check_status(mdim_graph_to_edge_list(g.value, &text.value));
        write_output(text.value, out_path);
        return exit_ok;
    }

    if (check->parsed()) {
        graph_box g{load_graph(graph_spec)};
        string_box out;
        check_status(mdim_check(g.value, kind.c_str(), set_literal.c_str(),
                                no_timing ? 0 : 1, &out.value));
        if (format == "human")
            print_check_human(json::parse(out.value));
        else
            std::cout << out.value << "\n";
        return exit_ok;
    }

    if (solve->parsed()) {
        graph_box g{load_graph(graph_spec)};
        string_box out;
        check_status(mdim_solve(g.value, kind.c_str(), budget, jobs,
                                no_timing ? 0 : 1, &out.value));
        json j = json::parse(out.value);
        if (format == "human")
            print_solve_human(j);
        else
            std::cout << out.value << "\n";
        return j["optimal"].get<bool>() ? exit_ok : exit_budget;
    }

    if (claims->parsed()) {
        if (!claim_params.empty() && claim_id.empty()) {
            std::cerr << "error: --params needs --id\n";
            return exit_usage;
        }
        if (format == "json" && claims->count("--format") == 0) format = "both";
        string_box out;
        int fails = 0, skips = 0;
        check_status(mdim_claims_run(
            claim_id.empty() ? nullptr : claim_id.c_str(),
            claim_params.empty() ? nullptr : claim_params.c_str(), budget, jobs,
            slow ? 1 : 0, no_timing ? 0 : 1, &out.value, &fails, &skips));
        if (format == "json" || format == "both") std::cout << out.value;
        if (format == "human" || format == "both")
            print_claims_human(out.value);
        if (fails) return exit_claim_fail;
        if (skips) return exit_budget;
        return exit_ok;
    }

    if (table->parsed()) {
        graph_box g{load_graph(graph_spec)};
        string_box out;
        check_status(mdim_table(g.value, set_literal.c_str(), &out.value));
        write_output(out.value, out_path);
        return exit_ok;
    }

    return exit_usage;
}

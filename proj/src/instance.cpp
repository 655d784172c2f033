#include "instance.hpp"

#include <algorithm>

namespace mdim {

const char *family_kind_name(family_kind k) {
    switch (k) {
    case family_kind::cycle: return "cycle";
    case family_kind::path: return "path";
    case family_kind::cp: return "cp";
    case family_kind::cpm: return "cpm";
    case family_kind::h: return "h";
    case family_kind::l: return "l";
    case family_kind::file: return "file";
    }
    return "?";
}

namespace {

std::string trim(const std::string &s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

bool all_digits(const std::string &s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

long to_long(const std::string &s, const std::string &what) {
    if (!all_digits(s) || s.size() > 9)
        fail(errc::parse_error, "expected a small positive integer for " +
                                    what + ", got '" + s + "'");
    return std::stol(s);
}

long need(const std::map<std::string, long> &params, const std::string &key,
          const std::string &spec) {
    auto it = params.find(key);
    if (it == params.end())
        fail(errc::parse_error,
             "family spec '" + spec + "' is missing parameter " + key);
    return it->second;
}

void reject_unknown(const std::map<std::string, long> &params,
                    std::initializer_list<const char *> known,
                    const std::string &spec) {
    for (const auto &[key, value] : params) {
        (void)value;
        bool ok = false;
        for (const char *k : known) ok = ok || key == k;
        if (!ok)
            fail(errc::parse_error,
                 "family spec '" + spec + "' has unknown parameter " + key);
    }
}

} // namespace

std::map<std::string, long> parse_params(const std::string &text) {
    std::map<std::string, long> out;
    if (trim(text).empty()) return out;
    for (const std::string &item : split(text, ',')) {
        std::string kv = trim(item);
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(errc::parse_error, "expected key=value, got '" + kv + "'");
        std::string key = trim(kv.substr(0, eq));
        std::string val = trim(kv.substr(eq + 1));
        if (!out.emplace(key, to_long(val, key)).second)
            fail(errc::parse_error, "duplicate parameter " + key);
    }
    return out;
}

bool is_file_spec(const std::string &spec, std::string *path_out) {
    if (spec.rfind("file:", 0) != 0) return false;
    if (path_out) *path_out = spec.substr(5);
    return true;
}

family_instance build_family(const std::string &raw) {
    std::string spec = trim(raw);
    if (is_file_spec(spec))
        fail(errc::parse_error,
             "file: specs must be loaded by the caller, not built");
    std::size_t colon = spec.find(':');
    std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::map<std::string, long> params =
        parse_params(colon == std::string::npos ? "" : spec.substr(colon + 1));

    family_instance inst;
    if (name == "cycle") {
        reject_unknown(params, {"n"}, spec);
        long n = need(params, "n", spec);
        inst.family = family_kind::cycle;
        inst.g = build_cycle(static_cast<std::size_t>(n));
        inst.spec = "cycle:n=" + std::to_string(n);
    } else if (name == "path") {
        reject_unknown(params, {"k"}, spec);
        long k = need(params, "k", spec);
        inst.family = family_kind::path;
        inst.g = build_path(static_cast<std::size_t>(k));
        inst.spec = "path:k=" + std::to_string(k);
    } else if (name == "cp" || name == "cpm") {
        bool with_m = name == "cpm";
        if (with_m)
            reject_unknown(params, {"n", "k", "m"}, spec);
        else
            reject_unknown(params, {"n", "k"}, spec);
        long n = need(params, "n", spec);
        long k = need(params, "k", spec);
        long m = with_m ? need(params, "m", spec) : 1;
        inst.family = with_m ? family_kind::cpm : family_kind::cp;
        inst.layered.emplace(static_cast<std::size_t>(n),
                             static_cast<std::size_t>(k),
                             static_cast<std::size_t>(m));
        inst.g = inst.layered->g();
        inst.spec = name + ":n=" + std::to_string(n) + ",k=" + std::to_string(k);
        if (with_m) inst.spec += ",m=" + std::to_string(m);
    } else if (name == "h") {
        reject_unknown(params, {"n"}, spec);
        long n = need(params, "n", spec);
        inst.family = family_kind::h;
        inst.hg.emplace(static_cast<std::size_t>(n));
        inst.g = inst.hg->g();
        inst.spec = "h:n=" + std::to_string(n);
    } else if (name == "l") {
        reject_unknown(params, {"n"}, spec);
        long n = need(params, "n", spec);
        inst.family = family_kind::l;
        inst.lg.emplace(static_cast<std::size_t>(n));
        inst.g = inst.lg->g();
        inst.spec = "l:n=" + std::to_string(n);
    } else {
        fail(errc::parse_error,
             "unknown family '" + name +
                 "' (expected cycle, path, cp, cpm, h, l or file:<path>)");
    }
    return inst;
}

family_instance family_from_text(const std::string &edge_list_text,
                                 const std::string &spec) {
    family_instance inst;
    inst.family = family_kind::file;
    inst.g = read_edge_list(edge_list_text);
    inst.spec = spec;
    return inst;
}

vertex parse_member(const family_instance &inst, const std::string &raw) {
    std::string tok = trim(raw);
    if (tok.empty()) fail(errc::parse_error, "empty set member");

    if (auto v = inst.g.find_label(tok)) return *v;

    if (tok[0] == '@' && all_digits(tok.substr(1))) {
        long idx = to_long(tok.substr(1), "vertex index");
        if (idx < 0 || static_cast<std::size_t>(idx) >= inst.g.vertex_count())
            fail(errc::index_error, "vertex index " + tok + " out of range");
        return static_cast<vertex>(idx);
    }

    // x<t>:<r> and x<t>^<r> address copy r of a stacked product; bare x<t>
    // falls back to copy 1 when the plain label does not exist.
    if (tok[0] == 'x') {
        std::string rest = tok.substr(1);
        std::size_t sep = rest.find_first_of(":^");
        std::string t_part = sep == std::string::npos ? rest : rest.substr(0, sep);
        std::string r_part = sep == std::string::npos ? "" : rest.substr(sep + 1);
        if (all_digits(t_part) && (r_part.empty() || all_digits(r_part))) {
            std::string label = "x" + t_part + "^" +
                                (r_part.empty() ? "1" : r_part);
            if (auto v = inst.g.find_label(label)) return *v;
        }
    }

    // w<r>:<i>.<j> names the L(n) vertex {v_r, v_i v_j}
    if (tok[0] == 'w' && inst.lg) {
        std::size_t colon = tok.find(':');
        std::size_t dot = tok.find('.', colon == std::string::npos ? 0 : colon);
        if (colon != std::string::npos && dot != std::string::npos) {
            std::string r_part = tok.substr(1, colon - 1);
            std::string i_part = tok.substr(colon + 1, dot - colon - 1);
            std::string j_part = tok.substr(dot + 1);
            if (all_digits(r_part) && all_digits(i_part) && all_digits(j_part))
                return inst.lg->at(
                    static_cast<std::size_t>(to_long(r_part, "clique index")),
                    static_cast<std::size_t>(to_long(i_part, "pair index")),
                    static_cast<std::size_t>(to_long(j_part, "pair index")));
        }
    }

    fail(errc::parse_error, "unknown vertex '" + tok + "' on " + inst.spec);
}

vertex_set parse_vertex_set(const family_instance &inst,
                            const std::string &literal) {
    if (trim(literal).empty())
        fail(errc::parse_error, "empty set literal");
    std::vector<vertex> members;
    for (const std::string &tok : split(literal, ','))
        members.push_back(parse_member(inst, tok));
    auto sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(errc::parse_error, "set literal repeats a vertex");
    return vertex_set(std::move(members));
}

} // namespace mdim

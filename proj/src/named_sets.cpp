#include "named_sets.hpp"

#include <algorithm>

namespace mdim {

namespace {

struct set_name {
    std::string base;    // letters, plus the digits that belong to the name
    std::optional<long> index;
    std::map<std::string, long> params;
};

set_name parse_set_name(const family_instance &inst, const std::string &spec) {
    std::string text = spec;
    set_name out;
    std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        out.params = parse_params(text.substr(colon + 1));
        text = text.substr(0, colon);
    }
    if (text.empty()) fail(errc::bad_params, "empty set name");

    std::size_t digits = text.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(text[digits - 1])))
        --digits;
    std::string letters = text.substr(0, digits);
    std::string tail = text.substr(digits);

    // families where the digit is part of the set's name, not an index
    bool digit_is_name =
        (inst.lg && letters == "C") ||
        (inst.hg && letters == "R") ||
        (inst.layered && letters == "E");
    if (digit_is_name || tail.empty()) {
        out.base = text;
    } else {
        out.base = letters;
        out.index = std::stol(tail);
    }

    auto take = [&](const char *key) {
        auto it = out.params.find(key);
        if (it == out.params.end()) return;
        if (out.index && *out.index != it->second)
            fail(errc::bad_params, "conflicting indices in '" + spec + "'");
        out.index = it->second;
        out.params.erase(it);
    };
    take("i");
    take("j");
    return out;
}

long take_param(std::map<std::string, long> &params, const std::string &key,
                long fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    long v = it->second;
    params.erase(it);
    return v;
}

void reject_leftovers(const std::map<std::string, long> &params,
                      const std::string &spec) {
    if (!params.empty())
        fail(errc::bad_params, "unknown parameter '" + params.begin()->first +
                                   "' for set " + spec);
}

long need_index(const set_name &name, const std::string &spec) {
    if (!name.index)
        fail(errc::bad_params, "set " + spec + " needs an index");
    return *name.index;
}

vertex_set layered_set(const layered_graph &lp, set_name name,
                       const std::string &spec) {
    const long n = static_cast<long>(lp.n());
    const long k = static_cast<long>(lp.k());
    const long m = static_cast<long>(lp.m());
    const long half_up = (n + 1) / 2;
    reject_leftovers(name.params, spec);

    auto odd_only = [&] {
        if (n % 2 == 0)
            fail(errc::bad_params, "set " + name.base + " is defined for odd n");
    };
    auto even_only = [&] {
        if (n % 2 != 0)
            fail(errc::bad_params, "set " + name.base + " is defined for even n");
    };
    auto copies_needed = [&](long want) {
        if (m < want)
            fail(errc::bad_params,
                 "set " + name.base + " needs m >= " + std::to_string(want));
    };
    auto single_copy = [&] {
        if (m != 1)
            fail(errc::bad_params, "set " + name.base +
                                       " is defined on the single-copy product");
    };
    auto range = [&](long idx, long hi, const char *what) {
        if (idx < 1 || idx > hi)
            fail(errc::bad_params, std::string(what) + " index " +
                                       std::to_string(idx) +
                                       " out of range [1.." +
                                       std::to_string(hi) + "]");
    };

    // x_c: the layer-V_k vertex compatible with x_base (same cycle position)
    auto top_compatible = [&](long base) { return (k - 1) * n + base; };

    std::vector<vertex> v;
    if (name.base == "M" || name.base == "A" || name.base == "C" ||
        name.base == "D") {
        odd_only();
        long i = need_index(name, spec);
        range(i, half_up, "M/A/C/D");
        if (name.base == "M") single_copy();
        v.push_back(lp.at(i));
        v.push_back(lp.at(half_up + i - 1));
        if (name.base != "M") v.push_back(lp.at(top_compatible(i)));
        if (name.base == "C") {
            copies_needed(2);
            v.push_back(lp.at(top_compatible(i), 2));
        } else if (name.base == "D") {
            copies_needed(2);
            v.push_back(lp.at(top_compatible(i), m));
        }
    } else if (name.base == "N" || name.base == "B") {
        odd_only();
        long j = need_index(name, spec);
        range(j, n / 2, "N/B");
        if (name.base == "N") single_copy();
        v.push_back(lp.at(j));
        v.push_back(lp.at(half_up + j));
        if (name.base == "B") v.push_back(lp.at(top_compatible(j)));
    } else if (name.base == "E1") {
        even_only();
        single_copy();
        v = {lp.at(1), lp.at(2), lp.at(top_compatible(1))};
    } else if (name.base == "E2") {
        even_only();
        single_copy();
        v = {lp.at(1), lp.at(n / 2), lp.at(n / 2 + 1)};
    } else if (name.base == "E3" || name.base == "E4" || name.base == "E") {
        even_only();
        v = {lp.at(1), lp.at(n / 2), lp.at(n / 2 + 1),
             lp.at(top_compatible(1))};
        if (name.base != "E3") {
            copies_needed(2);
            v.push_back(lp.at(top_compatible(1), m));
        }
    } else if (name.base == "T") {
        copies_needed(2);
        for (long q = 1; q <= n; ++q) v.push_back(lp.at(q, 1));
        for (long q = 1; q <= n; ++q) v.push_back(lp.at(q, m));
    } else {
        fail(errc::bad_params, "unknown set '" + spec + "' for " +
                                   std::string("this product family"));
    }
    return vertex_set(std::move(v));
}

vertex_set h_set(const h_graph &hg, set_name name, const std::string &spec) {
    const long n = static_cast<long>(hg.n());
    std::vector<vertex> v;
    if (name.base == "R1") {
        long omit = take_param(name.params, "omit", n);
        reject_leftovers(name.params, spec);
        if (omit < 1 || omit > n)
            fail(errc::bad_params, "omit index out of range");
        for (long r = 1; r <= n; ++r)
            if (r != omit) v.push_back(hg.point(r));
    } else if (name.base == "R2") {
        reject_leftovers(name.params, spec);
        for (long j = 2; j <= n - 1; ++j) v.push_back(hg.pair(1, j));
    } else if (name.base == "P") {
        reject_leftovers(name.params, spec);
        if (name.index) {
            long i = *name.index;
            if (i < 1 || i > n - 2)
                fail(errc::bad_params, "P index out of range [1.." +
                                           std::to_string(n - 2) + "]");
            v.push_back(hg.pair(i, i + 1));
            v.push_back(hg.pair(i, i + 2));
        } else {
            if (n % 3 != 0)
                fail(errc::bad_params, "set P needs 3 | n");
            for (long t = 1; t <= n / 3; ++t) {
                long i = 3 * t - 2;
                v.push_back(hg.pair(i, i + 1));
                v.push_back(hg.pair(i, i + 2));
            }
        }
    } else {
        fail(errc::bad_params, "unknown set '" + spec + "' for H(n)");
    }
    return vertex_set(std::move(v));
}

vertex_set l_set(const l_graph &lg, set_name name, const std::string &spec) {
    long r = take_param(name.params, "r", 1);
    reject_leftovers(name.params, spec);
    if (r < 1 || r > static_cast<long>(lg.n()))
        fail(errc::bad_clique_index, "clique index out of range");
    long drop = 0;
    if (name.base == "C3")
        drop = 0;
    else if (name.base == "C2")
        drop = 1;
    else if (name.base == "C1")
        drop = 2;
    else
        fail(errc::bad_params, "unknown set '" + spec + "' for L(n)");
    vertex_set nb = lg.clique_neighborhood(static_cast<std::size_t>(r));
    std::vector<vertex> v(nb.members().begin(), nb.members().end() - drop);
    return vertex_set(std::move(v));
}

} // namespace

vertex_set build_named_set(const family_instance &inst,
                           const std::string &set_spec) {
    set_name name = parse_set_name(inst, set_spec);
    if (inst.layered) return layered_set(*inst.layered, std::move(name), set_spec);
    if (inst.hg) return h_set(*inst.hg, std::move(name), set_spec);
    if (inst.lg) return l_set(*inst.lg, std::move(name), set_spec);
    fail(errc::bad_params,
         "named sets need a family-built graph, got " + inst.spec);
}

std::string named_set_display(const family_instance &inst,
                              const std::string &set_spec) {
    set_name name = parse_set_name(inst, set_spec);
    std::string out = name.base;
    if (name.index) out += std::to_string(*name.index);
    return out;
}

} // namespace mdim

#pragma once

#include <map>
#include <optional>
#include <string>

#include "families.hpp"

namespace mdim {

enum class family_kind { cycle, path, cp, cpm, h, l, file };

const char *family_kind_name(family_kind k);

// A constructed graph together with the family labeling it came from, so set
// literals and named witness sets can be resolved against it.
struct family_instance {
    family_kind family = family_kind::file;
    std::string spec; // normalized, e.g. "cpm:n=5,k=4,m=4"
    graph g;
    std::optional<layered_graph> layered; // cp / cpm
    std::optional<h_graph> hg;            // h
    std::optional<l_graph> lg;            // l
};

// Family specs: cycle:n=7 | path:k=3 | cp:n=5,k=3 | cpm:n=5,k=4,m=4 |
// h:n=6 | l:n=5. "file:" specs are not built here; the caller loads the
// edge list and wraps it with family_from_text.
family_instance build_family(const std::string &spec);

family_instance family_from_text(const std::string &edge_list_text,
                                 const std::string &spec);

bool is_file_spec(const std::string &spec, std::string *path_out = nullptr);

// Comma-separated member tokens; see parse_member for the grammar.
vertex_set parse_vertex_set(const family_instance &inst,
                            const std::string &literal);

// One member token: exact label | @<index> | x<t> | x<t>:<r> | x<t>^<r> |
// v<i> | v<i>v<j> | w<r>:<i>.<j>
vertex parse_member(const family_instance &inst, const std::string &token);

std::map<std::string, long> parse_params(const std::string &text);

} // namespace mdim

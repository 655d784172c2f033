#pragma once

#include <map>

#include "named_sets.hpp"
#include "solve.hpp"

namespace mdim {

struct claim_options {
    std::uint64_t budget = default_budget;
    unsigned jobs = 1;
    bool include_slow = false;
};

struct claim_info {
    std::string id;
    std::string title;
    std::string family;
    bool slow = false;
};

struct claim_report {
    std::string id;
    std::string verdict; // PASS | FAIL | SKIPPED(budget)
    std::string expected;
    std::string computed;
    std::string detail;
    std::string note;
    double elapsed_ms = 0.0;
};

std::vector<claim_info> claim_registry();

// id_filter: empty selects the whole registry, otherwise an exact id or a
// dash-separated prefix ("Thm3.1" selects "Thm3.1" and "Thm3.1-A" but not
// "Thm3.10"). Overrides replace the selected claims' default parameters.
std::vector<claim_report>
verify_claims(const std::string &id_filter,
              const std::map<std::string, long> &overrides,
              const claim_options &opts);

// Representation table, one line "r(<label>|<SET>) = (…)" per vertex; stacked
// products are ordered by in-copy index, then copy. The set may be a catalog
// name or a set literal.
std::string emit_table(const family_instance &inst, const std::string &set_spec);

} // namespace mdim

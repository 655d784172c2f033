#pragma once

#include <stdexcept>
#include <string>

namespace mdim {

enum class errc {
    bad_parameter,
    parse_error,
    index_error,
    self_loop,
    duplicate_edge,
    disconnected,
    empty_set,
    set_too_small,
    not_a_bijection,
    different_copies,
    bad_clique_index,
    bad_params,
    unknown_claim,
    io_error,
    internal,
};

const char *errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string &message)
        : std::runtime_error(message), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &message) {
    throw error(code, message);
}

} // namespace mdim

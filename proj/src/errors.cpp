#include "errors.hpp"

namespace mdim {

const char *errc_name(errc c) noexcept {
    switch (c) {
    case errc::bad_parameter: return "BadParameter";
    case errc::parse_error: return "ParseError";
    case errc::index_error: return "IndexError";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "DisconnectedGraph";
    case errc::empty_set: return "EmptySet";
    case errc::set_too_small: return "SetTooSmall";
    case errc::not_a_bijection: return "NotABijection";
    case errc::different_copies: return "DifferentCopies";
    case errc::bad_clique_index: return "BadCliqueIndex";
    case errc::bad_params: return "BadParams";
    case errc::unknown_claim: return "UnknownClaim";
    case errc::io_error: return "IoError";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace mdim

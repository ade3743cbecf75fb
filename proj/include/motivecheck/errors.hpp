#pragma once

#include <stdexcept>
#include <string>

namespace motivecheck {

enum class errc {
    non_prime,
    char_two,
    no_irreducible_found,
    degenerate_algebra,
    dimension_mismatch,
    negative_twist,
    twist_out_of_range,
    rank_too_small,
    not_split,
    degenerate_point,
    unresolved_atom,
    bound_exceeded,
    invalid_argument,
    arithmetic_overflow,
    internal_check_failed,
};

const char* errc_name(errc c);

/// Error with a stable code so callers (and the CLI exit-code mapping)
/// can dispatch without parsing messages.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace motivecheck

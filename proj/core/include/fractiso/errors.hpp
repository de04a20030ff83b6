#pragma once

#include <stdexcept>
#include <string>

namespace fractiso {

enum class errc {
    non_positive_mass,
    masses_not_one,
    value_out_of_range,
    asymmetric_declared_symmetric,
    empty_graph,
    dimension_mismatch,
    not_invariant,
    inconsistent_didm,
    budget_exceeded,
    not_a_tree,
    too_large,
    malformed_expression,
    asymmetric_kernel,
    q_out_of_range,
    parse_error,
    duplicate_edge,
    loop_edge,
    base_mismatch,
    limit_exceeded,
};

const char* errc_name(errc code) noexcept;

/// Domain error carrying a machine-checkable code next to the human message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace fractiso

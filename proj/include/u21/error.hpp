#pragma once

#include <stdexcept>
#include <string>

namespace u21 {

enum class Errc {
    invalid_argument = 1,
    not_regular,
    not_compact_dominant,
    no_case_match,
    boundary_parameter,
    no_pattern_match,
    invalid_c,
    non_convergent,
    pole_at_one,
    invalid_params,
    non_integral_exponent,
    degree_cap,
    invalid_n,
    parse_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace u21

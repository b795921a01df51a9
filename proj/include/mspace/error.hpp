#pragma once

#include <stdexcept>
#include <string>

namespace mspace {

// Every failure mode the library reports. CLI output and tests match on
// the code, not on message text.
enum class errc {
    mixed_fields,
    dimension_mismatch,
    singular_matrix,
    zero_vector,
    infinite_field,
    guardrail_exceeded,
    size_limit_exceeded,
    degenerate_form,
    even_characteristic,
    not_alternate,
    singular_witness,
    isotropic_form,
    not_a_flag,
    not_p_alt_form,
    classification_failed,
    char_two_unsupported,
    no_invertible_element,
    parse_error,
    value_out_of_field,
    division_by_zero,
    bad_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace mspace

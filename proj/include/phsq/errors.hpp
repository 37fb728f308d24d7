#pragma once

#include <stdexcept>
#include <string>

namespace phsq {

// Machine-readable error codes; the CLI prints them as `error[<name>]: ...`.
enum class errc {
    malformed_simplex,
    duplicate_simplex,
    not_closed,
    not_member,
    not_subset,
    unsupported_cochain,
    invalid_k,
    length_mismatch,
    degree_mismatch,
    mixed_degrees,
    missing_degree,
    not_cocycle,
    parse_error,
    stage_out_of_range,
    query_out_of_range,
    solve_failed,
    inconsistent_input,
};

const char* errc_name(errc code);

// Rejected input: bad files, invalid queries, violated preconditions. CLI exit 1.
class input_error : public std::runtime_error {
public:
    input_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// A guarantee the library itself is responsible for did not hold. CLI exit 2.
class internal_error : public std::runtime_error {
public:
    internal_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace phsq

#pragma once

#include <stdexcept>
#include <string>

namespace rcm {

enum class ErrorCode {
    malformed_document,
    index_out_of_range,
    zero_state,
    dim_too_small,
    length_mismatch,
    zero_scalar,
    bad_l,
    kind_mismatch,
    empty_matrix,
    not_rank_one,
    bad_block,
    wrong_system,
    dim_mismatch,
    not_invertible,
    unknown_system,
    internal,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception; `code` gives a
// stable identity for callers that map errors to exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace rcm

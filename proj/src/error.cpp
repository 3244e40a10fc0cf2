#include "rcm/error.hpp"

namespace rcm {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::malformed_document: return "MALFORMED_DOCUMENT";
    case ErrorCode::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::zero_state: return "ZERO_STATE";
    case ErrorCode::dim_too_small: return "DIM_TOO_SMALL";
    case ErrorCode::length_mismatch: return "LENGTH_MISMATCH";
    case ErrorCode::zero_scalar: return "ZERO_SCALAR";
    case ErrorCode::bad_l: return "BAD_L";
    case ErrorCode::kind_mismatch: return "KIND_MISMATCH";
    case ErrorCode::empty_matrix: return "EMPTY_MATRIX";
    case ErrorCode::not_rank_one: return "NOT_RANK_ONE";
    case ErrorCode::bad_block: return "BAD_BLOCK";
    case ErrorCode::wrong_system: return "WRONG_SYSTEM";
    case ErrorCode::dim_mismatch: return "DIM_MISMATCH";
    case ErrorCode::not_invertible: return "NOT_INVERTIBLE";
    case ErrorCode::unknown_system: return "UNKNOWN_SYSTEM";
    case ErrorCode::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

} // namespace rcm

#pragma once

#include <string>

#include "rcm/state.hpp"

namespace rcm {

// State document format:
//   { "dims": [2,2,2,8],
//     "terms": [ {"index": [0,0,0,0], "amp": "1"},
//                {"index": [1,1,1,2], "amp": "1/sqrt(2)"} ] }
// `amp` is a token (integer, `p/q`, decimal, `±a/sqrt(b)`) or an object
// {"re": token, "im": token}. Duplicate indices are rejected. Integer and
// `p/q` tokens yield exact amplitudes; decimal and sqrt tokens numeric; a mix
// promotes the whole state to numeric.
PureState parse_state(const std::string& document);

PureState load_state_file(const std::string& path);

// Round-trips exactly for exact states: parse(serialize(s)) == s.
std::string serialize_state(const PureState& state);

} // namespace rcm

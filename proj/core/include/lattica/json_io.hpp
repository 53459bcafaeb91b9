#pragma once

#include <string>

#include "lattica/involution.hpp"

namespace lattica {

struct JsonError : Error {
    using Error::Error;
};

// Document form of one structure:
//   {"n": 4, "covers": [[0,1],[0,2],[1,3],[2,3]],
//    "labels": [...]?, "involution": [...]?, "brouwer": [...]?}
// Fields are emitted in that order, covers sorted lexicographically, with
// two-space indentation and a trailing newline, so equal structures always
// serialize byte for byte identically.
std::string to_json(const Structure& s);

// Inverse of to_json. Field order is free on input; unknown fields are
// rejected (JsonError), as is "brouwer" without "involution". The maps are
// validated like any other construction input.
Structure load_json(const std::string& text);

}  // namespace lattica

#pragma once

// Structured (JSON) form of terms:
//
//   {"op": "zero"} | {"op": "one"} | {"op": "var", "name": "x"}
//   {"op": "add" | "mul" | "div", "children": [lhs, rhs]}
//   {"op": "neg" | "inv", "children": [arg]}

#include <string>
#include <string_view>

#include "meadow/term.hpp"

namespace meadow {

/// Compact JSON text.
std::string serialize(const Term& t);

/// Throws SchemaError on malformed JSON, unknown op tags, wrong arity, or
/// invalid variable names.
Term deserialize(std::string_view text);

}  // namespace meadow

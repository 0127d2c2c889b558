#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

// Bad user-facing input: malformed graph6, property syntax, spec files, ...
// Maps to CLI exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented size cap was exceeded (order bound, subset-expansion bound,
// brute-force bound). Maps to CLI exit code 2.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contracting or extracting a loop is rejected rather than silently
// reinterpreted; the recursion engines never request it.
struct LoopEdgeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace gpoly

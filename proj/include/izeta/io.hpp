/*
 * io.hpp
 * ------
 * Structured-text serialization of resolution data.  The format is
 * line-oriented with a versioned header; saving and loading are exact
 * inverses of each other.  See the repository README for the grammar.
 */
#pragma once

#include <string>

#include "izeta/strata.hpp"

namespace izeta {

// Render `res` in the versioned structured-text format.  Component ids
// containing whitespace cannot be represented (InputError).
std::string save_resolution(const ResolutionData& res);

// Parse the structured-text format.  Malformed input raises ParseError
// with the offending line number; structurally valid input that breaks
// the resolution invariants (positivity of N and nu, id resolution,
// class additivity) raises InvariantViolation.
ResolutionData load_resolution(const std::string& text);

// Convenience wrappers reading from / writing to a file path.
ResolutionData load_resolution_file(const std::string& path);
void save_resolution_file(const ResolutionData& res, const std::string& path);

}  // namespace izeta

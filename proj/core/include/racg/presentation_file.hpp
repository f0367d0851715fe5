#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "racg/presentation.hpp"

namespace racg {

// Text format, one declaration per line, '#' starts a comment:
//
//   generators: a b c d
//   commuting_pairs: a c, a d, b c, b d
//
// Generator order on the first line is the total order used by normal forms.
// Any pair not listed generates an infinite dihedral group.  Errors are
// ParseError (with 1-based line and column) or UnknownGeneratorError.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

// Canonical form: generators in order, pairs sorted by generator order.
std::string serialize_presentation(const Presentation& p);

// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string presentation_digest(const Presentation& p);

}  // namespace racg

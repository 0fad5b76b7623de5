#pragma once

#include <string_view>

#include "etagap/group.hpp"

namespace etagap {

/// Evaluates a generator word left to right.
///
///   word := term ("*" term)*
///   term := "e" | gen ("^" signed-int)?
///   gen  := "g" index      (index into the generator list)
///
/// Blanks between tokens are ignored. Throws parse-error (with the byte
/// offset) or unknown-generator.
Element parse_element_word(const Group& g, std::string_view word);

}  // namespace etagap

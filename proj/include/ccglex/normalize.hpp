#pragma once

#include <string>
#include <string_view>

namespace ccglex {

/// Word normalization applied uniformly to corpus tokens and lexicon
/// surfaces: ASCII lowercase, leading/trailing punctuation stripped,
/// internal characters (hyphens, digits) kept. May return an empty
/// string for punctuation-only input.
std::string normalize_word(std::string_view word);

} // namespace ccglex

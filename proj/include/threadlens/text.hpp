#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace threadlens {

/// Lowercases ASCII letters, drops ASCII punctuation and collapses runs of
/// whitespace to one space. Bytes outside ASCII pass through untouched.
std::string normalize_text(std::string_view text);

/// Whitespace-separated words of normalize_text(text).
std::vector<std::string> words(std::string_view text);

}  // namespace threadlens

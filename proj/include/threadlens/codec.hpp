#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "threadlens/thread.hpp"

namespace threadlens {

using Json = nlohmann::ordered_json;

/// RFC 3339 instant. Accepts `Z` or a numeric offset and an optional fractional
/// part, which is truncated to whole seconds. Throws ParseError.
Timestamp parse_timestamp(std::string_view text);

/// Always UTC, second precision: `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_timestamp(Timestamp ts);

Json thread_to_json(const Thread& thread);

/// Canonical thread JSON: posts in chronological order, keys in canonical order,
/// two-space indentation, trailing newline.
std::string serialize_thread(const Thread& thread);

/// Decodes canonical thread JSON (already parsed) and builds the Thread.
Thread thread_from_json(const Json& doc);

/// Throws ParseError (with line and column for syntax errors, JSON path for
/// schema errors) or Error for structural violations.
Thread parse_thread(std::string_view text);

/// As parse_thread; throws ParseError{where = path} when the file cannot be read.
Thread load_thread(const std::filesystem::path& path);

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace threadlens

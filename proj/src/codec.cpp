#include "threadlens/codec.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "threadlens/error.hpp"

namespace threadlens {
namespace {

int read_digits(std::string_view text, std::size_t pos, std::size_t count) {
  if (pos + count > text.size()) throw ParseError("timestamp", "truncated '" + std::string(text) + "'");
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + count, value);
  if (ec != std::errc{} || ptr != text.data() + pos + count)
    throw ParseError("timestamp", "expected digits in '" + std::string(text) + "'");
  return value;
}

void expect_char(std::string_view text, std::size_t pos, std::string_view allowed) {
  if (pos >= text.size() || allowed.find(text[pos]) == std::string_view::npos)
    throw ParseError("timestamp", "malformed RFC 3339 instant '" + std::string(text) + "'");
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "." + key, "missing field");
  return *it;
}

std::string require_string(const Json& obj, const char* key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_string()) throw ParseError(path + "." + key, "expected string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const Json& obj, const char* key,
                                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(path + "." + key, "expected string or null");
  auto s = it->get<std::string>();
  if (s.empty()) throw ParseError(path + "." + key, "must be non-empty when present");
  return s;
}

Json opt(const auto& value) {
  return value ? Json(value->str()) : Json(nullptr);
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  // YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)
  const int y = read_digits(text, 0, 4);
  expect_char(text, 4, "-");
  const int mo = read_digits(text, 5, 2);
  expect_char(text, 7, "-");
  const int d = read_digits(text, 8, 2);
  expect_char(text, 10, "Tt ");
  const int h = read_digits(text, 11, 2);
  expect_char(text, 13, ":");
  const int mi = read_digits(text, 14, 2);
  expect_char(text, 16, ":");
  const int s = read_digits(text, 17, 2);
  std::size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const auto frac_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == frac_start) throw ParseError("timestamp", "empty fraction in '" + std::string(text) + "'");
  }
  expect_char(text, pos, "Zz+-");
  seconds offset{0};
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else {
    const int sign = text[pos] == '-' ? -1 : 1;
    const int oh = read_digits(text, pos + 1, 2);
    expect_char(text, pos + 3, ":");
    const int om = read_digits(text, pos + 4, 2);
    if (oh > 23 || om > 59) throw ParseError("timestamp", "bad offset in '" + std::string(text) + "'");
    offset = sign * (hours{oh} + minutes{om});
    pos += 6;
  }
  if (pos != text.size()) throw ParseError("timestamp", "trailing characters in '" + std::string(text) + "'");

  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 60)
    throw ParseError("timestamp", "out-of-range field in '" + std::string(text) + "'");
  return sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} - offset;
}

std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day_start = floor<days>(ts);
  const year_month_day ymd{day_start};
  const hh_mm_ss hms{ts - day_start};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

Json thread_to_json(const Thread& thread) {
  Json posts = Json::array();
  for (const auto& p : thread.posts()) {
    Json j;
    j["id"] = p.id.str();
    j["parent_id"] = opt(p.parent);
    j["author"] = p.author;
    j["timestamp"] = format_timestamp(p.timestamp);
    j["body"] = p.body;
    j["topic"] = opt(p.topic);
    j["duplicate_of"] = opt(p.duplicate_of);
    posts.push_back(std::move(j));
  }
  Json doc;
  doc["thread_id"] = thread.thread_id();
  doc["posts"] = std::move(posts);
  return doc;
}

std::string serialize_thread(const Thread& thread) { return thread_to_json(thread).dump(2) + "\n"; }

Thread thread_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
  std::string thread_id;
  if (auto it = doc.find("thread_id"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("$.thread_id", "expected string");
    thread_id = it->get<std::string>();
  }
  const auto& posts = require(doc, "posts", "$");
  if (!posts.is_array()) throw ParseError("$.posts", "expected array");

  std::vector<Post> records;
  records.reserve(posts.size());
  for (std::size_t i = 0; i < posts.size(); ++i) {
    const auto path = "$.posts[" + std::to_string(i) + "]";
    const auto& jp = posts[i];
    if (!jp.is_object()) throw ParseError(path, "expected object");
    Post p;
    const auto id = require_string(jp, "id", path);
    if (id.empty()) throw ParseError(path + ".id", "must be non-empty");
    p.id = PostId(id);
    if (auto parent = optional_string(jp, "parent_id", path)) p.parent = PostId(*parent);
    if (auto it = jp.find("author"); it != jp.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError(path + ".author", "expected string");
      p.author = it->get<std::string>();
    }
    try {
      p.timestamp = parse_timestamp(require_string(jp, "timestamp", path));
    } catch (const ParseError& e) {
      throw ParseError(path + ".timestamp", e.what());
    }
    if (auto it = jp.find("body"); it != jp.end() && !it->is_null()) {
      if (!it->is_string()) throw ParseError(path + ".body", "expected string");
      p.body = it->get<std::string>();
    }
    if (auto topic = optional_string(jp, "topic", path)) p.topic = TopicLabel(*topic);
    if (auto dup = optional_string(jp, "duplicate_of", path)) p.duplicate_of = PostId(*dup);
    records.push_back(std::move(p));
  }
  return Thread::build(std::move(records), std::move(thread_id));
}

Thread parse_thread(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  return thread_from_json(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Thread load_thread(const std::filesystem::path& path) { return parse_thread(read_file(path)); }

}  // namespace threadlens

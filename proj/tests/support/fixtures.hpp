#pragma once

#include <filesystem>
#include <string>

#include "threadlens/codec.hpp"

namespace threadlens::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(THREADLENS_FIXTURE_DIR) / name;
}

/// table1.json: the original thread, 20 posts, two annotated duplicates.
inline Thread original_fixture() { return load_thread(fixture_path("table1.json")); }

/// table2.json: the restructured thread, 18 posts grouped by topic.
inline Thread restructured_fixture() { return load_thread(fixture_path("table2.json")); }

inline Post make_post(const std::string& id, const char* parent, long minute,
                      const std::string& body = "text", const char* topic = nullptr,
                      const char* duplicate_of = nullptr) {
  Post p;
  p.id = PostId(id);
  if (parent) p.parent = PostId(parent);
  p.author = "author";
  p.timestamp = Timestamp{std::chrono::minutes{minute}};
  p.body = body;
  if (topic) p.topic = TopicLabel(topic);
  if (duplicate_of) p.duplicate_of = PostId(duplicate_of);
  return p;
}

}  // namespace threadlens::testing

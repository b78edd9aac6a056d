#pragma once

#include <random>
#include <string>
#include <vector>

#include "threadlens/thread.hpp"

namespace threadlens::testing {

struct RandomThreadOptions {
  std::size_t max_posts = 50;
  std::size_t min_posts = 1;
  std::size_t max_topics = 5;
  double first_level_rate = 0.3;
  double duplicate_rate = 0.15;  // share of posts annotated as duplicates
  double tie_rate = 0.1;         // chance a post shares its predecessor's timestamp
  bool label_topics = true;
  bool annotate_duplicates = true;
};

inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> v = {
      "java",   "syntax",  "compiler", "memory",   "pointer", "garbage", "class",  "object",
      "method", "library", "template", "stl",      "virtual", "runtime", "bytecode", "machine",
      "fast",   "slow",    "easy",     "hard",     "design",  "pattern", "thread", "lock",
      "stream", "vector",  "string",   "exception", "header", "module",  "build",  "linker"};
  return v;
}

inline std::string random_body(std::mt19937_64& rng) {
  const auto& v = vocabulary();
  std::uniform_int_distribution<std::size_t> len(4, 14), pick(0, v.size() - 1);
  std::string body;
  for (auto n = len(rng); n > 0; --n) body += (body.empty() ? "" : " ") + v[pick(rng)];
  return body;
}

/// Replaces up to `edits` words of `body` with random vocabulary words.
inline std::string perturb(std::mt19937_64& rng, const std::string& body, int edits) {
  std::vector<std::string> w;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find(' ', start);
    if (end == std::string::npos) end = body.size();
    w.push_back(body.substr(start, end - start));
    start = end + 1;
  }
  const auto& v = vocabulary();
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  for (int e = 0; e < edits; ++e) {
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
    w[at(rng)] = v[pick(rng)];
  }
  std::string out;
  for (const auto& x : w) out += (out.empty() ? "" : " ") + x;
  return out;
}

/// Posts in chronological order with parents drawn from earlier posts.
inline std::vector<Post> random_posts(std::mt19937_64& rng, const RandomThreadOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> count(opt.min_posts, opt.max_posts);
  std::uniform_int_distribution<std::size_t> topics(1, opt.max_topics);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto n = count(rng);
  const auto m = topics(rng);

  std::vector<Post> posts;
  posts.reserve(n);
  std::vector<bool> flagged;
  auto t = Timestamp{std::chrono::seconds{1'330'000'000}};
  for (std::size_t i = 0; i < n; ++i) {
    Post p;
    p.id = PostId("q" + std::to_string(i));
    p.author = "user" + std::to_string(rng() % 7);
    if (i > 0 && coin(rng) >= opt.tie_rate) t += std::chrono::seconds{1 + rng() % 600};
    p.timestamp = t;
    if (i > 0 && coin(rng) >= opt.first_level_rate)
      p.parent = posts[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)].id;
    if (opt.label_topics) p.topic = TopicLabel("T" + std::to_string(1 + rng() % m));
    p.body = random_body(rng);

    bool dup = false;
    if (opt.annotate_duplicates && coin(rng) < opt.duplicate_rate) {
      std::vector<std::size_t> candidates;
      for (std::size_t j = 0; j < i; ++j)
        if (!flagged[j] && posts[j].timestamp < p.timestamp) candidates.push_back(j);
      if (!candidates.empty()) {
        const auto j = candidates[rng() % candidates.size()];
        p.duplicate_of = posts[j].id;
        p.body = perturb(rng, posts[j].body, static_cast<int>(rng() % 2));
        dup = true;
      }
    }
    flagged.push_back(dup);
    posts.push_back(std::move(p));
  }
  return posts;
}

inline Thread random_thread(std::mt19937_64& rng, const RandomThreadOptions& opt = {}) {
  return Thread::build(random_posts(rng, opt), "random");
}

}  // namespace threadlens::testing

#include "threadlens/dedup.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_set>

#include "threadlens/error.hpp"
#include "threadlens/text.hpp"

namespace threadlens {

void SimilarityConfig::validate() const {
  if (shingle_size < 1) throw Error(ErrorCode::InvalidConfig, "shingle size must be at least 1");
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw Error(ErrorCode::InvalidConfig, "similarity threshold must lie in (0, 1]");
}

ShingleSet normalize_and_shingle(std::string_view body, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidConfig, "shingle size must be at least 1");
  const auto w = words(body);
  ShingleSet out;
  if (w.empty()) return out;
  const auto window = std::min(k, w.size());
  for (std::size_t i = 0; i + window <= w.size(); ++i) {
    std::string s = w[i];
    for (std::size_t j = 1; j < window; ++j) (s += ' ') += w[i + j];
    out.insert(std::move(s));
  }
  return out;
}

double jaccard(const ShingleSet& a, const ShingleSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

void DuplicateFlags::add(DuplicateEntry entry) {
  if (lookup_.contains(entry.post))
    throw Error(ErrorCode::InvalidFlags, "post '" + entry.post.str() + "' flagged twice");
  lookup_.emplace(entry.post, entries_.size());
  entries_.push_back(std::move(entry));
}

const PostId* DuplicateFlags::original_of(const PostId& id) const {
  auto it = lookup_.find(id);
  return it == lookup_.end() ? nullptr : &entries_[it->second].of;
}

namespace {

// Index of the post that `i`'s annotation ultimately points to.
std::size_t annotation_root(const Thread& thread, std::size_t i) {
  // Each hop is strictly earlier in time, so the walk terminates.
  while (const auto& dup = thread.post(i).duplicate_of) i = thread.index_of(*dup);
  return i;
}

}  // namespace

DuplicateFlags annotated_duplicates(const Thread& thread) {
  DuplicateFlags flags;
  for (std::size_t i = 0; i < thread.size(); ++i) {
    const auto& p = thread.post(i);
    if (!p.duplicate_of) continue;
    flags.add({p.id, thread.post(annotation_root(thread, i)).id, std::nullopt});
  }
  return flags;
}

DuplicateFlags detect_duplicates(const Thread& thread, const SimilarityConfig& config) {
  config.validate();
  const auto n = thread.size();

  std::vector<bool> annotated(n, false), protected_original(n, false);
  std::vector<std::size_t> original(n, Thread::npos);
  for (std::size_t i = 0; i < n; ++i) {
    if (!thread.post(i).duplicate_of) continue;
    annotated[i] = true;
    original[i] = annotation_root(thread, i);
    protected_original[original[i]] = true;
  }

  std::vector<ShingleSet> shingles;
  shingles.reserve(n);
  for (const auto& p : thread.posts()) shingles.push_back(normalize_and_shingle(p.body, config.shingle_size));

  std::vector<std::optional<double>> score(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (annotated[j] || protected_original[j]) continue;
    const auto tj = thread.post(j).timestamp;
    std::size_t first_match = Thread::npos;
    std::size_t first_unflagged = Thread::npos;
    double unflagged_score = 0.0;
    for (std::size_t i = 0; i < j && thread.post(i).timestamp < tj; ++i) {
      const double s = jaccard(shingles[i], shingles[j]);
      if (s < config.threshold) continue;
      if (first_match == Thread::npos) first_match = i;
      if (original[i] == Thread::npos) {
        first_unflagged = i;
        unflagged_score = s;
        break;
      }
    }
    if (first_match == Thread::npos) continue;
    if (first_unflagged != Thread::npos) {
      original[j] = first_unflagged;
      score[j] = unflagged_score;
    } else {
      original[j] = original[first_match];
      score[j] = jaccard(shingles[original[j]], shingles[j]);
    }
  }

  DuplicateFlags flags;
  for (std::size_t j = 0; j < n; ++j) {
    if (original[j] == Thread::npos) continue;
    flags.add({thread.post(j).id, thread.post(original[j]).id, score[j]});
  }
  return flags;
}

std::vector<std::string> flag_violations(const Thread& thread, const DuplicateFlags& flags) {
  std::vector<std::string> out;
  for (const auto& e : flags.entries()) {
    if (!thread.contains(e.post)) {
      out.push_back("flagged post '" + e.post.str() + "' is not in the thread");
      continue;
    }
    if (!thread.contains(e.of)) {
      out.push_back("original '" + e.of.str() + "' of '" + e.post.str() + "' is not in the thread");
      continue;
    }
    if (!(thread.post(e.of).timestamp < thread.post(e.post).timestamp))
      out.push_back("original '" + e.of.str() + "' is not strictly earlier than '" + e.post.str() + "'");
    if (flags.is_duplicate(e.of))
      out.push_back("original '" + e.of.str() + "' of '" + e.post.str() + "' is itself flagged");
  }
  return out;
}

void validate_flags(const Thread& thread, const DuplicateFlags& flags) {
  auto problems = flag_violations(thread, flags);
  if (!problems.empty()) throw Error(ErrorCode::InvalidFlags, problems.front());
}

}  // namespace threadlens

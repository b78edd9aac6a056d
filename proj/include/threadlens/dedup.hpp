#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "threadlens/thread.hpp"

namespace threadlens {

using ShingleSet = std::set<std::string>;

struct SimilarityConfig {
  std::size_t shingle_size = 3;  // words per shingle, >= 1
  double threshold = 0.8;        // Jaccard cut-off, in (0, 1]

  /// Throws Error{InvalidConfig}.
  void validate() const;
};

/// k-word shingles of the normalized body. A body with fewer than k words yields
/// one shingle holding all of its words; an empty body yields no shingles.
ShingleSet normalize_and_shingle(std::string_view body, std::size_t k);

/// |a ∩ b| / |a ∪ b|, and 1 when both are empty.
double jaccard(const ShingleSet& a, const ShingleSet& b);

struct DuplicateEntry {
  PostId post;                  // the later post
  PostId of;                    // the retained original
  std::optional<double> score;  // null for annotated pairs

  friend bool operator==(const DuplicateEntry&, const DuplicateEntry&) = default;
};

/// Map from duplicate post to its original, kept in insertion order.
class DuplicateFlags {
public:
  void add(DuplicateEntry entry);

  bool is_duplicate(const PostId& id) const { return lookup_.contains(id); }
  const PostId* original_of(const PostId& id) const;

  const std::vector<DuplicateEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const DuplicateFlags& a, const DuplicateFlags& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<DuplicateEntry> entries_;
  std::unordered_map<PostId, std::size_t> lookup_;
};

/// Flags taken verbatim from the posts' `duplicate_of` fields. A chain of
/// annotations (a dup of b, b dup of c) is collapsed onto its earliest post.
DuplicateFlags annotated_duplicates(const Thread& thread);

/// Annotated pairs first, then lexical near-duplicates. A post is flagged when
/// some strictly earlier post reaches the Jaccard threshold; it is attributed to
/// the earliest such post that is itself unflagged, else to the original of the
/// earliest such post. Posts that are annotated originals are never flagged.
DuplicateFlags detect_duplicates(const Thread& thread, const SimilarityConfig& config = {});

/// Problems that make `flags` inconsistent with `thread`; empty when valid.
std::vector<std::string> flag_violations(const Thread& thread, const DuplicateFlags& flags);

/// Throws Error{InvalidFlags} listing the first violation.
void validate_flags(const Thread& thread, const DuplicateFlags& flags);

}  // namespace threadlens

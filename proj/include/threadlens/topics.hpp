#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "threadlens/thread.hpp"

namespace threadlens {

/// Post → topic mapping. Entries keep insertion order.
class TopicAssignment {
public:
  /// Re-assigning a post replaces its label.
  void assign(const PostId& post, const TopicLabel& topic);

  const TopicLabel* topic_of(const PostId& post) const;
  bool contains(const PostId& post) const { return lookup_.contains(post); }

  const std::vector<std::pair<PostId, TopicLabel>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Distinct labels ordered by the earliest (chronological) member post in `thread`.
  std::vector<TopicLabel> topics(const Thread& thread) const;

  /// Throws Error{UnknownPostInAssignment}.
  void validate(const Thread& thread) const;

  /// Drops entries whose post is not in `thread`; the rest follow thread order.
  TopicAssignment restricted_to(const Thread& thread) const;

  friend bool operator==(const TopicAssignment& a, const TopicAssignment& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<std::pair<PostId, TopicLabel>> entries_;
  std::unordered_map<PostId, std::size_t> lookup_;
};

struct LabeledAssignment {
  TopicAssignment assignment;
  std::vector<PostId> unlabeled;  // chronological
};

/// Collects the posts' own topic labels. Throws Error{NoLabelsPresent}.
LabeledAssignment assignment_from_labels(const Thread& thread);

using TermVector = std::map<std::string, double>;

/// Term frequencies over normalized words with stopwords removed.
TermVector term_frequencies(std::string_view body);

/// 0 when either vector is all zeros.
double cosine_similarity(const TermVector& a, const TermVector& b);

bool is_stopword(std::string_view word);

/// Bumped whenever the built-in stopword list changes.
inline constexpr int kStopwordListVersion = 1;

/// Single-link clustering: posts are linked when the cosine of their term
/// vectors is at least `link_threshold`; connected components become topics
/// "C1", "C2", ... numbered by earliest member.
/// Throws Error{EmptyThread} or Error{InvalidConfig} for a threshold outside (0, 1).
TopicAssignment cluster_keywords(const Thread& thread, double link_threshold = 0.3);

}  // namespace threadlens

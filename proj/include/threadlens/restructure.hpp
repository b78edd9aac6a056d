#pragma once

#include <map>
#include <optional>
#include <vector>

#include "threadlens/dedup.hpp"
#include "threadlens/metrics.hpp"
#include "threadlens/thread.hpp"
#include "threadlens/topics.hpp"

namespace threadlens {

struct Removal {
  PostId post;
  PostId original;

  friend bool operator==(const Removal&, const Removal&) = default;
};

struct Move {
  PostId post;
  std::optional<PostId> from;  // none = first level
  std::optional<PostId> to;

  friend bool operator==(const Move&, const Move&) = default;
};

struct RestructurePlan {
  std::vector<Removal> removals;
  std::vector<Move> moves;  // chronological by post
  std::vector<std::pair<TopicLabel, PostId>> topic_roots;  // ordered by topic root time

  friend bool operator==(const RestructurePlan&, const RestructurePlan&) = default;
};

struct RestructureResult {
  Thread thread;
  RestructurePlan plan;
  MetricsReport before;
  MetricsReport after;
};

/// Drops flagged posts; replies to a dropped post move to that post's original.
/// Throws Error{InvalidFlags}.
Thread remove_duplicates(const Thread& thread, const DuplicateFlags& flags);

/// One first-level post per topic (its earliest post). Every other post hangs
/// under its nearest same-topic ancestor, or under the topic root when there is
/// none. The topic field of each post is set from `assignment`.
/// Throws Error{UnlabeledPost}.
Thread group_by_topic(const Thread& thread, const TopicAssignment& assignment);

/// remove_duplicates followed by group_by_topic, with metrics for both ends.
RestructureResult restructure(const Thread& thread, const DuplicateFlags& flags,
                              const TopicAssignment& assignment,
                              Projection projection = Projection::DfsIndex);

}  // namespace threadlens

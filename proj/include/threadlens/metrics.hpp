#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "threadlens/dedup.hpp"
#include "threadlens/thread.hpp"
#include "threadlens/topics.hpp"

namespace threadlens {

struct RedundancyStats {
  std::size_t total_posts = 0;      // N
  std::size_t duplicate_posts = 0;  // N_d
  double redundancy = 0.0;          // N_d / (N - N_d)

  friend bool operator==(const RedundancyStats&, const RedundancyStats&) = default;
};

/// How a post is placed on the line for dispersion.
enum class Projection {
  DfsIndex,  // 0-based preorder position
  Depth,     // number of ancestors
};

struct TopicStats {
  TopicLabel topic;
  std::size_t post_count = 0;
  std::vector<double> positions;  // chronological order of the member posts
  double dispersion = 0.0;        // population standard deviation of positions

  friend bool operator==(const TopicStats&, const TopicStats&) = default;
};

struct HierarchyStats {
  std::size_t depth = 0;    // d
  std::size_t breadth = 0;  // b
  double hierarchy_degree = 0.0;

  friend bool operator==(const HierarchyStats&, const HierarchyStats&) = default;
};

struct SubThreadHierarchy {
  PostId root;
  HierarchyStats stats;

  friend bool operator==(const SubThreadHierarchy&, const SubThreadHierarchy&) = default;
};

struct MetricsReport {
  RedundancyStats redundancy;
  std::vector<TopicStats> topics;  // ordered by earliest member post
  HierarchyStats hierarchy;        // whole thread
  std::vector<SubThreadHierarchy> subthreads;  // one per first-level post
  std::optional<double> chronological_coherence;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// N_d / (N - N_d); 0 for an empty thread.
/// Throws Error{InvalidConfig} when duplicates > total and
/// Error{AllPostsDuplicates} when every post is a duplicate.
double redundancy_factor(std::size_t total, std::size_t duplicates);

RedundancyStats redundancy_stats(const Thread& thread, const DuplicateFlags& flags);

double population_stddev(std::span<const double> values);

double project(const Thread& thread, std::size_t index, Projection projection);

/// Throws Error{UnknownPostInAssignment}. An empty assignment gives an empty list.
std::vector<TopicStats> topic_dispersion(const Thread& thread, const TopicAssignment& assignment,
                                         Projection projection = Projection::DfsIndex);

/// Normalized Kendall tau distance: discordant pairs / C(n, 2), and 0 for n <= 1.
/// Throws Error{NotAPermutation}.
double chronological_coherence(std::span<const PostId> actual, std::span<const PostId> ideal);

/// h = d / b. Throws Error{EmptySubThread}.
HierarchyStats degree_of_hierarchy(const Thread& thread);
HierarchyStats degree_of_hierarchy(const SubThread& sub);

/// max_i N_i / M for topic sizes N_1..N_M: the degree of hierarchy when each
/// topic is a single chain under its own first-level post.
/// Throws Error{EmptyTopicList}, or Error{InvalidConfig} for a zero count.
double hierarchical_reference(std::span<const std::size_t> topic_counts);

/// All metrics for one thread. `ideal_order` lists the ids whose chronology is
/// being judged, in the preferred reading order; the actual order is the thread's
/// chronology restricted to those ids.
MetricsReport metrics_report(const Thread& thread, const TopicAssignment& assignment,
                             const DuplicateFlags& flags,
                             const std::optional<std::vector<PostId>>& ideal_order = std::nullopt,
                             Projection projection = Projection::DfsIndex);

}  // namespace threadlens

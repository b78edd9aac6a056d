#include "threadlens/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "threadlens/error.hpp"

namespace threadlens {

double redundancy_factor(std::size_t total, std::size_t duplicates) {
  if (duplicates > total)
    throw Error(ErrorCode::InvalidConfig, "more duplicates than posts");
  if (total == 0) return 0.0;
  if (duplicates == total)
    throw Error(ErrorCode::AllPostsDuplicates, "every post is marked as a duplicate");
  return static_cast<double>(duplicates) / static_cast<double>(total - duplicates);
}

RedundancyStats redundancy_stats(const Thread& thread, const DuplicateFlags& flags) {
  validate_flags(thread, flags);
  return {thread.size(), flags.size(), redundancy_factor(thread.size(), flags.size())};
}

double population_stddev(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double project(const Thread& thread, std::size_t index, Projection projection) {
  switch (projection) {
    case Projection::DfsIndex: return static_cast<double>(thread.dfs_position(index));
    case Projection::Depth: return static_cast<double>(thread.depth(index) - 1);
  }
  return 0.0;
}

std::vector<TopicStats> topic_dispersion(const Thread& thread, const TopicAssignment& assignment,
                                         Projection projection) {
  assignment.validate(thread);
  std::vector<TopicStats> out;
  std::unordered_map<TopicLabel, std::size_t> slot;
  for (std::size_t i = 0; i < thread.size(); ++i) {
    const auto* topic = assignment.topic_of(thread.post(i).id);
    if (!topic) continue;
    auto [it, fresh] = slot.emplace(*topic, out.size());
    if (fresh) out.push_back({*topic, 0, {}, 0.0});
    auto& stats = out[it->second];
    stats.positions.push_back(project(thread, i, projection));
    ++stats.post_count;
  }
  for (auto& stats : out) stats.dispersion = population_stddev(stats.positions);
  return out;
}

namespace {

std::size_t count_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const auto mid = lo + (hi - lo) / 2;
  auto count = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, v.begin() + lo);
  return count;
}

}  // namespace

double chronological_coherence(std::span<const PostId> actual, std::span<const PostId> ideal) {
  if (actual.size() != ideal.size())
    throw Error(ErrorCode::NotAPermutation, "orders have different lengths");
  std::unordered_map<PostId, std::size_t> rank;
  rank.reserve(ideal.size());
  for (std::size_t k = 0; k < ideal.size(); ++k)
    if (!rank.emplace(ideal[k], k).second)
      throw Error(ErrorCode::NotAPermutation, "id '" + ideal[k].str() + "' repeated in ideal order");

  std::vector<std::size_t> ranks;
  ranks.reserve(actual.size());
  std::vector<bool> used(ideal.size(), false);
  for (const auto& id : actual) {
    auto it = rank.find(id);
    if (it == rank.end() || used[it->second])
      throw Error(ErrorCode::NotAPermutation, "id '" + id.str() + "' does not match the ideal order");
    used[it->second] = true;
    ranks.push_back(it->second);
  }
  const auto n = ranks.size();
  if (n <= 1) return 0.0;
  std::vector<std::size_t> scratch(n);
  const auto discordant = count_inversions(ranks, scratch, 0, n);
  return static_cast<double>(discordant) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

HierarchyStats degree_of_hierarchy(const Thread& thread) {
  const auto d = max_depth(thread);
  const auto b = breadth(thread);
  return {d, b, static_cast<double>(d) / static_cast<double>(b)};
}

HierarchyStats degree_of_hierarchy(const SubThread& sub) {
  const auto d = max_depth(sub);
  const auto b = breadth(sub);
  return {d, b, static_cast<double>(d) / static_cast<double>(b)};
}

double hierarchical_reference(std::span<const std::size_t> topic_counts) {
  if (topic_counts.empty()) throw Error(ErrorCode::EmptyTopicList, "no topics given");
  std::size_t largest = 0;
  for (auto c : topic_counts) {
    if (c == 0) throw Error(ErrorCode::InvalidConfig, "topic sizes must be at least 1");
    largest = std::max(largest, c);
  }
  return static_cast<double>(largest) / static_cast<double>(topic_counts.size());
}

MetricsReport metrics_report(const Thread& thread, const TopicAssignment& assignment,
                             const DuplicateFlags& flags,
                             const std::optional<std::vector<PostId>>& ideal_order,
                             Projection projection) {
  MetricsReport report;
  report.redundancy = redundancy_stats(thread, flags);
  report.topics = topic_dispersion(thread, assignment, projection);
  if (!thread.empty()) {
    report.hierarchy = degree_of_hierarchy(thread);
    for (auto root : thread.first_level())
      report.subthreads.push_back({thread.post(root).id, degree_of_hierarchy(SubThread(thread, root))});
  }
  if (ideal_order) {
    std::unordered_set<PostId> wanted;
    for (const auto& id : *ideal_order) {
      if (!thread.contains(id))
        throw Error(ErrorCode::NotAPermutation, "ideal order names unknown post '" + id.str() + "'");
      if (!wanted.insert(id).second)
        throw Error(ErrorCode::NotAPermutation, "id '" + id.str() + "' repeated in ideal order");
    }
    std::vector<PostId> actual;
    for (const auto& p : thread.posts())
      if (wanted.contains(p.id)) actual.push_back(p.id);
    report.chronological_coherence = chronological_coherence(actual, *ideal_order);
  }
  return report;
}

}  // namespace threadlens

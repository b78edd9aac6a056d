#include "threadlens/restructure.hpp"

#include <unordered_map>

#include "threadlens/error.hpp"

namespace threadlens {

Thread remove_duplicates(const Thread& thread, const DuplicateFlags& flags) {
  validate_flags(thread, flags);
  if (flags.empty()) return thread;

  std::vector<Post> kept;
  kept.reserve(thread.size() - flags.size());
  for (std::size_t i = 0; i < thread.size(); ++i) {
    const auto& p = thread.post(i);
    if (flags.is_duplicate(p.id)) continue;
    Post q = p;
    q.duplicate_of.reset();
    if (q.parent) {
      if (const auto* original = flags.original_of(*q.parent)) {
        // The original must not sit below the reply being moved.
        if (thread.is_ancestor(i, thread.index_of(*original)) || *original == q.id)
          throw Error(ErrorCode::InvalidFlags, "moving '" + q.id.str() + "' under '" +
                                                   original->str() + "' would create a cycle");
        q.parent = *original;
      }
    }
    kept.push_back(std::move(q));
  }
  try {
    return Thread::build(std::move(kept), thread.thread_id());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CycleDetected) throw;
    throw Error(ErrorCode::InvalidFlags, std::string("reattaching replies failed: ") + e.what());
  }
}

Thread group_by_topic(const Thread& thread, const TopicAssignment& assignment) {
  assignment.validate(thread);
  const auto n = thread.size();
  std::vector<const TopicLabel*> topic(n);
  for (std::size_t i = 0; i < n; ++i) {
    topic[i] = assignment.topic_of(thread.post(i).id);
    if (!topic[i])
      throw Error(ErrorCode::UnlabeledPost, "post '" + thread.post(i).id.str() + "' has no topic");
  }

  // Posts are chronological, so the first post seen for a topic is its root.
  std::unordered_map<TopicLabel, std::size_t> root_of;
  for (std::size_t i = 0; i < n; ++i) root_of.emplace(*topic[i], i);

  std::vector<Post> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Post q = thread.post(i);
    q.topic = *topic[i];
    const auto root = root_of.at(*topic[i]);
    if (root == i) {
      q.parent.reset();
    } else {
      auto anc = thread.parent_index(i);
      while (anc != Thread::npos && *topic[anc] != *topic[i]) anc = thread.parent_index(anc);
      q.parent = thread.post(anc != Thread::npos ? anc : root).id;
    }
    out.push_back(std::move(q));
  }
  return Thread::build(std::move(out), thread.thread_id());
}

RestructureResult restructure(const Thread& thread, const DuplicateFlags& flags,
                              const TopicAssignment& assignment, Projection projection) {
  assignment.validate(thread);
  auto before = metrics_report(thread, assignment, flags, std::nullopt, projection);

  auto deduped = remove_duplicates(thread, flags);
  auto kept_assignment = assignment.restricted_to(deduped);
  auto grouped = group_by_topic(deduped, kept_assignment);
  auto after = metrics_report(grouped, kept_assignment, DuplicateFlags{}, std::nullopt, projection);

  RestructurePlan plan;
  for (const auto& e : flags.entries()) plan.removals.push_back({e.post, e.of});
  for (const auto& p : grouped.posts()) {
    const auto& old_parent = thread.post(p.id).parent;
    if (old_parent != p.parent) plan.moves.push_back({p.id, old_parent, p.parent});
  }
  for (auto r : grouped.first_level()) {
    const auto& p = grouped.post(r);
    plan.topic_roots.emplace_back(*p.topic, p.id);
  }

  return {std::move(grouped), std::move(plan), std::move(before), std::move(after)};
}

}  // namespace threadlens

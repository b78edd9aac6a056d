#include "threadlens/thread.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "threadlens/error.hpp"

namespace threadlens {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownParent: return "UnknownParent";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::InvalidDuplicateRef: return "InvalidDuplicateRef";
    case ErrorCode::UnknownPost: return "UnknownPost";
    case ErrorCode::EmptySubThread: return "EmptySubThread";
    case ErrorCode::AllPostsDuplicates: return "AllPostsDuplicates";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::UnknownPostInAssignment: return "UnknownPostInAssignment";
    case ErrorCode::EmptyTopicList: return "EmptyTopicList";
    case ErrorCode::NoLabelsPresent: return "NoLabelsPresent";
    case ErrorCode::EmptyThread: return "EmptyThread";
    case ErrorCode::InvalidFlags: return "InvalidFlags";
    case ErrorCode::UnlabeledPost: return "UnlabeledPost";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

PostId::PostId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw Error(ErrorCode::InvalidId, "post id must be non-empty");
}

TopicLabel::TopicLabel(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw Error(ErrorCode::InvalidId, "topic label must be non-empty");
}

Thread Thread::build(std::vector<Post> records, std::string thread_id) {
  Thread t;
  t.thread_id_ = std::move(thread_id);

  std::stable_sort(records.begin(), records.end(),
                   [](const Post& a, const Post& b) { return a.timestamp < b.timestamp; });
  t.posts_ = std::move(records);
  const std::size_t n = t.posts_.size();

  t.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& id = t.posts_[i].id;
    if (id.str().empty()) throw Error(ErrorCode::InvalidId, "post id must be non-empty");
    if (!t.index_.emplace(id, i).second)
      throw Error(ErrorCode::DuplicateId, "duplicate post id '" + id.str() + "'");
  }

  t.parent_.assign(n, npos);
  t.children_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = t.posts_[i];
    if (p.parent) {
      auto it = t.index_.find(*p.parent);
      if (it == t.index_.end())
        throw Error(ErrorCode::UnknownParent,
                    "post '" + p.id.str() + "' names unknown parent '" + p.parent->str() + "'");
      t.parent_[i] = it->second;
      t.children_[it->second].push_back(i);
    } else {
      t.roots_.push_back(i);
    }
    if (p.duplicate_of) {
      auto it = t.index_.find(*p.duplicate_of);
      if (it == t.index_.end())
        throw Error(ErrorCode::InvalidDuplicateRef,
                    "post '" + p.id.str() + "' is marked duplicate of unknown post '" +
                        p.duplicate_of->str() + "'");
      if (!(t.posts_[it->second].timestamp < p.timestamp))
        throw Error(ErrorCode::InvalidDuplicateRef,
                    "post '" + p.id.str() + "' is marked duplicate of '" + p.duplicate_of->str() +
                        "', which is not strictly earlier");
    }
  }

  // Children were appended in chronological order, so preorder needs no sorting.
  t.depth_.assign(n, 0);
  t.dfs_.reserve(n);
  std::vector<std::size_t> stack(t.roots_.rbegin(), t.roots_.rend());
  for (auto r : t.roots_) t.depth_[r] = 1;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    t.dfs_.push_back(i);
    for (auto c = t.children_[i].rbegin(); c != t.children_[i].rend(); ++c) {
      t.depth_[*c] = t.depth_[i] + 1;
      stack.push_back(*c);
    }
  }

  if (t.dfs_.size() != n) {
    // Whatever was not reached from a first-level post hangs off a cycle.
    std::vector<bool> reached(n, false);
    for (auto i : t.dfs_) reached[i] = true;
    std::size_t start = 0;
    while (reached[start]) ++start;
    std::vector<std::size_t> seen_at(n, npos);
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (seen_at[cur] == npos) {
      seen_at[cur] = path.size();
      path.push_back(cur);
      cur = t.parent_[cur];
    }
    std::string ids;
    for (auto k = seen_at[cur]; k < path.size(); ++k) {
      if (!ids.empty()) ids += ", ";
      ids += t.posts_[path[k]].id.str();
    }
    throw Error(ErrorCode::CycleDetected, "parent links form a cycle: " + ids);
  }

  t.dfs_pos_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) t.dfs_pos_[t.dfs_[k]] = k;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = t.posts_[i];
    if (t.parent_[i] != npos && p.timestamp < t.posts_[t.parent_[i]].timestamp)
      t.warnings_.push_back({ValidationWarning::Kind::TimestampBeforeParent, p.id,
                             "post '" + p.id.str() + "' is older than its parent '" +
                                 p.parent->str() + "'"});
    if (p.body.empty())
      t.warnings_.push_back(
          {ValidationWarning::Kind::EmptyBody, p.id, "post '" + p.id.str() + "' has an empty body"});
  }
  return t;
}

std::size_t Thread::index_of(const PostId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownPost, "unknown post '" + id.str() + "'");
  return it->second;
}

std::vector<PostId> Thread::dfs_order() const {
  std::vector<PostId> out;
  out.reserve(dfs_.size());
  for (auto i : dfs_) out.push_back(posts_[i].id);
  return out;
}

std::vector<PostId> Thread::chronological_order() const {
  std::vector<PostId> out;
  out.reserve(posts_.size());
  for (const auto& p : posts_) out.push_back(p.id);
  return out;
}

bool Thread::is_ancestor(std::size_t ancestor, std::size_t index) const {
  for (auto cur = parent_[index]; cur != npos; cur = parent_[cur])
    if (cur == ancestor) return true;
  return false;
}

bool Thread::is_single_threaded() const {
  if (roots_.size() > 1) return false;
  return std::all_of(children_.begin(), children_.end(),
                     [](const auto& c) { return c.size() <= 1; });
}

SubThread Thread::subthread(const PostId& root) const { return SubThread(*this, index_of(root)); }

std::vector<std::size_t> SubThread::members() const {
  // The subtree is one contiguous block of the preorder.
  const auto& t = *thread_;
  const auto begin = t.dfs_position(root_);
  const auto root_depth = t.depth(root_);
  std::vector<std::size_t> out{root_};
  for (auto k = begin + 1; k < t.size() && t.depth(t.dfs()[k]) > root_depth; ++k)
    out.push_back(t.dfs()[k]);
  return out;
}

std::size_t SubThread::size() const { return members().size(); }

Thread build_thread(std::vector<Post> records, std::string thread_id) {
  return Thread::build(std::move(records), std::move(thread_id));
}

std::size_t depth(const Thread& thread, const PostId& id) { return thread.depth(id); }

std::vector<PostId> dfs_order(const Thread& thread) { return thread.dfs_order(); }

std::size_t max_depth(const SubThread& sub) {
  const auto& t = sub.thread();
  const auto base = t.depth(sub.root());
  std::size_t d = 0;
  for (auto m : sub.members()) d = std::max(d, t.depth(m) - base + 1);
  return d;
}

std::size_t max_depth(const Thread& thread) {
  if (thread.empty()) throw Error(ErrorCode::EmptySubThread, "thread has no posts");
  std::size_t d = 0;
  for (std::size_t i = 0; i < thread.size(); ++i) d = std::max(d, thread.depth(i));
  return d;
}

std::size_t breadth(const SubThread& sub) {
  return std::max<std::size_t>(1, sub.thread().children(sub.root()).size());
}

std::size_t breadth(const Thread& thread) {
  if (thread.empty()) throw Error(ErrorCode::EmptySubThread, "thread has no posts");
  return thread.first_level().size();
}

}  // namespace threadlens

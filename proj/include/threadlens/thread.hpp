#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace threadlens {

/// Opaque, non-empty post identifier.
class PostId {
public:
  PostId() = default;
  explicit PostId(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const PostId&, const PostId&) = default;

private:
  std::string value_;
};

/// Topic (stance) label such as "T3" or "C1".
class TopicLabel {
public:
  TopicLabel() = default;
  explicit TopicLabel(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const TopicLabel&, const TopicLabel&) = default;

private:
  std::string value_;
};

using Timestamp = std::chrono::sys_seconds;

struct Post {
  PostId id;
  std::optional<PostId> parent;  // absent for first-level posts
  std::string author;
  Timestamp timestamp{};
  std::string body;
  std::optional<TopicLabel> topic;
  std::optional<PostId> duplicate_of;

  friend bool operator==(const Post&, const Post&) = default;
};

struct ValidationWarning {
  enum class Kind { TimestampBeforeParent, EmptyBody };
  Kind kind;
  PostId post;
  std::string message;
};

}  // namespace threadlens

template <>
struct std::hash<threadlens::PostId> {
  std::size_t operator()(const threadlens::PostId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

template <>
struct std::hash<threadlens::TopicLabel> {
  std::size_t operator()(const threadlens::TopicLabel& label) const noexcept {
    return std::hash<std::string>{}(label.str());
  }
};

namespace threadlens {

class SubThread;

/// Immutable forest of posts. Posts are held in chronological order (timestamp,
/// then insertion order); all structural indexes refer to positions in that order.
class Thread {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Thread() = default;

  /// Validates `records` and derives the tree indexes.
  /// Throws Error{DuplicateId | UnknownParent | CycleDetected | InvalidDuplicateRef}.
  static Thread build(std::vector<Post> records, std::string thread_id = {});

  const std::string& thread_id() const noexcept { return thread_id_; }
  std::size_t size() const noexcept { return posts_.size(); }
  bool empty() const noexcept { return posts_.empty(); }

  std::span<const Post> posts() const noexcept { return posts_; }
  const Post& post(std::size_t index) const { return posts_.at(index); }
  const Post& post(const PostId& id) const { return posts_[index_of(id)]; }

  bool contains(const PostId& id) const { return index_.contains(id); }
  /// Throws Error{UnknownPost}.
  std::size_t index_of(const PostId& id) const;

  std::size_t parent_index(std::size_t index) const { return parent_[index]; }
  std::span<const std::size_t> children(std::size_t index) const { return children_[index]; }
  std::span<const std::size_t> first_level() const noexcept { return roots_; }

  /// 1 for first-level posts, parent depth + 1 otherwise.
  std::size_t depth(std::size_t index) const { return depth_[index]; }
  std::size_t depth(const PostId& id) const { return depth_[index_of(id)]; }

  /// Preorder; first-level posts and siblings in chronological order.
  std::span<const std::size_t> dfs() const noexcept { return dfs_; }
  std::size_t dfs_position(std::size_t index) const { return dfs_pos_[index]; }
  std::vector<PostId> dfs_order() const;

  /// Chronological order of post ids.
  std::vector<PostId> chronological_order() const;

  bool is_ancestor(std::size_t ancestor, std::size_t index) const;

  /// True when every post has at most one child and there is at most one first-level post.
  bool is_single_threaded() const;

  SubThread subthread(const PostId& root) const;

  const std::vector<ValidationWarning>& warnings() const noexcept { return warnings_; }

  /// Same posts, same order, same parents.
  friend bool operator==(const Thread& a, const Thread& b) {
    return a.thread_id_ == b.thread_id_ && a.posts_ == b.posts_;
  }

private:
  std::string thread_id_;
  std::vector<Post> posts_;
  std::unordered_map<PostId, std::size_t> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> roots_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> dfs_;
  std::vector<std::size_t> dfs_pos_;
  std::vector<ValidationWarning> warnings_;
};

/// Non-owning view of a post and all of its descendants. Must not outlive its Thread.
class SubThread {
public:
  SubThread(const Thread& thread, std::size_t root) : thread_(&thread), root_(root) {}

  const Thread& thread() const noexcept { return *thread_; }
  std::size_t root() const noexcept { return root_; }
  const PostId& root_id() const { return thread_->post(root_).id; }

  /// Root first, then descendants in preorder.
  std::vector<std::size_t> members() const;
  std::size_t size() const;

private:
  const Thread* thread_;
  std::size_t root_;
};

/// Free-function forms of the structural queries.
Thread build_thread(std::vector<Post> records, std::string thread_id = {});
std::size_t depth(const Thread& thread, const PostId& id);
std::vector<PostId> dfs_order(const Thread& thread);

/// Deepest nesting level, root at level 1. For a whole thread the first-level
/// posts are level 1 (children of a virtual root). Throws Error{EmptySubThread}.
std::size_t max_depth(const SubThread& sub);
std::size_t max_depth(const Thread& thread);

/// Number of children of the root; for a whole thread, the number of first-level
/// posts. A sub-thread whose root has no replies has breadth 1.
/// Throws Error{EmptySubThread}.
std::size_t breadth(const SubThread& sub);
std::size_t breadth(const Thread& thread);

}  // namespace threadlens

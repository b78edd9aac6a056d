#include "threadlens/topics.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "threadlens/error.hpp"
#include "threadlens/text.hpp"

namespace threadlens {

void TopicAssignment::assign(const PostId& post, const TopicLabel& topic) {
  if (auto it = lookup_.find(post); it != lookup_.end()) {
    entries_[it->second].second = topic;
    return;
  }
  lookup_.emplace(post, entries_.size());
  entries_.emplace_back(post, topic);
}

const TopicLabel* TopicAssignment::topic_of(const PostId& post) const {
  auto it = lookup_.find(post);
  return it == lookup_.end() ? nullptr : &entries_[it->second].second;
}

std::vector<TopicLabel> TopicAssignment::topics(const Thread& thread) const {
  std::vector<TopicLabel> out;
  std::unordered_set<TopicLabel> seen;
  for (const auto& p : thread.posts()) {
    if (const auto* t = topic_of(p.id); t && seen.insert(*t).second) out.push_back(*t);
  }
  // Labels of posts outside the thread come last, in insertion order.
  for (const auto& [post, topic] : entries_)
    if (seen.insert(topic).second) out.push_back(topic);
  return out;
}

void TopicAssignment::validate(const Thread& thread) const {
  for (const auto& [post, topic] : entries_)
    if (!thread.contains(post))
      throw Error(ErrorCode::UnknownPostInAssignment,
                  "topic assignment names unknown post '" + post.str() + "'");
}

TopicAssignment TopicAssignment::restricted_to(const Thread& thread) const {
  TopicAssignment out;
  for (const auto& p : thread.posts())
    if (const auto* t = topic_of(p.id)) out.assign(p.id, *t);
  return out;
}

LabeledAssignment assignment_from_labels(const Thread& thread) {
  LabeledAssignment out;
  for (const auto& p : thread.posts()) {
    if (p.topic)
      out.assignment.assign(p.id, *p.topic);
    else
      out.unlabeled.push_back(p.id);
  }
  if (out.assignment.empty()) throw Error(ErrorCode::NoLabelsPresent, "no post carries a topic label");
  return out;
}

TermVector term_frequencies(std::string_view body) {
  TermVector tf;
  for (auto& w : words(body))
    if (!is_stopword(w)) tf[std::move(w)] += 1.0;
  return tf;
}

double cosine_similarity(const TermVector& a, const TermVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [term, x] : a) {
    na += x * x;
    if (auto it = b.find(term); it != b.end()) dot += x * it->second;
  }
  for (const auto& [term, y] : b) nb += y * y;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // The smaller index stays representative so components are keyed by earliest member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

TopicAssignment cluster_keywords(const Thread& thread, double link_threshold) {
  if (thread.empty()) throw Error(ErrorCode::EmptyThread, "cannot cluster an empty thread");
  if (!(link_threshold > 0.0 && link_threshold < 1.0))
    throw Error(ErrorCode::InvalidConfig, "cluster link threshold must lie in (0, 1)");

  const auto n = thread.size();
  std::vector<TermVector> tf;
  tf.reserve(n);
  for (const auto& p : thread.posts()) tf.push_back(term_frequencies(p.body));

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (cosine_similarity(tf[i], tf[j]) >= link_threshold) sets.unite(i, j);

  std::vector<std::size_t> label_of_root(n, 0);
  std::size_t next = 0;
  TopicAssignment out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = sets.find(i);
    if (label_of_root[r] == 0) label_of_root[r] = ++next;
    out.assign(thread.post(i).id, TopicLabel("C" + std::to_string(label_of_root[r])));
  }
  return out;
}

}  // namespace threadlens

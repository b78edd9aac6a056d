#include "threadlens/report_json.hpp"

#include "threadlens/error.hpp"

namespace threadlens {
namespace {

Json hierarchy_to_json(const HierarchyStats& h) {
  Json j;
  j["d"] = h.depth;
  j["b"] = h.breadth;
  j["h"] = h.hierarchy_degree;
  return j;
}

Json opt_id(const std::optional<PostId>& id) { return id ? Json(id->str()) : Json(nullptr); }

std::string string_field(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string() || it->get<std::string>().empty())
    throw ParseError(path + "." + key, "expected non-empty string");
  return it->get<std::string>();
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) throw ParseError(std::string("$.") + key, "expected array");
  return *it;
}

}  // namespace

Json report_to_json(const MetricsReport& report) {
  Json j;
  j["redundancy"] = {{"n", report.redundancy.total_posts},
                     {"n_d", report.redundancy.duplicate_posts},
                     {"r", report.redundancy.redundancy}};
  j["hierarchy"] = hierarchy_to_json(report.hierarchy);
  Json topics = Json::array();
  for (const auto& t : report.topics)
    topics.push_back({{"topic", t.topic.str()}, {"count", t.post_count}, {"dispersion", t.dispersion}});
  j["topics"] = std::move(topics);
  j["chronological_coherence"] =
      report.chronological_coherence ? Json(*report.chronological_coherence) : Json(nullptr);
  Json subs = Json::array();
  for (const auto& s : report.subthreads) {
    auto h = hierarchy_to_json(s.stats);
    Json entry;
    entry["root"] = s.root.str();
    entry.update(h);
    subs.push_back(std::move(entry));
  }
  j["subthreads"] = std::move(subs);
  return j;
}

Json flags_to_json(const DuplicateFlags& flags) {
  Json list = Json::array();
  for (const auto& e : flags.entries())
    list.push_back({{"post", e.post.str()}, {"of", e.of.str()},
                    {"score", e.score ? Json(*e.score) : Json(nullptr)}});
  return Json{{"duplicates", std::move(list)}};
}

DuplicateFlags flags_from_json(const Json& doc) {
  const auto& list = array_field(doc, "duplicates");
  DuplicateFlags flags;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto path = "$.duplicates[" + std::to_string(i) + "]";
    const auto& e = list[i];
    if (!e.is_object()) throw ParseError(path, "expected object");
    std::optional<double> score;
    if (auto it = e.find("score"); it != e.end() && !it->is_null()) {
      if (!it->is_number()) throw ParseError(path + ".score", "expected number or null");
      score = it->get<double>();
    }
    try {
      flags.add({PostId(string_field(e, "post", path)), PostId(string_field(e, "of", path)), score});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError(path, err.what());
    }
  }
  return flags;
}

Json assignment_to_json(const TopicAssignment& assignment) {
  Json list = Json::array();
  for (const auto& [post, topic] : assignment.entries())
    list.push_back({{"post", post.str()}, {"topic", topic.str()}});
  return Json{{"topics", std::move(list)}};
}

TopicAssignment assignment_from_json(const Json& doc) {
  const auto& list = array_field(doc, "topics");
  TopicAssignment out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto path = "$.topics[" + std::to_string(i) + "]";
    if (!list[i].is_object()) throw ParseError(path, "expected object");
    out.assign(PostId(string_field(list[i], "post", path)), TopicLabel(string_field(list[i], "topic", path)));
  }
  return out;
}

Json plan_to_json(const RestructurePlan& plan) {
  Json removals = Json::array();
  for (const auto& r : plan.removals) removals.push_back({{"post", r.post.str()}, {"of", r.original.str()}});
  Json moves = Json::array();
  for (const auto& m : plan.moves)
    moves.push_back({{"post", m.post.str()}, {"from", opt_id(m.from)}, {"to", opt_id(m.to)}});
  Json roots = Json::object();
  for (const auto& [topic, root] : plan.topic_roots) roots[topic.str()] = root.str();
  Json j;
  j["removals"] = std::move(removals);
  j["moves"] = std::move(moves);
  j["topic_roots"] = std::move(roots);
  return j;
}

Json result_to_json(const RestructureResult& result) {
  Json j;
  j["thread"] = thread_to_json(result.thread);
  j["plan"] = plan_to_json(result.plan);
  j["before"] = report_to_json(result.before);
  j["after"] = report_to_json(result.after);
  return j;
}

std::vector<PostId> ideal_order_from_json(const Json& doc) {
  const Json* list = &doc;
  if (doc.is_object()) list = &array_field(doc, "order");
  if (!list->is_array()) throw ParseError("$", "expected an array of post ids");
  std::vector<PostId> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto& v = (*list)[i];
    if (!v.is_string() || v.get<std::string>().empty())
      throw ParseError("$[" + std::to_string(i) + "]", "expected non-empty string");
    out.emplace_back(v.get<std::string>());
  }
  return out;
}

}  // namespace threadlens

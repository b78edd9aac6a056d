#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threadlens/threadlens.hpp"

namespace py = pybind11;
using namespace threadlens;

namespace {

Projection projection_from(const std::string& name) {
  if (name == "dfs") return Projection::DfsIndex;
  if (name == "depth") return Projection::Depth;
  throw Error(ErrorCode::InvalidConfig, "projection must be 'dfs' or 'depth', got '" + name + "'");
}

SimilarityConfig similarity(double tau, std::size_t k) {
  SimilarityConfig cfg{k, tau};
  cfg.validate();
  return cfg;
}

std::vector<PostId> ids(const std::vector<std::string>& raw) {
  return {raw.begin(), raw.end()};
}

// Labels win; clustering fills the posts that carry none.
TopicAssignment topics_for(const Thread& thread, bool cluster, double threshold) {
  TopicAssignment a;
  bool missing = false;
  for (const auto& p : thread.posts()) {
    if (p.topic)
      a.assign(p.id, *p.topic);
    else
      missing = true;
  }
  if (missing && cluster) {
    const auto clusters = cluster_keywords(thread, threshold);
    for (const auto& p : thread.posts())
      if (!p.topic) a.assign(p.id, *clusters.topic_of(p.id));
    a = a.restricted_to(thread);
  }
  return a;
}

std::string analyze(const std::string& text, double tau, std::size_t k, const std::string& projection,
                    const std::optional<std::vector<std::string>>& ideal_order) {
  const auto thread = parse_thread(text);
  const auto cfg = similarity(tau, k);
  std::optional<std::vector<PostId>> ideal;
  if (ideal_order) ideal = ids(*ideal_order);
  const auto report = metrics_report(thread, topics_for(thread, false, 0.3), detect_duplicates(thread, cfg),
                                     ideal, projection_from(projection));
  return report_to_json(report).dump();
}

std::string restructure_json(const std::string& text, double tau, std::size_t k, bool cluster,
                             double cluster_threshold, const std::string& projection) {
  const auto thread = parse_thread(text);
  const auto cfg = similarity(tau, k);
  const auto result = restructure(thread, detect_duplicates(thread, cfg),
                                  topics_for(thread, cluster, cluster_threshold), projection_from(projection));
  return result_to_json(result).dump();
}

std::vector<std::string> validate(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& w : parse_thread(text).warnings()) out.push_back(w.message);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Metrics and restructuring for threaded discussions";

  auto base = py::register_exception<Error>(m, "ThreadlensError", PyExc_ValueError);
  // ParseError must be registered after its base so the more specific mapping wins.
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("analyze", &analyze, py::arg("thread_json"), py::arg("tau") = 0.8, py::arg("k") = 3,
        py::arg("projection") = "dfs", py::arg("ideal_order") = py::none(),
        "Metrics report for a canonical thread JSON document, returned as JSON text.");
  m.def("restructure", &restructure_json, py::arg("thread_json"), py::arg("tau") = 0.8, py::arg("k") = 3,
        py::arg("cluster") = false, py::arg("cluster_threshold") = 0.3, py::arg("projection") = "dfs",
        "Remove duplicates and group by topic; returns thread, plan and both reports as JSON text.");
  m.def("validate", &validate, py::arg("thread_json"),
        "Parse and check a thread; returns warning messages, raises on structural errors.");

  m.def(
      "detect_duplicates",
      [](const std::string& text, double tau, std::size_t k) {
        return flags_to_json(detect_duplicates(parse_thread(text), similarity(tau, k))).dump();
      },
      py::arg("thread_json"), py::arg("tau") = 0.8, py::arg("k") = 3);
  m.def("redundancy_factor", &redundancy_factor, py::arg("total"), py::arg("duplicates"));
  m.def(
      "chronological_coherence",
      [](const std::vector<std::string>& actual, const std::vector<std::string>& ideal) {
        return chronological_coherence(ids(actual), ids(ideal));
      },
      py::arg("actual"), py::arg("ideal"));
  m.def(
      "hierarchical_reference",
      [](const std::vector<std::size_t>& counts) { return hierarchical_reference(counts); },
      py::arg("topic_counts"));
  m.def("shingles", &normalize_and_shingle, py::arg("body"), py::arg("k") = 3);
  m.def("jaccard", &jaccard, py::arg("a"), py::arg("b"));
  m.def("population_stddev", [](const std::vector<double>& v) { return population_stddev(v); },
        py::arg("values"));

  py::class_<Thread>(m, "Thread")
      .def_static("from_json", [](const std::string& text) { return parse_thread(text); }, py::arg("text"))
      .def("to_json", [](const Thread& t) { return serialize_thread(t); })
      .def_property_readonly("thread_id", &Thread::thread_id)
      .def("__len__", &Thread::size)
      .def("__contains__", [](const Thread& t, const std::string& id) { return t.contains(PostId(id)); })
      .def("dfs_order",
           [](const Thread& t) {
             std::vector<std::string> out;
             for (const auto& id : t.dfs_order()) out.push_back(id.str());
             return out;
           })
      .def("chronological_order",
           [](const Thread& t) {
             std::vector<std::string> out;
             for (const auto& id : t.chronological_order()) out.push_back(id.str());
             return out;
           })
      .def("depth", [](const Thread& t, const std::string& id) { return t.depth(PostId(id)); }, py::arg("id"))
      .def("parent",
           [](const Thread& t, const std::string& id) -> std::optional<std::string> {
             const auto& p = t.post(PostId(id)).parent;
             return p ? std::optional<std::string>(p->str()) : std::nullopt;
           },
           py::arg("id"))
      .def("hierarchy",
           [](const Thread& t) {
             const auto h = degree_of_hierarchy(t);
             return py::make_tuple(h.depth, h.breadth, h.hierarchy_degree);
           },
           "(d, b, h) for the whole thread.")
      .def("__eq__", [](const Thread& a, const Thread& b) { return a == b; })
      .def("__repr__", [](const Thread& t) {
        return "<threadlens.Thread '" + t.thread_id() + "' with " + std::to_string(t.size()) + " posts>";
      });

  m.attr("__version__") = "0.1.0";
}

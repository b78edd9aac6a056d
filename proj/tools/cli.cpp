#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "threadlens/threadlens.hpp"

namespace threadlens::cli {
namespace {

enum class Format { Text, Json };

struct Config {
  std::string input;
  std::string output;  // empty: standard output only
  std::string ideal_order;
  SimilarityConfig similarity;
  Projection projection = Projection::DfsIndex;
  bool cluster = false;
  double cluster_threshold = 0.3;
  Format format = Format::Text;
};

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* projection_name(Projection p) { return p == Projection::DfsIndex ? "dfs" : "depth"; }

struct TopicSource {
  TopicAssignment assignment;
  std::size_t labeled = 0;
  std::size_t clustered = 0;
};

// Annotated labels win; clustering only fills posts that carry no label.
TopicSource choose_topics(const Thread& thread, const Config& cfg, bool require_full) {
  TopicSource src;
  std::vector<PostId> unlabeled;
  for (const auto& p : thread.posts()) {
    if (p.topic) {
      src.assignment.assign(p.id, *p.topic);
      ++src.labeled;
    } else {
      unlabeled.push_back(p.id);
    }
  }
  if (unlabeled.empty()) return src;
  if (cfg.cluster) {
    const auto clusters = cluster_keywords(thread, cfg.cluster_threshold);
    for (const auto& id : unlabeled) src.assignment.assign(id, *clusters.topic_of(id));
    src.clustered = unlabeled.size();
    src.assignment = src.assignment.restricted_to(thread);
    return src;
  }
  if (require_full)
    throw Error(ErrorCode::UnlabeledPost,
                "post '" + unlabeled.front().str() + "' has no topic label (use --cluster to assign topics)");
  return src;
}

void write_report_text(std::ostream& out, const MetricsReport& r, Projection projection) {
  out << "redundancy   N = " << r.redundancy.total_posts << ", N_d = " << r.redundancy.duplicate_posts
      << ", r = " << fixed2(r.redundancy.redundancy) << "\n";
  out << "hierarchy    d = " << r.hierarchy.depth << ", b = " << r.hierarchy.breadth
      << ", h = " << fixed2(r.hierarchy.hierarchy_degree) << "\n";
  out << "topics       M = " << r.topics.size() << " (projection: " << projection_name(projection) << ")\n";
  for (const auto& t : r.topics)
    out << "  " << std::left << std::setw(10) << t.topic.str() << std::right << " posts " << std::setw(3)
        << t.post_count << "  dispersion " << fixed2(t.dispersion) << "\n";
  out << "chronological coherence: "
      << (r.chronological_coherence ? fixed2(*r.chronological_coherence) : std::string("n/a")) << "\n";
}

void write_header(std::ostream& out, const Thread& thread, const TopicSource& topics) {
  out << "thread " << (thread.thread_id().empty() ? "(unnamed)" : thread.thread_id()) << ": "
      << thread.size() << " posts, " << thread.first_level().size() << " first-level";
  if (!thread.empty()) {
    out << ", " << topics.labeled << "/" << thread.size() << " labeled";
    if (topics.clustered) out << ", " << topics.clustered << " clustered";
  }
  out << "\n";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw ParseError(path, "cannot write file");
}

std::optional<std::vector<PostId>> load_ideal_order(const Config& cfg) {
  if (cfg.ideal_order.empty()) return std::nullopt;
  const auto text = read_file(cfg.ideal_order);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(cfg.ideal_order, e.what());
  }
  return ideal_order_from_json(doc);
}

int analyze(const Config& cfg, std::ostream& out) {
  const auto thread = load_thread(cfg.input);
  const auto topics = choose_topics(thread, cfg, false);
  const auto flags = detect_duplicates(thread, cfg.similarity);
  const auto report = metrics_report(thread, topics.assignment, flags, load_ideal_order(cfg), cfg.projection);

  const auto json = report_to_json(report).dump(2) + "\n";
  if (!cfg.output.empty()) write_file(cfg.output, json);
  if (cfg.format == Format::Json) {
    out << json;
  } else {
    write_header(out, thread, topics);
    write_report_text(out, report, cfg.projection);
  }
  return kOk;
}

int restructure_cmd(const Config& cfg, std::ostream& out) {
  const auto thread = load_thread(cfg.input);
  const auto topics = thread.empty() ? TopicSource{} : choose_topics(thread, cfg, true);
  const auto flags = detect_duplicates(thread, cfg.similarity);
  const auto result = restructure(thread, flags, topics.assignment, cfg.projection);

  const auto json = result_to_json(result).dump(2) + "\n";
  if (!cfg.output.empty()) write_file(cfg.output, json);
  if (cfg.format == Format::Json) {
    out << json;
    return kOk;
  }
  write_header(out, thread, topics);
  out << "\nbefore\n";
  write_report_text(out, result.before, cfg.projection);
  out << "\nafter (" << result.thread.size() << " posts)\n";
  write_report_text(out, result.after, cfg.projection);
  out << "\nplan: " << result.plan.removals.size() << " removals, " << result.plan.moves.size()
      << " moves, " << result.plan.topic_roots.size() << " topic roots\n";
  for (const auto& r : result.plan.removals)
    out << "  remove " << r.post.str() << " (duplicate of " << r.original.str() << ")\n";
  for (const auto& [topic, root] : result.plan.topic_roots)
    out << "  topic " << topic.str() << " rooted at " << root.str() << "\n";
  if (!cfg.output.empty()) out << "wrote " << cfg.output << "\n";
  return kOk;
}

int validate_cmd(const Config& cfg, std::ostream& out) {
  const auto text = read_file(cfg.input);
  std::optional<Thread> thread;
  std::optional<Error> failure;
  try {
    thread = parse_thread(text);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    failure = e;
  }

  if (cfg.format == Format::Json) {
    Json doc;
    doc["valid"] = !failure;
    if (failure) {
      doc["error"] = std::string(to_string(failure->code()));
      doc["message"] = failure->what();
    } else {
      doc["posts"] = thread->size();
      doc["first_level"] = thread->first_level().size();
      doc["single_threaded"] = thread->is_single_threaded();
      Json warnings = Json::array();
      for (const auto& w : thread->warnings()) warnings.push_back({{"post", w.post.str()}, {"message", w.message}});
      doc["warnings"] = std::move(warnings);
    }
    out << doc.dump(2) << "\n";
  } else if (failure) {
    out << "invalid: " << to_string(failure->code()) << ": " << failure->what() << "\n";
  } else {
    out << "valid: " << thread->size() << " posts, " << thread->first_level().size() << " first-level, "
        << thread->warnings().size() << " warnings\n";
    for (const auto& w : thread->warnings()) out << "  warning: " << w.message << "\n";
  }
  return failure ? kValidationError : kOk;
}

// Lower bound exclusive; upper bound inclusive when `upper_closed`.
CLI::Validator open_interval(double lo, double hi, bool upper_closed) {
  return CLI::Validator(
      [=](const std::string& s) -> std::string {
        double v = 0.0;
        try {
          std::size_t used = 0;
          v = std::stod(s, &used);
          if (used != s.size()) return "not a number: " + s;
        } catch (const std::exception&) {
          return "not a number: " + s;
        }
        const bool ok = v > lo && (upper_closed ? v <= hi : v < hi);
        if (ok) return {};
        std::ostringstream msg;
        msg << "value " << s << " outside (" << lo << ", " << hi << (upper_closed ? "]" : ")");
        return msg.str();
      },
      "RANGE");
}

Format default_format() {
  if (const char* env = std::getenv("THREADLENS_FORMAT")) {
    const std::string v = env;
    if (v == "json") return Format::Json;
  }
  return Format::Text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  cfg.format = default_format();

  CLI::App app{"Measure and restructure threaded discussions", "threadlens"};
  app.require_subcommand(1);

  std::string format_name = cfg.format == Format::Json ? "json" : "text";
  std::string projection_name_arg = "dfs";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Canonical thread JSON")->required();
    sub->add_option("--format", format_name, "Output format")
        ->transform(CLI::IsMember({"text", "json"}, CLI::ignore_case));
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--projection", projection_name_arg, "Dispersion projection")
        ->transform(CLI::IsMember({"dfs", "depth"}, CLI::ignore_case));
    sub->add_option("--tau", cfg.similarity.threshold, "Jaccard threshold for duplicates, in (0, 1]")
        ->check(open_interval(0.0, 1.0, true));
    sub->add_option("--k", cfg.similarity.shingle_size, "Words per shingle")->check(CLI::PositiveNumber);
    sub->add_flag("--cluster", cfg.cluster, "Cluster posts that carry no topic label");
    sub->add_option("--cluster-threshold", cfg.cluster_threshold, "Cosine link threshold, in (0, 1)")
        ->check(open_interval(0.0, 1.0, false));
    sub->add_option("-o,--output", cfg.output, "Also write the JSON result to this file");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Report redundancy, topic dispersion and hierarchy");
  add_common(analyze_cmd);
  add_analysis(analyze_cmd);
  analyze_cmd->add_option("--ideal-order", cfg.ideal_order,
                          "JSON array of post ids in the preferred reading order");

  auto* restructure_sub = app.add_subcommand("restructure", "Remove duplicates and group posts by topic");
  add_common(restructure_sub);
  add_analysis(restructure_sub);

  auto* validate_sub = app.add_subcommand("validate", "Check a thread file");
  add_common(validate_sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "threadlens: " << e.what() << "\n";
    return kInputError;
  }
  cfg.format = format_name == "json" ? Format::Json : Format::Text;
  cfg.projection = projection_name_arg == "depth" ? Projection::Depth : Projection::DfsIndex;

  try {
    if (analyze_cmd->parsed()) return analyze(cfg, out);
    if (restructure_sub->parsed()) return restructure_cmd(cfg, out);
    return validate_cmd(cfg, out);
  } catch (const ParseError& e) {
    err << "threadlens: parse error at " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "threadlens: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace threadlens::cli

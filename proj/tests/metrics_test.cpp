#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_thread.hpp"
#include "threadlens/error.hpp"
#include "threadlens/metrics.hpp"
#include "threadlens/report_json.hpp"

namespace threadlens {
namespace {

using testing::make_post;

std::vector<PostId> ids(std::initializer_list<const char*> names) {
  std::vector<PostId> out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

TEST(RedundancyFactor, Examples) {
  EXPECT_NEAR(redundancy_factor(20, 2), 1.0 / 9.0, 1e-12);
  EXPECT_EQ(redundancy_factor(18, 0), 0.0);
  EXPECT_EQ(redundancy_factor(10, 5), 1.0);
  EXPECT_EQ(redundancy_factor(0, 0), 0.0);
}

TEST(RedundancyFactor, Errors) {
  try {
    redundancy_factor(4, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllPostsDuplicates);
  }
  EXPECT_THROW(redundancy_factor(3, 4), Error);
}

TEST(RedundancyFactor, MonotoneInDuplicates) {
  for (std::size_t n = 1; n < 40; ++n)
    for (std::size_t d = 1; d < n; ++d) EXPECT_LT(redundancy_factor(n, d - 1), redundancy_factor(n, d));
}

TEST(TopicDispersion, SmallCases) {
  const auto t = build_thread({make_post("a", nullptr, 0), make_post("b", "a", 1), make_post("c", "b", 2),
                               make_post("d", nullptr, 3)});
  TopicAssignment asg;
  asg.assign(PostId("a"), TopicLabel("X"));
  asg.assign(PostId("b"), TopicLabel("X"));
  asg.assign(PostId("c"), TopicLabel("X"));
  asg.assign(PostId("d"), TopicLabel("Y"));
  const auto stats = topic_dispersion(t, asg);
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_NEAR(stats[0].dispersion, std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_EQ(stats[1].dispersion, 0.0);
  EXPECT_EQ(stats[1].post_count, 1u);

  // Depth projection counts ancestors: a=0, b=1, c=2.
  const auto by_depth = topic_dispersion(t, asg, Projection::Depth);
  EXPECT_EQ(by_depth[0].positions, (std::vector<double>{0, 1, 2}));

  EXPECT_TRUE(topic_dispersion(t, TopicAssignment{}).empty());

  TopicAssignment stray;
  stray.assign(PostId("nope"), TopicLabel("X"));
  try {
    topic_dispersion(t, stray);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPostInAssignment);
  }
}

// Golden values from hand enumeration of the fixture's preorder (rows of the
// table read top to bottom): T2 at {1,3,5,9,13}, T3 at {2,4,6,7,10,11,12,14,15,19},
// T5 at {16,17,18}. Depth positions are ancestor counts.
TEST(TopicDispersion, OriginalFixtureGolden) {
  const auto t = testing::original_fixture();
  const auto asg = assignment_from_labels(t).assignment;
  const auto dfs = topic_dispersion(t, asg);
  ASSERT_EQ(dfs.size(), 5u);
  const std::vector<std::string> labels = {"T1", "T2", "T3", "T4", "T5"};
  const std::vector<std::size_t> counts = {1, 5, 10, 1, 3};
  const std::vector<double> by_dfs = {0.0, 4.308131845707603, 5.019960159204453, 0.0, 0.816496580927726};
  const std::vector<double> by_depth = {0.0, 0.8, 1.044030650891055, 0.0, 0.4714045207910317};
  const auto dep = topic_dispersion(t, asg, Projection::Depth);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(dfs[k].topic.str(), labels[k]);
    EXPECT_EQ(dfs[k].post_count, counts[k]);
    EXPECT_NEAR(dfs[k].dispersion, by_dfs[k], 1e-12) << labels[k];
    EXPECT_NEAR(dep[k].dispersion, by_depth[k], 1e-12) << labels[k];
  }
  EXPECT_EQ(dfs[4].positions, (std::vector<double>{16, 17, 18}));
}

TEST(TopicDispersion, ContiguousBlockTranslationInvariance) {
  for (std::size_t k = 1; k <= 12; ++k) {
    std::vector<double> base(k);
    std::iota(base.begin(), base.end(), 0.0);
    const double expected = population_stddev(base);
    for (double shift : {1.0, 7.0, 33.0, 1000.0}) {
      auto moved = base;
      for (auto& x : moved) x += shift;
      EXPECT_EQ(population_stddev(moved), expected);
    }
  }
}

TEST(TopicDispersion, MatchesDirectFormulaOnRandomTrees) {
  std::mt19937_64 rng(3);
  testing::RandomThreadOptions opt;
  opt.max_posts = 30;
  for (int round = 0; round < 200; ++round) {
    auto posts = testing::random_posts(rng, opt);
    const auto t = Thread::build(posts);
    const auto ref = oracle::preorder(posts);
    const auto stats = topic_dispersion(t, assignment_from_labels(t).assignment);
    for (const auto& s : stats) {
      std::vector<double> xs;
      for (const auto& p : posts)
        if (p.topic == s.topic) xs.push_back(static_cast<double>(ref.at(p.id.str()).first));
      ASSERT_NEAR(s.dispersion, oracle::stddev(xs), 1e-9);
      ASSERT_EQ(s.post_count, xs.size());
    }
  }
}

TEST(ChronologicalCoherence, Examples) {
  EXPECT_EQ(chronological_coherence(ids({"a", "b", "c"}), ids({"a", "b", "c"})), 0.0);
  EXPECT_EQ(chronological_coherence(ids({"a", "b", "c"}), ids({"c", "b", "a"})), 1.0);
  EXPECT_NEAR(chronological_coherence(ids({"a", "b", "c"}), ids({"b", "a", "c"})), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(chronological_coherence(ids({}), ids({})), 0.0);
  EXPECT_EQ(chronological_coherence(ids({"a"}), ids({"a"})), 0.0);
}

TEST(ChronologicalCoherence, RejectsNonPermutations) {
  for (auto [a, b] : std::vector<std::pair<std::vector<PostId>, std::vector<PostId>>>{
           {ids({"a", "b"}), ids({"a"})},
           {ids({"a", "b"}), ids({"a", "c"})},
           {ids({"a", "a"}), ids({"a", "b"})},
           {ids({"a", "b"}), ids({"b", "b"})}}) {
    try {
      chronological_coherence(a, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotAPermutation);
    }
  }
}

TEST(ChronologicalCoherence, SymmetricAndRelabelInvariant) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "p" + std::to_string(i);
    auto a = names, b = names;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    auto to_ids = [](const std::vector<std::string>& v, const std::string& prefix) {
      std::vector<PostId> out;
      for (const auto& s : v) out.emplace_back(prefix + s);
      return out;
    };
    const double ab = chronological_coherence(to_ids(a, ""), to_ids(b, ""));
    EXPECT_EQ(ab, chronological_coherence(to_ids(b, ""), to_ids(a, "")));
    EXPECT_EQ(ab, chronological_coherence(to_ids(a, "relabel-"), to_ids(b, "relabel-")));
    EXPECT_NEAR(ab, oracle::kendall_distance(a, b), 1e-12);
  }
}

TEST(DegreeOfHierarchy, Fixtures) {
  const auto h1 = degree_of_hierarchy(testing::original_fixture());
  EXPECT_EQ(h1.depth, 4u);
  EXPECT_EQ(h1.breadth, 11u);
  EXPECT_NEAR(h1.hierarchy_degree, 4.0 / 11.0, 1e-12);
  const auto h2 = degree_of_hierarchy(testing::restructured_fixture());
  EXPECT_EQ(h2.hierarchy_degree, 0.8);
}

TEST(DegreeOfHierarchy, FlatAndChain) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Post> flat, chain;
    for (std::size_t i = 0; i < n; ++i) {
      const auto id = "p" + std::to_string(i);
      const auto prev = "p" + std::to_string(i - 1);
      flat.push_back(make_post(id, nullptr, static_cast<long>(i)));
      chain.push_back(make_post(id, i ? prev.c_str() : nullptr, static_cast<long>(i)));
    }
    EXPECT_EQ(degree_of_hierarchy(build_thread(flat)).hierarchy_degree, 1.0 / static_cast<double>(n));
    EXPECT_EQ(degree_of_hierarchy(build_thread(chain)).hierarchy_degree, static_cast<double>(n));
  }
  EXPECT_THROW(degree_of_hierarchy(build_thread({})), Error);
}

TEST(DegreeOfHierarchy, BoundsOnRandomTrees) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const auto t = testing::random_thread(rng);
    const double n = static_cast<double>(t.size());
    const auto h = degree_of_hierarchy(t).hierarchy_degree;
    ASSERT_GE(h, 1.0 / n);
    ASSERT_LE(h, n);
  }
}

TEST(HierarchicalReference, Examples) {
  const std::vector<std::size_t> table2 = {1, 5, 9, 1, 2};
  EXPECT_EQ(hierarchical_reference(table2), 1.8);
  EXPECT_EQ(hierarchical_reference(std::vector<std::size_t>{1}), 1.0);
  EXPECT_EQ(hierarchical_reference(std::vector<std::size_t>{3, 3, 3}), 1.0);
  try {
    hierarchical_reference(std::vector<std::size_t>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyTopicList);
  }
}

TEST(MetricsReport, OriginalFixture) {
  const auto t = testing::original_fixture();
  const auto r = metrics_report(t, assignment_from_labels(t).assignment, annotated_duplicates(t));
  EXPECT_EQ(r.redundancy.total_posts, 20u);
  EXPECT_EQ(r.redundancy.duplicate_posts, 2u);
  EXPECT_NEAR(r.redundancy.redundancy, 2.0 / 18.0, 1e-9);
  EXPECT_NEAR(r.hierarchy.hierarchy_degree, 4.0 / 11.0, 1e-9);
  EXPECT_EQ(r.subthreads.size(), 11u);
  EXPECT_EQ(r.subthreads.back().root.str(), "p11");
  EXPECT_EQ(r.subthreads.back().stats.depth, 4u);
  EXPECT_FALSE(r.chronological_coherence);
  std::size_t labeled = 0;
  for (const auto& s : r.topics) labeled += s.post_count;
  EXPECT_EQ(labeled, 20u);
}

TEST(MetricsReport, RestructuredFixture) {
  const auto t = testing::restructured_fixture();
  const auto r = metrics_report(t, assignment_from_labels(t).assignment, annotated_duplicates(t));
  EXPECT_EQ(r.redundancy.redundancy, 0.0);
  EXPECT_EQ(r.hierarchy.hierarchy_degree, 0.8);
}

TEST(MetricsReport, EmptyThreadIsAllZero) {
  const auto r = metrics_report(build_thread({}), {}, {});
  EXPECT_EQ(r, MetricsReport{});
  EXPECT_EQ(report_to_json(r).dump(),
            R"({"redundancy":{"n":0,"n_d":0,"r":0.0},"hierarchy":{"d":0,"b":0,"h":0.0},"topics":[],)"
            R"("chronological_coherence":null,"subthreads":[]})");
}

TEST(MetricsReport, ChronologicalCoherenceOverSubset) {
  const auto t = testing::original_fixture();
  // T5 posts in reverse of their chronology: all three pairs discordant.
  const auto r = metrics_report(t, {}, {}, ids({"p19", "p18", "p17"}));
  ASSERT_TRUE(r.chronological_coherence);
  EXPECT_EQ(*r.chronological_coherence, 1.0);
  EXPECT_THROW(metrics_report(t, {}, {}, ids({"p19", "zz"})), Error);
  EXPECT_THROW(metrics_report(t, {}, {}, ids({"p19", "p19"})), Error);
}

TEST(MetricsReport, PureAndByteIdentical) {
  const auto t = testing::original_fixture();
  const auto asg = assignment_from_labels(t).assignment;
  const auto a = report_to_json(metrics_report(t, asg, annotated_duplicates(t))).dump();
  const auto b = report_to_json(metrics_report(t, asg, annotated_duplicates(t))).dump();
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace threadlens

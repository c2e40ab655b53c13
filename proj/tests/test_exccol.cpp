#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a3stab/exccol.hpp"

#include <algorithm>
#include <set>

using namespace a3stab;

namespace {
const Interval S1{1, 1}, S2{2, 2}, S3{3, 3}, S12{1, 2}, S23{2, 3}, S123{1, 3};

bool has_edge(const MutationGraph& g, char a, char b, int gen) {
  return std::find(g.edges.begin(), g.edges.end(), MutationEdge{a, b, gen}) != g.edges.end();
}
}  // namespace

TEST_CASE("exceptional sequences") {
  CHECK(is_exceptional_sequence({S1, S2, S3}));
  CHECK(is_exceptional_sequence({S12, S1, S3}));
  CHECK(!is_exceptional_sequence({S2, S1, S3}));
  CHECK(is_complete({S1, S2, S3}));
  CHECK(!is_complete({S1, S12, S2}));
}

TEST_CASE("census: 16 sequences, 12 classes") {
  const auto seqs = enumerate_sequences();
  CHECK(seqs.size() == 16);
  const auto classes = araya_classes(seqs);
  REQUIRE(classes.size() == 12);
  for (const auto& c : classes) {
    const bool orthogonal_pair = c.label >= 'I';
    CHECK(c.members.size() == (orthogonal_pair ? 2u : 1u));
  }
  std::set<std::set<Interval>> supports;
  for (const auto& c : classes) supports.insert({c.representative.begin(), c.representative.end()});
  CHECK(supports.size() == 12);
}

TEST_CASE("classification") {
  CHECK(classify({S1, S2, S3}) == 'A');
  CHECK(classify({S2, S12, S3}) == 'B');
  CHECK(classify({S12, S1, S3}) == 'I');
  CHECK(classify({S1, S12, S3}) == 'I');
  CHECK(class_label(class_index('K')) == 'K');
  CHECK_THROWS_AS(classify({S1, S12, S2}), UnmatchedClass);
}

TEST_CASE("mutations") {
  CHECK(classify(right_mutation({S1, S2, S3}, 1)) == 'B');
  const Triple i = class_representatives()[class_index('I')];
  CHECK(classify(right_mutation(i, 2)) == 'I');
  for (const auto& s : enumerate_sequences())
    for (int k = 1; k <= 2; ++k) {
      CHECK(left_mutation(right_mutation(s.objects, k), k) == s.objects);
      CHECK(right_mutation(left_mutation(s.objects, k), k) == s.objects);
      CHECK(left_right_inverse(s.objects, k));
    }
}

TEST_CASE("braid relation") {
  for (const auto& s : enumerate_sequences()) CHECK(braid_relation_holds(s.objects));
}

TEST_CASE("mutation graph") {
  const auto g = mutation_graph();
  CHECK(g.nodes.size() == 12);
  CHECK(has_edge(g, 'A', 'B', 1));
  CHECK(has_edge(g, 'I', 'A', 1));
  CHECK(has_edge(g, 'B', 'I', 1));
  CHECK(has_edge(g, 'H', 'A', 2));
  CHECK(has_edge(g, 'A', 'L', 2));
  CHECK(has_edge(g, 'L', 'H', 2));
  CHECK(has_edge(g, 'I', 'I', 2));
  CHECK(has_edge(g, 'J', 'J', 2));
  CHECK(has_edge(g, 'K', 'K', 1));
  CHECK(has_edge(g, 'L', 'L', 1));
  int loops = 0, labeled = 0;
  for (const auto& e : g.edges) (e.self_loop() ? loops : labeled)++;
  CHECK(loops == 4);
  CHECK(labeled == 24);
  CHECK(g.connected());
}

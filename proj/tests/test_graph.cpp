#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "grhopf/errors.hpp"
#include "grhopf/graph.hpp"
#include "test_support.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace {

// Proper colorings with k colors by exhaustive assignment.
std::int64_t count_colorings(const Graph& g, std::int64_t k) {
  const auto& vs = g.vertex_set();
  std::map<Label, std::int64_t> color;
  std::function<std::int64_t(std::size_t)> rec = [&](std::size_t i) -> std::int64_t {
    if (i == vs.size()) return 1;
    std::int64_t total = 0;
    for (std::int64_t c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (color[vs[j]] == c && g.adjacent(vs[i], vs[j])) ok = false;
      }
      if (!ok) continue;
      color[vs[i]] = c;
      total += rec(i + 1);
    }
    return total;
  };
  return rec(0);
}

}  // namespace

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph({"a", "a"}, {}), InputError);
  EXPECT_THROW(make_graph({"a"}, {{"a", "a"}}), InputError);
  EXPECT_THROW(make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  EXPECT_THROW(make_graph({"a"}, {{"a", "z"}}), InputError);
  EXPECT_NO_THROW(Graph({}, {}));
}

TEST(Graph, ParseReportsLineAndColumn) {
  const Graph g = parse_graph("# comment\nv a\nv b  # trailing\ne a b\n");
  EXPECT_EQ(g.num_vertices(), 2u);
  EXPECT_TRUE(g.adjacent("a", "b"));
  try {
    parse_graph("v a\nv b\ne a c\n");
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("3:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_graph("v a\nv a\n"), InputError);
  EXPECT_THROW(parse_graph("v a\ne a a\n"), InputError);
  EXPECT_THROW(parse_graph("x a\n"), InputError);
}

TEST(Graph, SerializeRoundTripsAndKeepsDeclarationOrder) {
  const Graph g = fun_math();
  const Graph h = parse_graph(g.serialize());
  EXPECT_EQ(g, h);
  EXPECT_EQ(h.vertices(), g.vertices());
  EXPECT_EQ(parse_graph(kFunMathText), g);
}

TEST(Graph, InducedSubgraph) {
  const Graph sub = induced_subgraph(path3(), {"a", "c"});
  EXPECT_EQ(sub.vertex_set(), (VertexSet{"a", "c"}));
  EXPECT_EQ(sub.num_edges(), 0u);
  EXPECT_EQ(induced_subgraph(path3(), path3().vertex_set()), path3());
  EXPECT_TRUE(induced_subgraph(path3(), {}).empty());
  EXPECT_THROW(induced_subgraph(path3(), {"z"}), InputError);
}

TEST(Graph, Complement) {
  const Graph c = complement(path3());
  ASSERT_EQ(c.num_edges(), 1u);
  EXPECT_TRUE(c.adjacent("a", "c"));
  EXPECT_EQ(complement(k3()).num_edges(), 0u);
  EXPECT_TRUE(complement(Graph{}).empty());
  EXPECT_EQ(complement(complement(fun_math())), fun_math());
}

TEST(Graph, Quotient) {
  const Graph q = quotient(path3(), VertexPartition({{"a", "b"}, {"c"}}));
  EXPECT_EQ(q.num_vertices(), 2u);
  ASSERT_EQ(q.num_edges(), 1u);
  EXPECT_TRUE(q.adjacent("ab", "c"));
  const Graph singles = quotient(fun_math(), VertexPartition({{"f"}, {"u"}, {"n"}, {"m"}, {"a"}, {"t"}, {"h"}}));
  EXPECT_EQ(singles.num_edges(), fun_math().num_edges());
  const Graph one = quotient(k3(), VertexPartition({{"a", "b", "c"}}));
  EXPECT_EQ(one.num_vertices(), 1u);
  EXPECT_EQ(one.num_edges(), 0u);
  EXPECT_THROW(quotient(path3(), VertexPartition(std::vector<VertexSet>{{"a", "b"}})), InputError);
}

TEST(Graph, QuotientRejectsCollidingBlockLabels) {
  const Graph g({"a", "bc", "ab", "c"}, {});
  EXPECT_THROW(quotient(g, VertexPartition({{"a", "bc"}, {"ab", "c"}})), InputError);
}

TEST(Graph, CrossingEdges) {
  EXPECT_EQ(crossing_edges(fun_math(), {"f", "n", "u"}, {"a", "h", "m", "t"}), 3u);
  EXPECT_EQ(crossing_edges(path3(), {"a"}, {"b", "c"}), 1u);
  EXPECT_EQ(crossing_edges(path3(), {}, {"a", "b", "c"}), 0u);
  EXPECT_THROW(crossing_edges(path3(), {"a", "b"}, {"b"}), InputError);
}

TEST(Graph, CrossingEdgesPlusComplementCountsAllPairs) {
  const Graph g = fun_math();
  const Graph gbar = complement(g);
  const VertexSet s{"a", "f", "t"}, t{"h", "m", "n", "u"};
  EXPECT_EQ(crossing_edges(g, s, t) + crossing_edges(gbar, s, t), s.size() * t.size());
  EXPECT_EQ(complement(induced_subgraph(g, s)), induced_subgraph(gbar, s));
}

TEST(Graph, ComponentsPartition) {
  EXPECT_EQ(components_partition({"a", "b", "c"}, {Edge("a", "b")}), VertexPartition({{"a", "b"}, {"c"}}));
  EXPECT_EQ(components_partition({"a", "b", "c"}, {}), VertexPartition({{"a"}, {"b"}, {"c"}}));
  EXPECT_EQ(components_partition({"a", "b", "c"}, {Edge("a", "b"), Edge("b", "c")}),
            VertexPartition({{"a", "b", "c"}}));
  EXPECT_EQ(components_partition({}, {}).size(), 0u);
  EXPECT_THROW(components_partition({"a"}, {Edge("a", "b")}), InputError);
}

TEST(Graph, VertexPartitionCanonicalForm) {
  const VertexPartition p({{"c"}, {"b", "a"}});
  EXPECT_EQ(p.blocks().front(), (VertexSet{"a", "b"}));
  EXPECT_THROW(VertexPartition({{"a"}, {"a", "b"}}), InputError);
  EXPECT_THROW(VertexPartition(std::vector<VertexSet>{VertexSet{}}), InputError);
}

TEST(Graph, ChromaticPolynomialExamples) {
  // k(k-1)(k-2) = k^3 - 3k^2 + 2k
  EXPECT_EQ(chromatic_polynomial(k3()), (std::vector<std::int64_t>{0, 2, -3, 1}));
  // k(k-1)^2 = k^3 - 2k^2 + k
  EXPECT_EQ(chromatic_polynomial(path3()), (std::vector<std::int64_t>{0, 1, -2, 1}));
  EXPECT_EQ(chromatic_polynomial(discrete_graph({"a", "b", "c", "d"})), (std::vector<std::int64_t>{0, 0, 0, 0, 1}));
}

TEST(Graph, ChromaticPolynomialMatchesColoringCounts) {
  for (const Graph& g : {fun_math(), path3(), k3(), complete_graph({"a", "b", "c", "d"}), complement(fun_math())}) {
    const auto chi = chromatic_polynomial(g);
    for (std::int64_t k = 0; k <= 4; ++k) {
      EXPECT_EQ(evaluate_integer_polynomial(chi, k), count_colorings(g, k)) << g.canonical_id() << " k=" << k;
    }
  }
}

TEST(Graph, NumberedLabels) {
  EXPECT_EQ(numbered_labels(3), (std::vector<Label>{"v1", "v2", "v3"}));
  EXPECT_TRUE(numbered_labels(0).empty());
}

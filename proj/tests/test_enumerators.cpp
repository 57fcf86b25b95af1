#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"
#include "grhopf/verifier.hpp"
#include "test_support.hpp"

using namespace grhopf;
using namespace grhopf::testing;

namespace {

VertexSet letters(std::size_t n) {
  VertexSet v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i)));
  return v;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Ordered set partitions: a(n) = sum_{k=1..n} C(n,k) a(n-k).
std::int64_t fubini(std::int64_t n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t k = 1; k <= m; ++k) a[m] += binom(m, k) * a[m - k];
  }
  return a[n];
}

// B(n+1) = sum_k C(n,k) B(k).
std::int64_t bell(std::int64_t n) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(n) + 1, 0);
  b[0] = 1;
  for (std::int64_t m = 0; m < n; ++m) {
    for (std::int64_t k = 0; k <= m; ++k) b[m + 1] += binom(m, k) * b[k];
  }
  return b[n];
}

// Acyclic orientations by Kahn's algorithm over every orientation.
std::size_t brute_acyclic(const Graph& g) {
  const auto& es = g.edges();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << es.size()); ++mask) {
    std::map<Label, int> indeg;
    std::map<Label, std::vector<Label>> out;
    for (const auto& v : g.vertex_set()) indeg[v] = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
      const bool flip = (mask >> i) & 1;
      const Label& from = flip ? es[i].v : es[i].u;
      const Label& to = flip ? es[i].u : es[i].v;
      out[from].push_back(to);
      ++indeg[to];
    }
    std::queue<Label> ready;
    for (const auto& [v, d] : indeg) {
      if (d == 0) ready.push(v);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      const Label v = ready.front();
      ready.pop();
      ++seen;
      for (const auto& w : out[v]) {
        if (--indeg[w] == 0) ready.push(w);
      }
    }
    if (seen == g.num_vertices()) ++count;
  }
  return count;
}

// Flats by union-find: D is a flat iff every edge of G joining two vertices
// of one D-component lies in D.
std::set<std::vector<Edge>> brute_flats(const Graph& g) {
  const auto& es = g.edges();
  std::set<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << es.size()); ++mask) {
    std::map<Label, Label> parent;
    for (const auto& v : g.vertex_set()) parent[v] = v;
    std::function<Label(const Label&)> find = [&](const Label& x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<Edge> d;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if ((mask >> i) & 1) {
        d.push_back(es[i]);
        parent[find(es[i].u)] = find(es[i].v);
      }
    }
    bool flat = true;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (!((mask >> i) & 1) && find(es[i].u) == find(es[i].v)) flat = false;
    }
    if (flat) out.insert(d);
  }
  return out;
}

std::int64_t chi_at_minus_one_signed(const Graph& g) {
  const auto chi = chromatic_polynomial(g);
  const std::int64_t v = evaluate_integer_polynomial(chi, -1);
  return g.num_vertices() % 2 ? -v : v;
}

}  // namespace

TEST(Enumerators, OrderedBipartitions) {
  const auto two = ordered_bipartitions({"a", "b"});
  ASSERT_EQ(two.size(), 4u);
  const std::set<OrderedBipartition> got(two.begin(), two.end());
  const std::set<OrderedBipartition> want = {
      {{}, {"a", "b"}}, {{"a"}, {"b"}}, {{"b"}, {"a"}}, {{"a", "b"}, {}}};
  EXPECT_EQ(got, want);
  ASSERT_EQ(ordered_bipartitions({}).size(), 1u);
  EXPECT_TRUE(ordered_bipartitions({}).front().first.empty());
  EXPECT_EQ(ordered_bipartitions(letters(3)).size(), 8u);
}

TEST(Enumerators, OrderedSetPartitionsMatchFubini) {
  EXPECT_EQ(ordered_set_partitions({}).size(), 1u);
  EXPECT_TRUE(ordered_set_partitions({}).front().empty());
  const auto two = ordered_set_partitions({"a", "b"});
  EXPECT_EQ(two.size(), 3u);
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto all = ordered_set_partitions(letters(n));
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), fubini(static_cast<std::int64_t>(n)));
    EXPECT_EQ(std::set(all.begin(), all.end()).size(), all.size());
  }
}

TEST(Enumerators, SetPartitionsMatchBell) {
  EXPECT_EQ(set_partitions({}).size(), 1u);
  EXPECT_EQ(set_partitions(letters(3)).size(), 5u);
  EXPECT_EQ(set_partitions(letters(4)).size(), 15u);
  for (std::size_t n = 0; n <= 7; ++n) {
    EXPECT_EQ(static_cast<std::int64_t>(set_partitions(letters(n)).size()), bell(static_cast<std::int64_t>(n)));
  }
}

TEST(Enumerators, LinearOrders) {
  EXPECT_EQ(linear_orders({}).size(), 1u);
  EXPECT_EQ(linear_orders(letters(3)).size(), 6u);
  EXPECT_EQ(linear_orders(letters(4)).size(), 24u);
  const auto all = linear_orders(letters(4));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const BasisKey& a, const BasisKey& b) { return a.literal() < b.literal(); }));
}

TEST(Enumerators, AcyclicOrientationExamples) {
  EXPECT_EQ(acyclic_orientations(k3()).size(), 6u);
  EXPECT_EQ(acyclic_orientations(path3()).size(), 4u);
  EXPECT_EQ(acyclic_orientations(discrete_graph({"a", "b", "c"})).size(), 1u);
  EXPECT_FALSE(is_acyclic({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  EXPECT_TRUE(is_acyclic({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}

TEST(Enumerators, AcyclicOrientationsMatchBruteForceAndChromatic) {
  for (const Graph& g : corpus(4)) {
    const auto n = acyclic_orientations(g).size();
    EXPECT_EQ(n, brute_acyclic(g)) << g.canonical_id();
    EXPECT_EQ(static_cast<std::int64_t>(n), chi_at_minus_one_signed(g)) << g.canonical_id();
  }
  EXPECT_EQ(acyclic_orientations(fun_math()).size(), brute_acyclic(fun_math()));
}

TEST(Enumerators, StablePartitions) {
  const auto p3 = stable_partitions(path3());
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(std::set(p3.begin(), p3.end()),
            (std::set<VertexPartition>{VertexPartition({{"a"}, {"b"}, {"c"}}), VertexPartition({{"a", "c"}, {"b"}})}));
  EXPECT_EQ(stable_partitions(complete_graph({"a", "b", "c", "d"})).size(), 1u);
  EXPECT_EQ(stable_partitions(discrete_graph({"a", "b", "c", "d"})).size(), 15u);
}

TEST(Enumerators, StablePartitionsAreTheIndependentOnesAndADownSet) {
  for (const Graph& g : corpus(4)) {
    const auto stable = stable_partitions(g);
    const std::set<VertexPartition> stable_set(stable.begin(), stable.end());
    for (const auto& pi : set_partitions(g.vertex_set())) {
      bool independent = true;
      for (const auto& b : pi.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
          for (std::size_t j = i + 1; j < b.size(); ++j) independent = independent && !g.adjacent(b[i], b[j]);
        }
      }
      EXPECT_EQ(stable_set.count(pi) > 0, independent) << g.canonical_id() << " " << pi.to_string();
      if (!stable_set.count(pi)) continue;
      for (const auto& sigma : set_partitions(g.vertex_set())) {
        if (partition_refines(sigma, pi)) EXPECT_TRUE(stable_set.count(sigma));
      }
    }
  }
}

TEST(Enumerators, StableCompositions) {
  EXPECT_EQ(stable_compositions(path3()).size(), 8u);
  EXPECT_EQ(stable_compositions(complete_graph({"a", "b", "c", "d"})).size(), 24u);
  EXPECT_EQ(stable_compositions(Graph{}).size(), 1u);
}

TEST(Enumerators, FlatsExamples) {
  EXPECT_EQ(flats(k3()).size(), 5u);
  EXPECT_EQ(flats(path3()).size(), 4u);
  EXPECT_EQ(flats(discrete_graph({"a", "b", "c"})).size(), 1u);
  EXPECT_FALSE(is_flat(k3(), {Edge("a", "b"), Edge("b", "c")}));
}

TEST(Enumerators, FlatsMatchUnionFindOracle) {
  for (const Graph& g : corpus(4)) {
    const auto fs = flats(g);
    EXPECT_EQ(std::set(fs.begin(), fs.end()), brute_flats(g)) << g.canonical_id();
  }
  const auto fs = flats(fun_math());
  EXPECT_EQ(std::set(fs.begin(), fs.end()), brute_flats(fun_math()));
}

TEST(Enumerators, FlatsOfCompleteGraphsAreSetPartitions) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const Graph kn = complete_graph(letters(n));
    std::set<VertexPartition> images;
    for (const auto& f : flats(kn)) images.insert(components_partition(kn.vertex_set(), f));
    EXPECT_EQ(images.size(), flats(kn).size());
    EXPECT_EQ(static_cast<std::int64_t>(images.size()), bell(static_cast<std::int64_t>(n)));
    for (const auto& pi : set_partitions(kn.vertex_set())) EXPECT_TRUE(images.count(pi));
  }
}

TEST(Enumerators, Matchings) {
  EXPECT_EQ(matchings(path3()).size(), 3u);
  EXPECT_EQ(matchings(k3()).size(), 4u);
  EXPECT_EQ(matchings(k2()).size(), 2u);
  EXPECT_FALSE(is_matching({Edge("a", "b"), Edge("b", "c")}));
}

TEST(Enumerators, MatchingsAreADownSetOfFlats) {
  for (const Graph& g : corpus(4)) {
    const auto fs = flats(g);
    const std::set<std::vector<Edge>> flat_set(fs.begin(), fs.end());
    const auto ms = matchings(g);
    const std::set<std::vector<Edge>> match_set(ms.begin(), ms.end());
    for (const auto& m : ms) {
      EXPECT_TRUE(flat_set.count(m)) << g.canonical_id();
      for (const auto& f : fs) {
        if (flat_leq(f, m, g)) EXPECT_TRUE(match_set.count(f));
      }
    }
  }
}

TEST(Enumerators, FlatsRestrictToFlats) {
  for (const Graph& g : corpus(4)) {
    for (const auto& f : flats(g)) {
      for (const auto& [s, t] : ordered_bipartitions(g.vertex_set())) {
        EXPECT_TRUE(is_flat(induced_subgraph(g, s), restrict_edges(f, s)));
      }
    }
  }
}

TEST(Enumerators, PartitionRefines) {
  const VertexPartition singles({{"a"}, {"b"}, {"c"}});
  const VertexPartition ab_c({{"a", "b"}, {"c"}});
  const VertexPartition ac_b({{"a", "c"}, {"b"}});
  EXPECT_TRUE(partition_refines(singles, ab_c));
  EXPECT_FALSE(partition_refines(ab_c, ac_b));
  EXPECT_TRUE(partition_refines(ab_c, ab_c));
  EXPECT_THROW(partition_refines(ab_c, VertexPartition(std::vector<VertexSet>{{"a", "b"}})), InputError);
}

TEST(Enumerators, FlatLeq) {
  const Graph g = path3();
  EXPECT_TRUE(flat_leq({}, {Edge("a", "b")}, g));
  EXPECT_FALSE(flat_leq({Edge("a", "b")}, {Edge("b", "c")}, g));
  EXPECT_TRUE(flat_leq({Edge("a", "b")}, {Edge("a", "b")}, g));
  EXPECT_THROW(flat_leq({Edge("a", "b"), Edge("b", "c")}, {}, k3()), InputError);
}

TEST(Enumerators, CompositionRefines) {
  using C = std::vector<VertexSet>;
  EXPECT_TRUE(composition_refines(C{{"a"}, {"b"}, {"c"}}, C{{"a", "b"}, {"c"}}));
  EXPECT_TRUE(composition_refines(C{{"b"}, {"a"}, {"c"}}, C{{"a", "b"}, {"c"}}));
  EXPECT_FALSE(composition_refines(C{{"a"}, {"c"}, {"b"}}, C{{"a", "b"}, {"c"}}));
  EXPECT_TRUE(composition_refines(C{{"a", "b"}, {"c"}}, C{{"a", "b"}, {"c"}}));
  EXPECT_THROW(composition_refines(C{{"a"}}, C{{"a", "b"}}), InputError);
}

TEST(Enumerators, FlatOfPartition) {
  const auto f = flat_of_partition(fun_math(), VertexPartition({{"u", "n"}, {"f", "m", "a", "t"}, {"h"}}));
  EXPECT_EQ(f, (std::vector<Edge>{Edge("a", "m"), Edge("a", "t"), Edge("n", "u")}));
}

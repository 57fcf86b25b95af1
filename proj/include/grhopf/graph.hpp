#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grhopf {

using Label = std::string;

/// Sorted, duplicate-free set of vertex labels.
using VertexSet = std::vector<Label>;

namespace vset {
VertexSet make(std::vector<Label> labels);
bool contains(const VertexSet& s, const Label& v);
bool is_subset(const VertexSet& sub, const VertexSet& super);
bool disjoint(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet minus(const VertexSet& a, const VertexSet& b);
std::string to_string(const VertexSet& s);
}  // namespace vset

/// Undirected edge, stored with u < v.
struct Edge {
  Label u;
  Label v;

  Edge() = default;
  Edge(Label a, Label b);

  bool contains(const Label& x) const { return u == x || v == x; }
  auto operator<=>(const Edge&) const = default;
};

/// Ordered pair S|T of complementary vertex subsets; either part may be empty.
struct OrderedBipartition {
  VertexSet first;
  VertexSet second;
  auto operator<=>(const OrderedBipartition&) const = default;
};

/// Set partition into nonempty blocks. Blocks are kept sorted, and since they
/// are disjoint that is the same as ordering by least label.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  VertexSet ground_set() const;
  /// Blocks intersected with `s`, empty intersections dropped.
  VertexPartition restrict_to(const VertexSet& s) const;
  /// Index of the block containing `v`; throws InputError if absent.
  std::size_t block_of(const Label& v) const;
  std::string to_string() const;

  auto operator<=>(const VertexPartition&) const = default;

 private:
  std::vector<VertexSet> blocks_;
};

/// Labeled simple graph. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on duplicate vertices, duplicate edges, loops or
  /// undeclared endpoints.
  Graph(std::vector<Label> vertices, std::vector<Edge> edges);

  /// Vertices in declaration order.
  const std::vector<Label>& vertices() const { return vertices_; }
  /// Vertices sorted lexicographically.
  const VertexSet& vertex_set() const { return sorted_; }
  /// Edges in canonical (sorted) order.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool has_vertex(const Label& v) const;
  bool adjacent(const Label& a, const Label& b) const;

  /// Line-oriented text form, parseable by parse_graph.
  std::string serialize() const;
  /// Single-line canonical id: sorted vertices, then sorted edges.
  std::string canonical_id() const;

  bool operator==(const Graph& other) const {
    return sorted_ == other.sorted_ && edges_ == other.edges_;
  }

 private:
  std::vector<Label> vertices_;
  VertexSet sorted_;
  std::vector<Edge> edges_;
};

Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

Graph complete_graph(const std::vector<Label>& vertices);
Graph discrete_graph(const std::vector<Label>& vertices);
/// Labels v1..vn.
std::vector<Label> numbered_labels(std::size_t n);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
/// Vertices of the quotient are the blocks, labeled by concatenating their
/// sorted member labels.
Graph quotient(const Graph& g, const VertexPartition& pi);
/// e(G,S,T): edges with one endpoint in S and the other in T.
std::size_t crossing_edges(const Graph& g, const VertexSet& s, const VertexSet& t);
/// Connected components of (V, F).
VertexPartition components_partition(const VertexSet& v, const std::vector<Edge>& f);

/// Chromatic polynomial by deletion-contraction; coefficient of k^i at index i.
std::vector<std::int64_t> chromatic_polynomial(const Graph& g);
std::int64_t evaluate_integer_polynomial(const std::vector<std::int64_t>& coeffs, std::int64_t x);

}  // namespace grhopf

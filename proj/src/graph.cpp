#include "grhopf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "grhopf/errors.hpp"

namespace grhopf {

namespace vset {

VertexSet make(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool contains(const VertexSet& s, const Label& v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

}  // namespace vset

Edge::Edge(Label a, Label b) : u(std::move(a)), v(std::move(b)) {
  if (v < u) std::swap(u, v);
}

VertexPartition::VertexPartition(std::vector<VertexSet> blocks) {
  for (auto& b : blocks) {
    if (b.empty()) throw InputError("partition block must be nonempty");
    b = vset::make(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!vset::disjoint(blocks[i], blocks[j])) {
        throw InputError("partition blocks overlap: " + vset::to_string(blocks[i]) + " and " +
                         vset::to_string(blocks[j]));
      }
    }
  }
  blocks_ = std::move(blocks);
}

VertexSet VertexPartition::ground_set() const {
  std::vector<Label> all;
  for (const auto& b : blocks_) all.insert(all.end(), b.begin(), b.end());
  return vset::make(std::move(all));
}

VertexPartition VertexPartition::restrict_to(const VertexSet& s) const {
  std::vector<VertexSet> out;
  for (const auto& b : blocks_) {
    auto r = vset::intersect(b, s);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return VertexPartition(std::move(out));
}

std::size_t VertexPartition::block_of(const Label& v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (vset::contains(blocks_[i], v)) return i;
  }
  throw InputError("vertex " + v + " not covered by partition");
}

std::string VertexPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += "/";
    out += vset::to_string(blocks_[i]);
  }
  return out;
}

Graph::Graph(std::vector<Label> vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
  sorted_ = vset::make(vertices_);
  if (sorted_.size() != vertices_.size()) throw InputError("duplicate vertex label");
  for (const auto& e : edges) {
    if (e.u == e.v) throw InputError("loop at vertex " + e.u);
    if (!vset::contains(sorted_, e.u) || !vset::contains(sorted_, e.v)) {
      throw InputError("edge " + e.u + "-" + e.v + " has an undeclared endpoint");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("duplicate edge");
  }
  edges_ = std::move(edges);
}

bool Graph::has_vertex(const Label& v) const { return vset::contains(sorted_, v); }

bool Graph::adjacent(const Label& a, const Label& b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::string Graph::serialize() const {
  std::string out;
  for (const auto& v : vertices_) out += "v " + v + "\n";
  for (const auto& e : edges_) out += "e " + e.u + " " + e.v + "\n";
  return out;
}

std::string Graph::canonical_id() const {
  std::string out = "V={";
  for (std::size_t i = 0; i < sorted_.size(); ++i) out += (i ? "," : "") + sorted_[i];
  out += "} E={";
  for (std::size_t i = 0; i < edges_.size(); ++i) out += (i ? "," : "") + edges_[i].u + "-" + edges_[i].v;
  return out + "}";
}

namespace {

std::vector<std::pair<std::string, int>> split_words(std::string_view line) {
  std::vector<std::pair<std::string, int>> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    words.emplace_back(std::string(line.substr(start, i - start)), static_cast<int>(start) + 1);
  }
  return words;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Label> vertices;
  std::set<Label> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& [kw, col] = words[0];
    if (kw == "v") {
      if (words.size() != 2) throw InputError("expected `v <label>`", line_no, col);
      const auto& [label, lcol] = words[1];
      if (!declared.insert(label).second) {
        throw InputError("duplicate vertex " + label, line_no, lcol);
      }
      vertices.push_back(label);
    } else if (kw == "e") {
      if (words.size() != 3) throw InputError("expected `e <label> <label>`", line_no, col);
      const auto& [a, acol] = words[1];
      const auto& [b, bcol] = words[2];
      if (!declared.count(a)) throw InputError("undeclared vertex " + a, line_no, acol);
      if (!declared.count(b)) throw InputError("undeclared vertex " + b, line_no, bcol);
      if (a == b) throw InputError("loop at vertex " + a, line_no, acol);
      Edge e(a, b);
      if (!seen_edges.insert(e).second) {
        throw InputError("duplicate edge " + a + " " + b, line_no, col);
      }
      edges.push_back(std::move(e));
    } else {
      throw InputError("unknown directive `" + kw + "`", line_no, col);
    }
    if (end == text.size()) break;
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

Graph complete_graph(const std::vector<Label>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) edges.emplace_back(vertices[i], vertices[j]);
  }
  return Graph(vertices, std::move(edges));
}

Graph discrete_graph(const std::vector<Label>& vertices) { return Graph(vertices, {}); }

std::vector<Label> numbered_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (const auto& v : s) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex " + v);
  }
  std::vector<Label> vertices;
  for (const auto& v : g.vertices()) {
    if (vset::contains(s, v)) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (vset::contains(s, e.u) && vset::contains(s, e.v)) edges.push_back(e);
  }
  return Graph(std::move(vertices), std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const auto& vs = g.vertex_set();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(g.vertices(), std::move(edges));
}

Graph quotient(const Graph& g, const VertexPartition& pi) {
  if (pi.ground_set() != g.vertex_set()) {
    throw InputError("partition " + pi.to_string() + " does not partition the vertex set");
  }
  std::vector<Label> names;
  for (const auto& b : pi.blocks()) {
    names.push_back(std::accumulate(b.begin(), b.end(), std::string()));
  }
  if (vset::make(names).size() != names.size()) {
    throw InputError("quotient block labels collide for " + pi.to_string());
  }
  std::set<Edge> edges;
  for (const auto& e : g.edges()) {
    std::size_t bu = pi.block_of(e.u);
    std::size_t bv = pi.block_of(e.v);
    if (bu != bv) edges.emplace(names[bu], names[bv]);
  }
  return Graph(std::move(names), std::vector<Edge>(edges.begin(), edges.end()));
}

std::size_t crossing_edges(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (!vset::disjoint(s, t)) throw InputError("crossing_edges: S and T overlap");
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    bool us = vset::contains(s, e.u), vs = vset::contains(s, e.v);
    bool ut = vset::contains(t, e.u), vt = vset::contains(t, e.v);
    if ((us && vt) || (ut && vs)) ++count;
  }
  return count;
}

VertexPartition components_partition(const VertexSet& v, const std::vector<Edge>& f) {
  std::map<Label, Label> parent;
  for (const auto& x : v) parent[x] = x;
  std::function<Label(const Label&)> find = [&](const Label& x) -> Label {
    Label r = x;
    while (parent[r] != r) r = parent[r];
    return r;
  };
  for (const auto& e : f) {
    if (!parent.count(e.u) || !parent.count(e.v)) {
      throw InputError("edge " + e.u + "-" + e.v + " has an endpoint outside the vertex set");
    }
    Label a = find(e.u), b = find(e.v);
    if (a != b) parent[a] = b;
  }
  std::map<Label, VertexSet> groups;
  for (const auto& x : v) groups[find(x)].push_back(x);
  std::vector<VertexSet> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return VertexPartition(std::move(blocks));
}

namespace {

// Adjacency-bitmask simple graph for deletion-contraction.
struct SmallGraph {
  std::vector<std::uint64_t> adj;
  std::uint64_t alive = 0;
};

std::vector<std::int64_t> poly_sub(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<std::int64_t> chromatic(const SmallGraph& g) {
  int u = -1, w = -1;
  for (std::size_t i = 0; i < g.adj.size() && u < 0; ++i) {
    if (!((g.alive >> i) & 1)) continue;
    std::uint64_t nb = g.adj[i] & g.alive;
    if (nb) {
      u = static_cast<int>(i);
      w = __builtin_ctzll(nb);
    }
  }
  if (u < 0) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(__builtin_popcountll(g.alive)) + 1, 0);
    out.back() = 1;
    return out;
  }
  SmallGraph deleted = g;
  deleted.adj[u] &= ~(1ULL << w);
  deleted.adj[w] &= ~(1ULL << u);
  // Contract w into u; parallel edges collapse in the bitmask union.
  SmallGraph contracted = deleted;
  std::uint64_t merged = (contracted.adj[u] | contracted.adj[w]) & ~(1ULL << u) & ~(1ULL << w);
  contracted.adj[u] = merged;
  contracted.alive &= ~(1ULL << w);
  for (std::size_t i = 0; i < contracted.adj.size(); ++i) {
    if (contracted.adj[i] & (1ULL << w)) {
      contracted.adj[i] &= ~(1ULL << w);
      if (i != static_cast<std::size_t>(u)) contracted.adj[i] |= 1ULL << u;
    }
  }
  contracted.adj[w] = 0;
  return poly_sub(chromatic(deleted), chromatic(contracted));
}

}  // namespace

std::vector<std::int64_t> chromatic_polynomial(const Graph& g) {
  const auto& vs = g.vertex_set();
  if (vs.size() > 64) throw InputError("chromatic_polynomial supports at most 64 vertices");
  SmallGraph sg;
  sg.adj.assign(vs.size(), 0);
  sg.alive = vs.size() == 64 ? ~0ULL : ((1ULL << vs.size()) - 1);
  auto index = [&](const Label& x) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
  };
  for (const auto& e : g.edges()) {
    std::size_t a = index(e.u), b = index(e.v);
    sg.adj[a] |= 1ULL << b;
    sg.adj[b] |= 1ULL << a;
  }
  return chromatic(sg);
}

std::int64_t evaluate_integer_polynomial(const std::vector<std::int64_t>& coeffs, std::int64_t x) {
  std::int64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace grhopf

#include "grhopf/enumerators.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "grhopf/errors.hpp"

namespace grhopf {

namespace {

VertexSet subset_of(const VertexSet& v, std::uint64_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((mask >> i) & 1) out.push_back(v[i]);
  }
  return out;
}

template <class T, class Literal>
void sort_by_literal(std::vector<T>& items, Literal&& literal) {
  std::vector<std::pair<std::string, T>> keyed;
  keyed.reserve(items.size());
  for (auto& item : items) keyed.emplace_back(literal(item), std::move(item));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  items.clear();
  for (auto& [lit, item] : keyed) items.push_back(std::move(item));
}

void sort_keys(std::vector<BasisKey>& keys) {
  sort_by_literal(keys, [](const BasisKey& k) { return k.literal(); });
}

void check_small(const VertexSet& v) {
  if (v.size() > 20) throw InputError("enumeration limited to 20 vertices");
}

}  // namespace

std::vector<OrderedBipartition> ordered_bipartitions(const VertexSet& v) {
  check_small(v);
  std::vector<OrderedBipartition> out;
  const std::uint64_t full = (1ULL << v.size()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    out.push_back({subset_of(v, mask), subset_of(v, full & ~mask)});
  }
  return out;
}

std::vector<std::vector<VertexSet>> ordered_set_partitions(const VertexSet& v) {
  check_small(v);
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> prefix;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t remaining) {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    // Nonempty submasks of `remaining` as the next block.
    for (std::uint64_t sub = remaining; sub; sub = (sub - 1) & remaining) {
      prefix.push_back(subset_of(v, sub));
      rec(remaining & ~sub);
      prefix.pop_back();
    }
  };
  rec(v.empty() ? 0 : (1ULL << v.size()) - 1);
  sort_by_literal(out, [](const std::vector<VertexSet>& c) { return BasisKey::composition(c).literal(); });
  return out;
}

std::vector<VertexPartition> set_partitions(const VertexSet& v) {
  check_small(v);
  std::vector<VertexPartition> out;
  std::vector<VertexSet> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == v.size()) {
      out.emplace_back(blocks);
      return;
    }
    // Index loop: the recursion appends to `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(v[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({v[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  sort_by_literal(out, [](const VertexPartition& p) { return BasisKey::partition(KeyKind::PartitionM, p).literal(); });
  return out;
}

std::vector<BasisKey> linear_orders(const VertexSet& v) {
  check_small(v);
  std::vector<BasisKey> out;
  std::vector<Label> perm = v;
  do {
    out.push_back(BasisKey::linear_order(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  sort_keys(out);
  return out;
}

bool is_acyclic(const VertexSet& v, const std::vector<Arc>& arcs) {
  std::vector<std::vector<std::size_t>> out(v.size());
  auto index = [&](const Label& x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) throw InputError("arc endpoint " + x + " not in vertex set");
    return static_cast<std::size_t>(it - v.begin());
  };
  for (const auto& a : arcs) out[index(a.from)].push_back(index(a.to));
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> color(v.size(), 0);
  std::function<bool(std::size_t)> has_cycle = [&](std::size_t x) {
    color[x] = 1;
    for (std::size_t y : out[x]) {
      if (color[y] == 1) return true;
      if (color[y] == 0 && has_cycle(y)) return true;
    }
    color[x] = 2;
    return false;
  };
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (color[x] == 0 && has_cycle(x)) return false;
  }
  return true;
}

std::vector<BasisKey> acyclic_orientations(const Graph& g) {
  const auto& edges = g.edges();
  if (edges.size() > 30) throw InputError("acyclic_orientations limited to 30 edges");
  std::vector<BasisKey> out;
  for (std::uint64_t mask = 0; mask < (1ULL << edges.size()); ++mask) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1) {
        arcs.push_back({edges[i].v, edges[i].u});
      } else {
        arcs.push_back({edges[i].u, edges[i].v});
      }
    }
    if (is_acyclic(g.vertex_set(), arcs)) out.push_back(BasisKey::orientation(std::move(arcs)));
  }
  sort_keys(out);
  return out;
}

namespace {

bool independent(const Graph& g, const VertexSet& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (g.adjacent(block[i], block[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<VertexPartition> stable_partitions(const Graph& g) {
  std::vector<VertexPartition> out;
  for (auto& p : set_partitions(g.vertex_set())) {
    if (std::all_of(p.blocks().begin(), p.blocks().end(), [&](const VertexSet& b) { return independent(g, b); })) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<BasisKey> stable_compositions(const Graph& g) {
  std::vector<BasisKey> out;
  for (auto& c : ordered_set_partitions(g.vertex_set())) {
    if (std::all_of(c.begin(), c.end(), [&](const VertexSet& b) { return independent(g, b); })) {
      out.push_back(BasisKey::composition(std::move(c)));
    }
  }
  return out;
}

std::vector<Edge> flat_of_partition(const Graph& g, const VertexPartition& pi) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    bool inside = false;
    for (const auto& b : pi.blocks()) {
      if (vset::contains(b, e.u)) {
        inside = vset::contains(b, e.v);
        break;
      }
    }
    if (inside) out.push_back(e);
  }
  return out;
}

std::vector<Edge> restrict_edges(const std::vector<Edge>& f, const VertexSet& s) {
  std::vector<Edge> out;
  for (const auto& e : f) {
    if (vset::contains(s, e.u) && vset::contains(s, e.v)) out.push_back(e);
  }
  return out;
}

bool is_flat(const Graph& g, const std::vector<Edge>& d) {
  for (const auto& e : d) {
    if (!g.adjacent(e.u, e.v)) return false;
  }
  std::vector<Edge> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  return flat_of_partition(g, components_partition(g.vertex_set(), sorted)) == sorted;
}

bool is_matching(const std::vector<Edge>& m) {
  std::vector<Label> ends;
  for (const auto& e : m) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  return vset::make(ends).size() == ends.size();
}

std::vector<std::vector<Edge>> flats(const Graph& g) {
  const auto& edges = g.edges();
  if (edges.size() > 30) throw InputError("flats limited to 30 edges");
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << edges.size()); ++mask) {
    std::vector<Edge> d;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((mask >> i) & 1) d.push_back(edges[i]);
    }
    if (is_flat(g, d)) out.push_back(std::move(d));
  }
  sort_by_literal(out, [](const std::vector<Edge>& d) { return BasisKey::edge_set(KeyKind::FlatM, d).literal(); });
  return out;
}

std::vector<std::vector<Edge>> matchings(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  std::function<void(std::size_t, const VertexSet&)> rec = [&](std::size_t i, const VertexSet& used) {
    if (i == edges.size()) {
      out.push_back(current);
      return;
    }
    rec(i + 1, used);
    const Edge& e = edges[i];
    if (!vset::contains(used, e.u) && !vset::contains(used, e.v)) {
      current.push_back(e);
      rec(i + 1, vset::unite(used, {e.u, e.v}));
      current.pop_back();
    }
  };
  rec(0, {});
  sort_by_literal(out, [](const std::vector<Edge>& d) { return BasisKey::edge_set(KeyKind::FlatM, d).literal(); });
  return out;
}

bool partition_refines(const VertexPartition& sigma, const VertexPartition& tau) {
  if (sigma.ground_set() != tau.ground_set()) throw InputError("partition_refines: ground sets differ");
  for (const auto& b : sigma.blocks()) {
    const auto& host = tau.blocks()[tau.block_of(b.front())];
    if (!vset::is_subset(b, host)) return false;
  }
  return true;
}

bool flat_leq(const std::vector<Edge>& f1, const std::vector<Edge>& f2, const Graph& g) {
  if (!is_flat(g, f1) || !is_flat(g, f2)) throw InputError("flat_leq: argument is not a flat of the graph");
  std::vector<Edge> a = f1, b = f2;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool composition_refines(const std::vector<VertexSet>& c1, const std::vector<VertexSet>& c2) {
  auto ground = [](const std::vector<VertexSet>& c) {
    std::vector<Label> all;
    for (const auto& b : c) all.insert(all.end(), b.begin(), b.end());
    return vset::make(all);
  };
  if (ground(c1) != ground(c2)) throw InputError("composition_refines: ground sets differ");
  std::size_t i = 0;
  for (const auto& block : c2) {
    VertexSet acc;
    while (acc.size() < block.size()) {
      if (i >= c1.size() || !vset::is_subset(c1[i], block)) return false;
      acc = vset::unite(acc, c1[i]);
      ++i;
    }
  }
  return i == c1.size();
}

}  // namespace grhopf

#include "grhopf/structures.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"

namespace grhopf {

namespace {

std::size_t position(const std::vector<Label>& order, const Label& v) {
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
}

std::vector<BasisKey> wrap_partitions(KeyKind kind, const std::vector<VertexPartition>& ps) {
  std::vector<BasisKey> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(BasisKey::partition(kind, p));
  return out;
}

std::vector<BasisKey> wrap_edge_sets(KeyKind kind, const std::vector<std::vector<Edge>>& sets) {
  std::vector<BasisKey> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(BasisKey::edge_set(kind, s));
  return out;
}

bool is_independent(const Graph& g, const VertexSet& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (g.adjacent(block[i], block[j])) return false;
    }
  }
  return true;
}

bool edges_in_graph(const Graph& g, const std::vector<Edge>& es) {
  return std::all_of(es.begin(), es.end(), [&](const Edge& e) {
    return g.has_vertex(e.u) && g.has_vertex(e.v) && g.adjacent(e.u, e.v);
  });
}

bool covers(const Graph& g, const std::vector<VertexSet>& blocks) {
  std::vector<Label> all;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  return all == g.vertex_set();
}

// Number of (s, t) pairs, s in S and t in T, with t before s; split into
// pairs adjacent in G (first) and non-adjacent (second).
std::pair<std::uint32_t, std::uint32_t> inversions(const Graph& g, const VertexSet& s, const VertexSet& t,
                                                   const std::function<std::size_t(const Label&)>& rank) {
  std::uint32_t adj = 0, non = 0;
  for (const auto& a : s) {
    const std::size_t ra = rank(a);
    for (const auto& b : t) {
      if (rank(b) < ra) {
        if (g.adjacent(a, b)) {
          ++adj;
        } else {
          ++non;
        }
      }
    }
  }
  return {adj, non};
}

}  // namespace

std::vector<BasisKey> basis(MonoidId m, const Graph& g) {
  switch (m) {
    case MonoidId::L:
      return linear_orders(g.vertex_set());
    case MonoidId::AO:
      return acyclic_orientations(g);
    case MonoidId::Sigma: {
      std::vector<BasisKey> out;
      for (auto& c : ordered_set_partitions(g.vertex_set())) out.push_back(BasisKey::composition(std::move(c)));
      return out;
    }
    case MonoidId::SSigma:
      return stable_compositions(g);
    case MonoidId::Pi_m:
    case MonoidId::Pi_p:
      return wrap_partitions(monoid_info(m).key_kind, set_partitions(g.vertex_set()));
    case MonoidId::SPi_m:
    case MonoidId::SPi_p:
      return wrap_partitions(monoid_info(m).key_kind, stable_partitions(g));
    case MonoidId::FL_M:
    case MonoidId::FL_P:
      return wrap_edge_sets(monoid_info(m).key_kind, flats(g));
    case MonoidId::Match_M:
    case MonoidId::Match_P:
      return wrap_edge_sets(monoid_info(m).key_kind, matchings(g));
    case MonoidId::E:
      return {BasisKey::unit()};
  }
  return {};
}

bool is_valid_key(MonoidId m, const Graph& g, const BasisKey& k) {
  if (k.kind() != monoid_info(m).key_kind) return false;
  switch (m) {
    case MonoidId::L: {
      std::vector<Label> sorted = k.order();
      std::sort(sorted.begin(), sorted.end());
      return sorted == g.vertex_set();
    }
    case MonoidId::AO: {
      const auto& arcs = k.arcs();
      if (arcs.size() != g.num_edges()) return false;
      std::vector<Edge> underlying;
      for (const auto& a : arcs) {
        if (a.from == a.to || !g.has_vertex(a.from) || !g.has_vertex(a.to)) return false;
        underlying.emplace_back(a.from, a.to);
      }
      std::sort(underlying.begin(), underlying.end());
      return underlying == g.edges() && is_acyclic(g.vertex_set(), arcs);
    }
    case MonoidId::Sigma:
      return covers(g, k.blocks());
    case MonoidId::SSigma:
    case MonoidId::SPi_m:
    case MonoidId::SPi_p:
      return covers(g, k.blocks()) &&
             std::all_of(k.blocks().begin(), k.blocks().end(), [&](const VertexSet& b) { return is_independent(g, b); });
    case MonoidId::Pi_m:
    case MonoidId::Pi_p:
      return covers(g, k.blocks());
    case MonoidId::FL_M:
    case MonoidId::FL_P:
      return edges_in_graph(g, k.edges()) && is_flat(g, k.edges());
    case MonoidId::Match_M:
    case MonoidId::Match_P:
      return edges_in_graph(g, k.edges()) && is_matching(k.edges());
    case MonoidId::E:
      return true;
  }
  return false;
}

void require_valid_key(MonoidId m, const Graph& g, const BasisKey& k) {
  if (!is_valid_key(m, g, k)) {
    throw InputError("key `" + k.literal() + "` is not a basis key of " + std::string(monoid_name(m)) +
                     " on graph " + g.canonical_id());
  }
}

BasisKey empty_key(MonoidId m) {
  const KeyKind kind = monoid_info(m).key_kind;
  switch (kind) {
    case KeyKind::Unit:
      return BasisKey::unit();
    case KeyKind::LinearOrder:
      return BasisKey::linear_order({});
    case KeyKind::Orientation:
      return BasisKey::orientation({});
    case KeyKind::Composition:
      return BasisKey::composition({});
    case KeyKind::PartitionM:
    case KeyKind::PartitionP:
      return BasisKey::partition(kind, VertexPartition{});
    default:
      return BasisKey::edge_set(kind, {});
  }
}

QTPolynomial braiding_coeff(const Graph& g, const VertexSet& s, const VertexSet& t) {
  const auto e = static_cast<std::uint32_t>(crossing_edges(g, s, t));
  const auto total = static_cast<std::uint32_t>(s.size() * t.size());
  return QTPolynomial::monomial(e, total - e);
}

QTPolynomial braiding_coeff(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t) {
  const auto& info = monoid_info(m);
  return braiding_coeff(g, s, t).specialize(!info.q_deformed, !info.t_deformed);
}

BasisKey product_key(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t, const BasisKey& x,
                     const BasisKey& y) {
  switch (m) {
    case MonoidId::L: {
      std::vector<Label> order = x.order();
      order.insert(order.end(), y.order().begin(), y.order().end());
      return BasisKey::linear_order(std::move(order));
    }
    case MonoidId::AO: {
      std::vector<Arc> arcs = x.arcs();
      arcs.insert(arcs.end(), y.arcs().begin(), y.arcs().end());
      for (const auto& a : s) {
        for (const auto& b : t) {
          if (g.adjacent(a, b)) arcs.push_back({a, b});
        }
      }
      return BasisKey::orientation(std::move(arcs));
    }
    case MonoidId::Sigma:
    case MonoidId::SSigma: {
      std::vector<VertexSet> blocks = x.blocks();
      blocks.insert(blocks.end(), y.blocks().begin(), y.blocks().end());
      return BasisKey::composition(std::move(blocks));
    }
    case MonoidId::Pi_m:
    case MonoidId::Pi_p:
    case MonoidId::SPi_m:
    case MonoidId::SPi_p: {
      std::vector<VertexSet> blocks = x.blocks();
      blocks.insert(blocks.end(), y.blocks().begin(), y.blocks().end());
      return BasisKey::partition(x.kind(), VertexPartition(std::move(blocks)));
    }
    case MonoidId::FL_M:
    case MonoidId::FL_P:
    case MonoidId::Match_M:
    case MonoidId::Match_P: {
      std::vector<Edge> edges = x.edges();
      edges.insert(edges.end(), y.edges().begin(), y.edges().end());
      return BasisKey::edge_set(x.kind(), std::move(edges));
    }
    case MonoidId::E:
      return BasisKey::unit();
  }
  return {};
}

std::optional<CoproductTerm> coproduct_term(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t,
                                            const BasisKey& k) {
  switch (m) {
    case MonoidId::L: {
      const auto& order = k.order();
      std::vector<Label> left, right;
      for (const auto& v : order) (vset::contains(s, v) ? left : right).push_back(v);
      auto [adj, non] = inversions(g, s, t, [&](const Label& v) { return position(order, v); });
      return CoproductTerm{BasisKey::linear_order(std::move(left)), BasisKey::linear_order(std::move(right)),
                           QTPolynomial::monomial(adj, non)};
    }
    case MonoidId::AO: {
      std::vector<Arc> left, right;
      std::uint32_t back = 0;
      for (const auto& a : k.arcs()) {
        const bool fs = vset::contains(s, a.from);
        const bool ts = vset::contains(s, a.to);
        if (fs && ts) {
          left.push_back(a);
        } else if (!fs && !ts) {
          right.push_back(a);
        } else if (!fs && ts) {
          ++back;
        }
      }
      return CoproductTerm{BasisKey::orientation(std::move(left)), BasisKey::orientation(std::move(right)),
                           QTPolynomial::monomial(back, 0)};
    }
    case MonoidId::Sigma:
    case MonoidId::SSigma: {
      const auto& blocks = k.blocks();
      std::vector<VertexSet> left, right;
      for (const auto& b : blocks) {
        auto l = vset::intersect(b, s);
        auto r = vset::intersect(b, t);
        if (!l.empty()) left.push_back(std::move(l));
        if (!r.empty()) right.push_back(std::move(r));
      }
      auto rank = [&](const Label& v) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (vset::contains(blocks[i], v)) return i;
        }
        return blocks.size();
      };
      auto [adj, non] = inversions(g, s, t, rank);
      return CoproductTerm{BasisKey::composition(std::move(left)), BasisKey::composition(std::move(right)),
                           QTPolynomial::monomial(adj, non)};
    }
    case MonoidId::Pi_m:
    case MonoidId::Pi_p:
    case MonoidId::SPi_m:
    case MonoidId::SPi_p: {
      VertexPartition pi(k.blocks());
      auto left = pi.restrict_to(s);
      auto right = pi.restrict_to(t);
      if (k.kind() == KeyKind::PartitionP && left.size() + right.size() != pi.size()) return std::nullopt;
      return CoproductTerm{BasisKey::partition(k.kind(), left), BasisKey::partition(k.kind(), right),
                           QTPolynomial::one()};
    }
    case MonoidId::FL_M:
    case MonoidId::FL_P:
    case MonoidId::Match_M:
    case MonoidId::Match_P: {
      auto left = restrict_edges(k.edges(), s);
      auto right = restrict_edges(k.edges(), t);
      const bool p_basis = k.kind() == KeyKind::FlatP || k.kind() == KeyKind::MatchingP;
      if (p_basis && left.size() + right.size() != k.edges().size()) return std::nullopt;
      return CoproductTerm{BasisKey::edge_set(k.kind(), std::move(left)), BasisKey::edge_set(k.kind(), std::move(right)),
                           QTPolynomial::one()};
    }
    case MonoidId::E:
      return CoproductTerm{BasisKey::unit(), BasisKey::unit(), QTPolynomial::one()};
  }
  return std::nullopt;
}

namespace {

void require_split(const Graph& g, const OrderedBipartition& split) {
  if (!vset::disjoint(split.first, split.second) || vset::unite(split.first, split.second) != g.vertex_set()) {
    throw InputError("split " + vset::to_string(split.first) + "|" + vset::to_string(split.second) +
                     " is not an ordered bipartition of the vertex set " + vset::to_string(g.vertex_set()));
  }
}

}  // namespace

Element product(MonoidId m, const Graph& g, const OrderedBipartition& split, const BasisKey& x, const BasisKey& y) {
  require_split(g, split);
  require_valid_key(m, induced_subgraph(g, split.first), x);
  require_valid_key(m, induced_subgraph(g, split.second), y);
  return Element::basis_vector(m, share(g), product_key(m, g, split.first, split.second, x, y));
}

TensorElement coproduct_component(MonoidId m, const Graph& g, const OrderedBipartition& split, const BasisKey& k) {
  require_split(g, split);
  require_valid_key(m, g, k);
  TensorElement out(m, share(induced_subgraph(g, split.first)), share(induced_subgraph(g, split.second)));
  if (auto term = coproduct_term(m, g, split.first, split.second, k)) out.add(term->left, term->right, term->coeff);
  return out;
}

Element product(const OrderedBipartition& split, const Element& x, const Element& y, const GraphPtr& g) {
  if (x.monoid() != y.monoid()) throw InputError("product of elements from different monoids");
  require_split(*g, split);
  if (!(x.graph() == induced_subgraph(*g, split.first)) || !(y.graph() == induced_subgraph(*g, split.second))) {
    throw InputError("product factors do not live on the induced subgraphs of the split");
  }
  const MonoidId m = x.monoid();
  Terms out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      accumulate(out, product_key(m, *g, split.first, split.second, kx, ky), cx * cy);
    }
  }
  return Element(m, g, out);
}

TensorElement coproduct_component(const OrderedBipartition& split, const Element& x) {
  const Graph& g = x.graph();
  require_split(g, split);
  TensorElement out(x.monoid(), share(induced_subgraph(g, split.first)), share(induced_subgraph(g, split.second)));
  for (const auto& [k, c] : x.terms()) {
    if (auto term = coproduct_term(x.monoid(), g, split.first, split.second, k)) {
      out.add(term->left, term->right, term->coeff * c);
    }
  }
  return out;
}

Element unit(MonoidId m) { return Element::basis_vector(m, share(Graph{}), empty_key(m)); }

QTPolynomial counit(const Element& x) {
  if (!x.graph().empty()) return QTPolynomial::zero();
  return x.coefficient(empty_key(x.monoid()));
}

OrderedBipartition parse_split(const Graph& g, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw InputError("split must contain `|`", 1, text.size() + 1);
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw InputError("split contains more than one `|`", 1, text.find('|', bar + 1) + 1);
  }
  auto parse_side = [&](std::string_view side, std::size_t offset) {
    std::vector<Label> labels;
    std::size_t start = 0;
    if (side.empty()) return VertexSet{};
    while (true) {
      const auto comma = side.find(',', start);
      auto piece = side.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (piece.empty()) throw InputError("empty vertex label in split", 1, offset + start + 1);
      std::string label(piece);
      if (!g.has_vertex(label)) throw InputError("unknown vertex `" + label + "` in split", 1, offset + start + 1);
      labels.push_back(std::move(label));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::size_t n = labels.size();
    auto set = vset::make(std::move(labels));
    if (set.size() != n) throw InputError("repeated vertex in split", 1, offset + 1);
    return set;
  };
  OrderedBipartition split{parse_side(text.substr(0, bar), 0), parse_side(text.substr(bar + 1), bar + 1)};
  require_split(g, split);
  return split;
}

namespace {

enum class Family { Partition, Flat };

struct ChangeInfo {
  Family family;
  bool to_p;  // true: m/M -> p/P
};

std::optional<ChangeInfo> change_info(MonoidId from, MonoidId to) {
  using M = MonoidId;
  auto pair = [&](M a, M b) { return from == a && to == b; };
  if (pair(M::Pi_m, M::Pi_p) || pair(M::SPi_m, M::SPi_p)) return ChangeInfo{Family::Partition, true};
  if (pair(M::Pi_p, M::Pi_m) || pair(M::SPi_p, M::SPi_m)) return ChangeInfo{Family::Partition, false};
  if (pair(M::FL_M, M::FL_P) || pair(M::Match_M, M::Match_P)) return ChangeInfo{Family::Flat, true};
  if (pair(M::FL_P, M::FL_M) || pair(M::Match_P, M::Match_M)) return ChangeInfo{Family::Flat, false};
  return std::nullopt;
}

// Keys strictly below k in the refinement or bond order, restricted to the
// given basis list (which is a down-set, so it contains all of them).
std::vector<BasisKey> strictly_below(const BasisKey& k, const std::vector<BasisKey>& all, Family family) {
  std::vector<BasisKey> out;
  for (const auto& other : all) {
    if (other == k) continue;
    bool below = false;
    if (family == Family::Partition) {
      below = partition_refines(VertexPartition(other.blocks()), VertexPartition(k.blocks()));
    } else {
      below = std::includes(k.edges().begin(), k.edges().end(), other.edges().begin(), other.edges().end());
    }
    if (below) out.push_back(other);
  }
  return out;
}

}  // namespace

bool supports_basis_change(MonoidId from, MonoidId to) { return from == to || change_info(from, to).has_value(); }

Element basis_change(MonoidId from, MonoidId to, const Element& x) {
  if (x.monoid() != from) throw InputError("element is not in monoid " + std::string(monoid_name(from)));
  if (from == to) return x;
  auto info = change_info(from, to);
  if (!info) {
    throw InputError("no basis change from " + std::string(monoid_name(from)) + " to " +
                     std::string(monoid_name(to)));
  }
  const Graph& g = x.graph();
  const KeyKind target = monoid_info(to).key_kind;
  const auto all = basis(from, g);

  if (info->to_p) {
    // m_pi = sum over tau <= pi of p_tau.
    return linear_extend(x, to, x.graph_ptr(), [&](const BasisKey& k) {
      Element e(to, x.graph_ptr());
      e.add(k.retagged(target), QTPolynomial::one());
      for (const auto& b : strictly_below(k, all, info->family)) e.add(b.retagged(target), QTPolynomial::one());
      return e;
    });
  }
  // p_pi = m_pi - sum over tau < pi of p_tau, expanded recursively.
  std::map<BasisKey, Terms> memo;
  std::function<const Terms&(const BasisKey&)> expand = [&](const BasisKey& k) -> const Terms& {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    Terms out;
    accumulate(out, k.retagged(target), QTPolynomial::one());
    for (const auto& b : strictly_below(k, all, info->family)) accumulate(out, expand(b), QTPolynomial::constant(-1));
    return memo.emplace(k, std::move(out)).first->second;
  };
  Terms out;
  for (const auto& [k, c] : x.terms()) accumulate(out, expand(k), c);
  return Element(to, x.graph_ptr(), out);
}

}  // namespace grhopf

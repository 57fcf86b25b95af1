#include "grhopf/antipode.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"
#include "grhopf/structures.hpp"

namespace grhopf {

std::string_view antipode_method_name(AntipodeMethod m) {
  switch (m) {
    case AntipodeMethod::Takeuchi:
      return "takeuchi";
    case AntipodeMethod::MilnorMooreLeft:
      return "milnor-moore-left";
    case AntipodeMethod::MilnorMooreRight:
      return "milnor-moore-right";
    case AntipodeMethod::Closed:
      return "closed";
  }
  return "";
}

AntipodeMethod parse_antipode_method(std::string_view name) {
  for (auto m : {AntipodeMethod::Takeuchi, AntipodeMethod::MilnorMooreLeft, AntipodeMethod::MilnorMooreRight,
                 AntipodeMethod::Closed}) {
    if (antipode_method_name(m) == name) return m;
  }
  throw InputError("unknown antipode method `" + std::string(name) + "`");
}

namespace {

QTPolynomial sign(std::size_t n) { return QTPolynomial::constant(n % 2 == 0 ? 1 : -1); }

}  // namespace

Terms takeuchi_terms(MonoidId m, const Graph& g, const VertexSet& v, const BasisKey& k) {
  Terms out;
  if (v.empty()) {
    out.emplace(k, QTPolynomial::one());
    return out;
  }
  std::vector<BasisKey> pieces;
  for (const auto& comp : ordered_set_partitions(v)) {
    pieces.clear();
    VertexSet rest = v;
    BasisKey current = k;
    QTPolynomial coeff = sign(comp.size());
    bool zero = false;
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
      VertexSet remaining = vset::minus(rest, comp[i]);
      auto term = coproduct_term(m, g, comp[i], remaining, current);
      if (!term) {
        zero = true;
        break;
      }
      pieces.push_back(std::move(term->left));
      current = std::move(term->right);
      coeff *= term->coeff;
      rest = std::move(remaining);
    }
    if (zero) continue;
    pieces.push_back(std::move(current));
    BasisKey acc = pieces[0];
    VertexSet seen = comp[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      acc = product_key(m, g, seen, comp[i], acc, pieces[i]);
      seen = vset::unite(seen, comp[i]);
    }
    accumulate(out, acc, coeff);
  }
  return out;
}

MilnorMooreSolver::MilnorMooreSolver(MonoidId m, GraphPtr ambient, Side side)
    : monoid_(m), graph_(std::move(ambient)), side_(side) {}

const Terms& MilnorMooreSolver::apply(const VertexSet& v, const BasisKey& k) {
  auto memo_key = std::make_pair(v, k);
  if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
  Terms out;
  if (v.empty()) {
    out.emplace(k, QTPolynomial::one());
  } else {
    const Graph& g = *graph_;
    const QTPolynomial minus_one = QTPolynomial::constant(-1);
    for (const auto& split : ordered_bipartitions(v)) {
      const bool skip = side_ == Side::Left ? split.first.empty() : split.second.empty();
      if (skip) continue;
      auto term = coproduct_term(monoid_, g, split.first, split.second, k);
      if (!term) continue;
      const QTPolynomial c = term->coeff * minus_one;
      if (side_ == Side::Left) {
        const Terms& inner = apply(split.second, term->right);
        for (const auto& [rk, rc] : inner) {
          accumulate(out, product_key(monoid_, g, split.first, split.second, term->left, rk), c * rc);
        }
      } else {
        const Terms& inner = apply(split.first, term->left);
        for (const auto& [lk, lc] : inner) {
          accumulate(out, product_key(monoid_, g, split.first, split.second, lk, term->right), c * lc);
        }
      }
    }
  }
  return memo_.emplace(std::move(memo_key), std::move(out)).first->second;
}

namespace {

// Crossing statistics of a composition: adjacent and non-adjacent pairs
// lying in different blocks.
std::pair<std::uint32_t, std::uint32_t> composition_crossings(const Graph& g, const std::vector<VertexSet>& blocks) {
  std::uint32_t adj = 0, non = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const auto e = static_cast<std::uint32_t>(crossing_edges(g, blocks[i], blocks[j]));
      adj += e;
      non += static_cast<std::uint32_t>(blocks[i].size() * blocks[j].size()) - e;
    }
  }
  return {adj, non};
}

// All C' <= C: concatenations of compositions of the blocks of C, in order.
std::vector<std::vector<VertexSet>> refinements(const std::vector<VertexSet>& c) {
  std::vector<std::vector<VertexSet>> out{{}};
  for (const auto& block : c) {
    const auto parts = ordered_set_partitions(block);
    std::vector<std::vector<VertexSet>> next;
    next.reserve(out.size() * parts.size());
    for (const auto& prefix : out) {
      for (const auto& p : parts) {
        auto joined = prefix;
        joined.insert(joined.end(), p.begin(), p.end());
        next.push_back(std::move(joined));
      }
    }
    out = std::move(next);
  }
  return out;
}

Terms single(const BasisKey& k, const QTPolynomial& c) {
  Terms out;
  accumulate(out, k, c);
  return out;
}

Terms flat_m_closed_form(const Graph& g, const BasisKey& k) {
  const auto& f = k.edges();
  Terms out;
  for (std::uint64_t mask = 0; mask < (1ULL << f.size()); ++mask) {
    std::vector<Edge> h;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if ((mask >> i) & 1) h.push_back(f[i]);
    }
    if (!is_flat(g, h)) continue;
    const std::size_t c = components_partition(g.vertex_set(), h).size();
    const auto o = static_cast<std::int64_t>(quotient_orientation_count(g, h, f));
    accumulate(out, BasisKey::edge_set(k.kind(), std::move(h)), sign(c) * QTPolynomial::constant(o));
  }
  return out;
}

Terms via_p_basis(MonoidId m, const Graph& g, const BasisKey& k) {
  const MonoidId p = dual_basis(m);
  auto gp = share(g);
  Element x = basis_change(m, p, Element::basis_vector(m, gp, k));
  Terms sp;
  for (const auto& [pk, c] : x.terms()) accumulate(sp, closed_form_terms(p, g, pk), c);
  return basis_change(p, m, Element(p, gp, sp)).terms();
}

}  // namespace

std::size_t quotient_orientation_count(const Graph& g, const std::vector<Edge>& h, const std::vector<Edge>& f) {
  Graph support(g.vertices(), f);
  return acyclic_orientations(quotient(support, components_partition(g.vertex_set(), h))).size();
}

bool has_closed_form(MonoidId) { return true; }

Terms closed_form_terms(MonoidId m, const Graph& g, const BasisKey& k) {
  const std::size_t n = g.num_vertices();
  switch (m) {
    case MonoidId::L: {
      std::vector<Label> rev(k.order().rbegin(), k.order().rend());
      const auto e = static_cast<std::uint32_t>(g.num_edges());
      const auto pairs = static_cast<std::uint32_t>(n * (n == 0 ? 0 : n - 1) / 2);
      return single(BasisKey::linear_order(std::move(rev)), sign(n) * QTPolynomial::monomial(e, pairs - e));
    }
    case MonoidId::AO: {
      std::vector<Arc> rev;
      for (const auto& a : k.arcs()) rev.push_back({a.to, a.from});
      return single(BasisKey::orientation(std::move(rev)),
                    sign(n) * QTPolynomial::monomial(static_cast<std::uint32_t>(g.num_edges()), 0));
    }
    case MonoidId::Sigma:
    case MonoidId::SSigma: {
      auto [adj, non] = composition_crossings(g, k.blocks());
      const QTPolynomial weight = QTPolynomial::monomial(adj, non);
      std::vector<VertexSet> rev(k.blocks().rbegin(), k.blocks().rend());
      Terms out;
      for (auto& c : refinements(rev)) {
        const std::size_t len = c.size();
        accumulate(out, BasisKey::composition(std::move(c)), sign(len) * weight);
      }
      return out;
    }
    case MonoidId::Pi_p:
    case MonoidId::SPi_p:
      return single(k, sign(k.blocks().size()));
    case MonoidId::Pi_m:
    case MonoidId::SPi_m:
      return via_p_basis(m, g, k);
    case MonoidId::FL_M:
    case MonoidId::Match_M:
      return flat_m_closed_form(g, k);
    case MonoidId::FL_P:
    case MonoidId::Match_P:
      return single(k, sign(components_partition(g.vertex_set(), k.edges()).size()));
    case MonoidId::E:
      return single(k, sign(n));
  }
  return {};
}

Terms sigma_refinement_weighted_terms(const Graph& g, const BasisKey& k) {
  if (k.kind() != KeyKind::Composition) throw InputError("expected a set composition key");
  std::vector<VertexSet> rev(k.blocks().rbegin(), k.blocks().rend());
  Terms out;
  for (auto& c : refinements(rev)) {
    auto [adj, non] = composition_crossings(g, c);
    const std::size_t len = c.size();
    accumulate(out, BasisKey::composition(std::move(c)), sign(len) * QTPolynomial::monomial(adj, non));
  }
  return out;
}

Element antipode(MonoidId m, const GraphPtr& g, const BasisKey& k, AntipodeMethod method) {
  require_valid_key(m, *g, k);
  switch (method) {
    case AntipodeMethod::Takeuchi:
      return Element(m, g, takeuchi_terms(m, *g, g->vertex_set(), k));
    case AntipodeMethod::MilnorMooreLeft:
    case AntipodeMethod::MilnorMooreRight: {
      MilnorMooreSolver solver(m, g,
                               method == AntipodeMethod::MilnorMooreLeft ? MilnorMooreSolver::Side::Left
                                                                         : MilnorMooreSolver::Side::Right);
      return Element(m, g, solver.apply(g->vertex_set(), k));
    }
    case AntipodeMethod::Closed:
      return Element(m, g, closed_form_terms(m, *g, k));
  }
  return Element(m, g);
}

Element antipode(const Element& x, AntipodeMethod method) {
  return linear_extend(x, x.monoid(), x.graph_ptr(),
                       [&](const BasisKey& k) { return antipode(x.monoid(), x.graph_ptr(), k, method); });
}

}  // namespace grhopf

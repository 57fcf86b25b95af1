#include "grhopf/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "grhopf/antipode.hpp"
#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"
#include "grhopf/structures.hpp"

namespace grhopf {

std::size_t VerificationReport::claimed_count() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.claimed; }));
}

std::size_t VerificationReport::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.claimed && !r.passed; }));
}

std::size_t VerificationReport::informational_failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.claimed && !r.passed; }));
}

unsigned default_jobs() {
  if (const char* env = std::getenv("GRHOPF_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Graph> corpus(std::size_t n_max) {
  std::vector<Graph> out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto labels = numbered_labels(n);
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(labels[i], labels[j]);
    }
    if (pairs.size() > 30) throw InputError("corpus size limited to 8 vertices");
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1) edges.push_back(pairs[e]);
      }
      out.emplace_back(labels, std::move(edges));
    }
  }
  return out;
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  const auto labels = numbered_labels(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() & 1) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return Graph(labels, std::move(edges));
}

namespace {

struct Witness {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

class Recorder {
 public:
  Recorder(std::string suite, std::string subject, const Graph& g)
      : suite_(std::move(suite)), subject_(std::move(subject)), graph_(g.canonical_id()) {}

  template <class Describe>
  void check(const std::string& id, bool ok, Describe&& describe, bool claimed = true) {
    CheckRecord& r = record(id, claimed);
    ++r.instances;
    if (!ok && r.passed) {
      r.passed = false;
      Witness w = describe();
      r.inputs = std::move(w.inputs);
      r.lhs = std::move(w.lhs);
      r.rhs = std::move(w.rhs);
    }
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  CheckRecord& record(const std::string& id, bool claimed) {
    auto [it, inserted] = index_.try_emplace(id, records_.size());
    if (inserted) {
      CheckRecord r;
      r.suite = suite_;
      r.subject = subject_;
      r.graph = graph_;
      r.check = id;
      r.claimed = claimed;
      records_.push_back(std::move(r));
    }
    return records_[it->second];
  }

  std::string suite_;
  std::string subject_;
  std::string graph_;
  std::vector<CheckRecord> records_;
  std::map<std::string, std::size_t> index_;
};

// Vertex subsets of a graph addressed by bitmask over the sorted vertex set,
// with lazily built induced subgraphs and bases.
class Subsets {
 public:
  explicit Subsets(const Graph& g) : g_(g), n_(g.num_vertices()) {
    if (n_ > 16) throw InputError("verification limited to 16 vertices");
    const std::size_t count = std::size_t{1} << n_;
    sets_.resize(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      for (std::size_t i = 0; i < n_; ++i) {
        if ((mask >> i) & 1) sets_[mask].push_back(g.vertex_set()[i]);
      }
    }
    graphs_.resize(count);
  }

  std::size_t full() const { return (std::size_t{1} << n_) - 1; }
  std::size_t count() const { return std::size_t{1} << n_; }
  const VertexSet& set(std::size_t mask) const { return sets_[mask]; }

  const Graph& graph(std::size_t mask) {
    if (!graphs_[mask]) graphs_[mask] = induced_subgraph(g_, sets_[mask]);
    return *graphs_[mask];
  }

  const std::vector<BasisKey>& basis_of(MonoidId m, std::size_t mask) {
    auto& table = bases_[m];
    if (table.empty()) table.resize(count());
    if (!table[mask]) table[mask] = basis(m, graph(mask));
    return *table[mask];
  }

  bool contains(MonoidId m, std::size_t mask, const BasisKey& k) {
    auto& table = members_[m];
    if (table.empty()) table.resize(count());
    if (!table[mask]) {
      const auto& b = basis_of(m, mask);
      table[mask].emplace(b.begin(), b.end());
    }
    return table[mask]->count(k) > 0;
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::vector<VertexSet> sets_;
  std::vector<std::optional<Graph>> graphs_;
  std::map<MonoidId, std::vector<std::optional<std::vector<BasisKey>>>> bases_;
  std::map<MonoidId, std::vector<std::optional<std::set<BasisKey>>>> members_;
};

std::string split_text(const VertexSet& s, const VertexSet& t) {
  auto side = [](const VertexSet& x) {
    std::string out;
    for (const auto& v : x) {
      if (!out.empty()) out += ",";
      out += v;
    }
    return out;
  };
  return side(s) + "|" + side(t);
}

std::string key_text(const BasisKey& k) { return "[" + k.literal() + "]"; }

std::string term_text(const std::optional<CoproductTerm>& t) {
  if (!t) return "0";
  TensorTerms terms;
  accumulate(terms, TensorKey{t->left, t->right}, t->coeff);
  return format_tensor_terms(terms);
}

bool same_term(const std::optional<CoproductTerm>& a, const std::optional<CoproductTerm>& b) {
  if (!a || !b) return !a && !b;
  return a->left == b->left && a->right == b->right && a->coeff == b->coeff;
}

std::optional<CoproductTerm> specialized(std::optional<CoproductTerm> t, bool q1, bool t1) {
  if (t) t->coeff = t->coeff.specialize(q1, t1);
  return t;
}

bool commutative_family(MonoidId m) {
  switch (m) {
    case MonoidId::Pi_m:
    case MonoidId::Pi_p:
    case MonoidId::SPi_m:
    case MonoidId::SPi_p:
    case MonoidId::FL_M:
    case MonoidId::FL_P:
    case MonoidId::Match_M:
    case MonoidId::Match_P:
    case MonoidId::E:
      return true;
    default:
      return false;
  }
}

std::string mname(MonoidId m) { return std::string(monoid_name(m)); }

}  // namespace

std::vector<CheckRecord> check_bimonoid(MonoidId m, const Graph& g) {
  Recorder rec("bimonoid", mname(m), g);
  Subsets sub(g);
  const std::size_t full = sub.full();
  const auto& v = sub.set(full);
  const BasisKey e = empty_key(m);

  // Unit and counit laws, and closure of the coproduct.
  for (const auto& k : sub.basis_of(m, full)) {
    const auto left_unit = product_key(m, g, {}, v, e, k);
    const auto right_unit = product_key(m, g, v, {}, k, e);
    rec.check("unit", left_unit == k && right_unit == k, [&] {
      return Witness{"key " + key_text(k), key_text(left_unit) + " ; " + key_text(right_unit), key_text(k)};
    });
    const auto c1 = coproduct_term(m, g, {}, v, k);
    const auto c2 = coproduct_term(m, g, v, {}, k);
    const std::optional<CoproductTerm> want1 = CoproductTerm{e, k, QTPolynomial::one()};
    const std::optional<CoproductTerm> want2 = CoproductTerm{k, e, QTPolynomial::one()};
    rec.check("counit", same_term(c1, want1) && same_term(c2, want2), [&] {
      return Witness{"key " + key_text(k), term_text(c1) + " ; " + term_text(c2),
                     term_text(want1) + " ; " + term_text(want2)};
    });
    for (std::size_t s = 0; s <= full; ++s) {
      const std::size_t t = full & ~s;
      const auto term = coproduct_term(m, g, sub.set(s), sub.set(t), k);
      const bool ok = !term || (sub.contains(m, s, term->left) && sub.contains(m, t, term->right));
      rec.check("coproduct_closure", ok, [&] {
        return Witness{"split " + split_text(sub.set(s), sub.set(t)) + ", key " + key_text(k), term_text(term),
                       "keys in the basis of the restrictions"};
      });
    }
  }

  // Product closure.
  for (std::size_t s = 0; s <= full; ++s) {
    const std::size_t t = full & ~s;
    for (const auto& x : sub.basis_of(m, s)) {
      for (const auto& y : sub.basis_of(m, t)) {
        const auto p = product_key(m, g, sub.set(s), sub.set(t), x, y);
        rec.check("product_closure", sub.contains(m, full, p), [&] {
          return Witness{"split " + split_text(sub.set(s), sub.set(t)) + ", " + key_text(x) + " (x) " + key_text(y),
                         key_text(p), "a basis key of the whole graph"};
        });
      }
    }
  }

  // Associativity and coassociativity over ordered 3-splits a|b|c.
  for (std::size_t a = 0; a <= full; ++a) {
    const std::size_t rest = full & ~a;
    for (std::size_t b = rest;; b = (b - 1) & rest) {
      const std::size_t c = rest & ~b;
      const auto &A = sub.set(a), &B = sub.set(b), &C = sub.set(c);
      const auto& AB = sub.set(a | b);
      const auto& BC = sub.set(b | c);
      for (const auto& x : sub.basis_of(m, a)) {
        for (const auto& y : sub.basis_of(m, b)) {
          const auto xy = product_key(m, g, A, B, x, y);
          for (const auto& z : sub.basis_of(m, c)) {
            const auto lhs = product_key(m, g, AB, C, xy, z);
            const auto rhs = product_key(m, g, A, BC, x, product_key(m, g, B, C, y, z));
            rec.check("associativity", lhs == rhs, [&] {
              return Witness{"blocks " + split_text(A, B) + "|" + split_text(C, {}) + ", keys " + key_text(x) + " " +
                                 key_text(y) + " " + key_text(z),
                             key_text(lhs), key_text(rhs)};
            });
          }
        }
      }
      for (const auto& k : sub.basis_of(m, full)) {
        std::optional<std::tuple<BasisKey, BasisKey, BasisKey, QTPolynomial>> lhs, rhs;
        if (auto t1 = coproduct_term(m, g, AB, C, k)) {
          if (auto t2 = coproduct_term(m, g, A, B, t1->left)) {
            lhs.emplace(t2->left, t2->right, t1->right, t1->coeff * t2->coeff);
          }
        }
        if (auto t3 = coproduct_term(m, g, A, BC, k)) {
          if (auto t4 = coproduct_term(m, g, B, C, t3->right)) {
            rhs.emplace(t3->left, t4->left, t4->right, t3->coeff * t4->coeff);
          }
        }
        auto show = [](const auto& side) -> std::string {
          if (!side) return "0";
          const auto& [x, y, z, c] = *side;
          return c.to_string() + " * " + key_text(x) + " (x) " + key_text(y) + " (x) " + key_text(z);
        };
        rec.check("coassociativity", lhs == rhs, [&] {
          return Witness{"blocks " + split_text(A, B) + "|" + split_text(C, {}) + ", key " + key_text(k), show(lhs),
                         show(rhs)};
        });
      }
      if (b == 0) break;
    }
  }

  // Braided compatibility, one component (S|T, A|B) at a time.
  for (std::size_t s = 0; s <= full; ++s) {
    const std::size_t t = full & ~s;
    for (std::size_t a = 0; a <= full; ++a) {
      const std::size_t b = full & ~a;
      const auto &SA = sub.set(s & a), &SB = sub.set(s & b), &TA = sub.set(t & a), &TB = sub.set(t & b);
      const QTPolynomial braid = braiding_coeff(m, g, SB, TA);
      for (const auto& x : sub.basis_of(m, s)) {
        const auto cx = coproduct_term(m, g, SA, SB, x);
        for (const auto& y : sub.basis_of(m, t)) {
          const auto k = product_key(m, g, sub.set(s), sub.set(t), x, y);
          const auto lhs = coproduct_term(m, g, sub.set(a), sub.set(b), k);
          std::optional<CoproductTerm> rhs;
          if (cx) {
            if (auto cy = coproduct_term(m, g, TA, TB, y)) {
              rhs = CoproductTerm{product_key(m, g, SA, TA, cx->left, cy->left),
                                  product_key(m, g, SB, TB, cx->right, cy->right), cx->coeff * cy->coeff * braid};
            }
          }
          rec.check("compatibility", same_term(lhs, rhs), [&] {
            return Witness{"product split " + split_text(sub.set(s), sub.set(t)) + ", coproduct split " +
                               split_text(sub.set(a), sub.set(b)) + ", keys " + key_text(x) + " " + key_text(y),
                           term_text(lhs), term_text(rhs)};
          });
        }
      }
    }
  }
  return rec.take();
}

namespace {

bool terms_in_basis(Subsets& sub, MonoidId m, std::size_t mask, const Terms& terms) {
  return std::all_of(terms.begin(), terms.end(), [&](const auto& kv) { return sub.contains(m, mask, kv.first); });
}

}  // namespace

std::vector<CheckRecord> check_antipode(MonoidId m, const Graph& g) {
  Recorder rec("antipode", mname(m), g);
  Subsets sub(g);
  const std::size_t full = sub.full();
  const auto gp = share(g);

  std::map<std::pair<std::size_t, BasisKey>, Terms> cache;
  auto takeuchi = [&](std::size_t mask, const BasisKey& k) -> const Terms& {
    auto key = std::make_pair(mask, k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache.emplace(key, takeuchi_terms(m, g, sub.set(mask), k)).first->second;
  };
  MilnorMooreSolver left(m, gp, MilnorMooreSolver::Side::Left);
  MilnorMooreSolver right(m, gp, MilnorMooreSolver::Side::Right);
  const bool sigma_like = m == MonoidId::Sigma || m == MonoidId::SSigma;
  const QTPolynomial one = QTPolynomial::one();

  for (const auto& k : sub.basis_of(m, full)) {
    const Terms& tk = takeuchi(full, k);
    const Terms& ml = left.apply(sub.set(full), k);
    const Terms& mr = right.apply(sub.set(full), k);
    const std::string in = "key " + key_text(k);
    rec.check("takeuchi=milnor_moore_left", tk == ml, [&] { return Witness{in, format_terms(tk), format_terms(ml)}; });
    rec.check("takeuchi=milnor_moore_right", tk == mr, [&] { return Witness{in, format_terms(tk), format_terms(mr)}; });
    const Terms closed = closed_form_terms(m, g, k);
    rec.check("takeuchi=closed_form", tk == closed, [&] { return Witness{in, format_terms(tk), format_terms(closed)}; });
    if (sigma_like) {
      const Terms weighted = sigma_refinement_weighted_terms(g, k);
      rec.check(
          "takeuchi=refinement_weighted_closed_form", tk == weighted,
          [&] { return Witness{in, format_terms(tk), format_terms(weighted)}; }, false);
    }
    rec.check("degree", terms_in_basis(sub, m, full, tk),
              [&] { return Witness{in, format_terms(tk), "keys in the basis of the same graph"}; });

    if (full != 0) {
      // Summed convolution identities: sum over all S|T of mu (s (x) id) Delta
      // and of mu (id (x) s) Delta vanish on a nonempty graph.
      Terms conv_left, conv_right;
      bool per_component_zero = true;
      for (std::size_t s = 0; s <= full; ++s) {
        const std::size_t t = full & ~s;
        const auto term = coproduct_term(m, g, sub.set(s), sub.set(t), k);
        if (!term) continue;
        Terms component;
        for (const auto& [lk, lc] : takeuchi(s, term->left)) {
          const auto p = product_key(m, g, sub.set(s), sub.set(t), lk, term->right);
          accumulate(conv_left, p, lc * term->coeff);
          accumulate(component, p, lc * term->coeff);
        }
        if (!component.empty()) per_component_zero = false;
        for (const auto& [rk, rc] : takeuchi(t, term->right)) {
          accumulate(conv_right, product_key(m, g, sub.set(s), sub.set(t), term->left, rk), rc * term->coeff);
        }
      }
      rec.check("convolution_s_id", conv_left.empty(), [&] { return Witness{in, format_terms(conv_left), "0"}; });
      rec.check("convolution_id_s", conv_right.empty(), [&] { return Witness{in, format_terms(conv_right), "0"}; });
      rec.check(
          "convolution_per_component", per_component_zero,
          [&] { return Witness{in, "some single S|T summand is nonzero", "0"}; }, false);
    }

    if (commutative_family(m)) {
      Terms twice;
      for (const auto& [k2, c2] : tk) accumulate(twice, takeuchi(full, k2), c2);
      Terms id;
      id.emplace(k, one);
      rec.check("involution", twice == id, [&] { return Witness{in, format_terms(twice), format_terms(id)}; });
    }
  }
  return rec.take();
}

std::vector<CheckRecord> check_commutativity(MonoidId m, const Graph& g) {
  Recorder rec("commutativity", mname(m), g);
  Subsets sub(g);
  const std::size_t full = sub.full();
  const bool family = commutative_family(m);
  const bool ao = m == MonoidId::AO;

  for (std::size_t s = 0; s <= full; ++s) {
    const std::size_t t = full & ~s;
    const auto &S = sub.set(s), &T = sub.set(t);
    const QTPolynomial braid = braiding_coeff(m, g, S, T);
    const std::size_t e = crossing_edges(g, S, T);
    const bool disjoint = e == 0;
    const bool joined = e == S.size() * T.size();
    for (const auto& x : sub.basis_of(m, s)) {
      for (const auto& y : sub.basis_of(m, t)) {
        const auto lhs = product_key(m, g, S, T, x, y);
        const auto rhs = product_key(m, g, T, S, y, x);
        // mu^{S,T} = mu^{T,S} o beta^{S,T}: the right side carries the braiding.
        const bool ok = braid.is_one() && lhs == rhs;
        auto witness = [&] {
          return Witness{"split " + split_text(S, T) + ", " + key_text(x) + " (x) " + key_text(y), key_text(lhs),
                         (braid.is_one() ? "" : braid.to_string() + "*") + key_text(rhs)};
        };
        rec.check("commutative", ok, witness, family);
        if (disjoint) rec.check("disjoint_commutative", ok, witness, family || ao);
        if (joined) rec.check("join_commutative", ok, witness, family);
      }
    }
    for (const auto& k : sub.basis_of(m, full)) {
      const auto lhs = coproduct_term(m, g, S, T, k);
      auto rhs = coproduct_term(m, g, T, S, k);
      if (rhs) {
        std::swap(rhs->left, rhs->right);
        rhs->coeff = rhs->coeff * braid;
      }
      const std::string in = "split " + split_text(S, T) + ", key " + key_text(k);
      rec.check(
          "cocommutative", same_term(lhs, rhs), [&] { return Witness{in, term_text(lhs), term_text(rhs)}; }, family);
      const auto lhs1 = specialized(lhs, true, true);
      const auto rhs1 = specialized(rhs, true, true);
      rec.check(
          "cocommutative_at_q_t_1", same_term(lhs1, rhs1),
          [&] { return Witness{in, term_text(lhs1), term_text(rhs1)}; }, family || ao);
    }
  }
  return rec.take();
}

std::vector<CheckRecord> check_basis_change(MonoidId m, const Graph& g) {
  Recorder rec("basis-change", mname(m), g);
  const MonoidId other = dual_basis(m);
  if (other == m) return {};
  const auto gp = share(g);
  for (const auto& k : basis(m, g)) {
    const Element x = Element::basis_vector(m, gp, k);
    const Element there = basis_change(m, other, x);
    const Element back = basis_change(other, m, there);
    rec.check("round_trip", back == x,
              [&] { return Witness{"key " + key_text(k), back.to_string(), x.to_string()}; });
    bool valid = std::all_of(there.terms().begin(), there.terms().end(),
                             [&](const auto& kv) { return is_valid_key(other, g, kv.first); });
    rec.check("target_keys_valid", valid,
              [&] { return Witness{"key " + key_text(k), there.to_string(), "keys of the other basis"}; });
  }
  return rec.take();
}

std::vector<CheckRecord> check_morphism(MorphismId f, const Graph& g) {
  const auto& info = morphism_info(f);
  Recorder rec("morphisms", std::string(info.name), g);
  Subsets sub(g);
  const std::size_t full = sub.full();
  const MonoidId dom = info.domain, cod = info.codomain;
  auto image = [&](std::size_t mask, const BasisKey& k) { return morphism_key(f, sub.graph(mask), k); };

  {
    const BasisKey u = morphism_key(f, Graph{}, empty_key(dom));
    rec.check("unit", u == empty_key(cod),
              [&] { return Witness{"empty key", key_text(u), key_text(empty_key(cod))}; });
  }
  for (const auto& k : sub.basis_of(dom, full)) {
    const BasisKey fk = image(full, k);
    rec.check("codomain", sub.contains(cod, full, fk),
              [&] { return Witness{"key " + key_text(k), key_text(fk), "a basis key of the codomain"}; });
    for (std::size_t s = 0; s <= full; ++s) {
      const std::size_t t = full & ~s;
      const auto lhs = specialized(coproduct_term(cod, g, sub.set(s), sub.set(t), fk), info.q_to_one, info.t_to_one);
      auto rhs = specialized(coproduct_term(dom, g, sub.set(s), sub.set(t), k), info.q_to_one, info.t_to_one);
      if (rhs) {
        rhs->left = image(s, rhs->left);
        rhs->right = image(t, rhs->right);
      }
      rec.check("coproduct", same_term(lhs, rhs), [&] {
        return Witness{"split " + split_text(sub.set(s), sub.set(t)) + ", key " + key_text(k), term_text(lhs),
                       term_text(rhs)};
      });
    }
  }
  for (std::size_t s = 0; s <= full; ++s) {
    const std::size_t t = full & ~s;
    for (const auto& x : sub.basis_of(dom, s)) {
      for (const auto& y : sub.basis_of(dom, t)) {
        const auto lhs = image(full, product_key(dom, g, sub.set(s), sub.set(t), x, y));
        const auto rhs = product_key(cod, g, sub.set(s), sub.set(t), image(s, x), image(t, y));
        rec.check("product", lhs == rhs, [&] {
          return Witness{"split " + split_text(sub.set(s), sub.set(t)) + ", " + key_text(x) + " (x) " + key_text(y),
                         key_text(lhs), key_text(rhs)};
        });
      }
    }
  }
  return rec.take();
}

std::vector<CheckRecord> check_diagrams(const Graph& g) {
  using F = MorphismId;
  std::vector<CheckRecord> out;
  auto apply = [&](F f, const BasisKey& k) { return morphism_key(f, g, k); };
  auto run = [&](const std::string& name, MonoidId dom, auto&& lhs, auto&& rhs) {
    Recorder rec("morphisms", name, g);
    for (const auto& k : basis(dom, g)) {
      const BasisKey a = lhs(k), b = rhs(k);
      rec.check("commutes", a == b, [&] { return Witness{"key " + key_text(k), key_text(a), key_text(b)}; });
    }
    for (auto& r : rec.take()) out.push_back(std::move(r));
  };

  // L -> Sigma directly: each vertex becomes a singleton block, in order.
  auto singletons = [](const BasisKey& k) {
    std::vector<VertexSet> blocks;
    for (const auto& v : k.order()) blocks.push_back({v});
    return BasisKey::composition(std::move(blocks));
  };
  run("diagram_L_SSigma_Sigma", MonoidId::L,
      [&](const BasisKey& k) { return apply(F::iota_SSigma_Sigma, apply(F::iota_L_SSigma, k)); }, singletons);
  run("diagram_L_SSigma_AO", MonoidId::L,
      [&](const BasisKey& k) { return apply(F::pi_arrow_SSigma, apply(F::iota_L_SSigma, k)); },
      [&](const BasisKey& k) { return apply(F::pi_arrow_L, k); });
  run("diagram_L_AO_E", MonoidId::L, [&](const BasisKey& k) { return apply(F::pi_AO_E, apply(F::pi_arrow_L, k)); },
      [&](const BasisKey& k) { return apply(F::pi_abelianize, k); });
  run("diagram_SPi_Pi_FL_E", MonoidId::SPi_m,
      [&](const BasisKey& k) { return apply(F::phi_Pi_FL, apply(F::iota_SPi_Pi, k)); },
      [&](const BasisKey& k) { return apply(F::iota_E_FL, apply(F::rho_SPi_E, k)); });
  run("diagram_SSigma_Sigma_Pi_SPi", MonoidId::SSigma,
      [&](const BasisKey& k) { return apply(F::iota_SPi_Pi, apply(F::pi_SSigma_SPi, k)); },
      [&](const BasisKey& k) { return apply(F::pi_Sigma_Pi, apply(F::iota_SSigma_Sigma, k)); });
  run("diagram_SSigma_SPi_AO_E", MonoidId::SSigma,
      [&](const BasisKey& k) { return apply(F::rho_SPi_E, apply(F::pi_SSigma_SPi, k)); },
      [&](const BasisKey& k) { return apply(F::pi_AO_E, apply(F::pi_arrow_SSigma, k)); });
  run("diagram_L_SSigma_SPi_E_abelianization", MonoidId::L,
      [&](const BasisKey& k) { return apply(F::rho_SPi_E, apply(F::pi_SSigma_SPi, apply(F::iota_L_SSigma, k))); },
      [&](const BasisKey& k) { return apply(F::pi_abelianize, k); });
  return out;
}

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Bell numbers from the Bell triangle.
std::uint64_t bell(std::size_t n) {
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// Every structure constant M produces on g: braiding, coproduct coefficients
// and antipode coefficients.
std::vector<QTPolynomial> structure_constants(MonoidId m, const Graph& g) {
  std::vector<QTPolynomial> out;
  Subsets sub(g);
  const std::size_t full = sub.full();
  MilnorMooreSolver solver(m, share(g), MilnorMooreSolver::Side::Left);
  for (const auto& k : sub.basis_of(m, full)) {
    for (std::size_t s = 0; s <= full; ++s) {
      if (auto term = coproduct_term(m, g, sub.set(s), sub.set(full & ~s), k)) out.push_back(term->coeff);
    }
    for (const auto& [sk, c] : solver.apply(sub.set(full), k)) out.push_back(c);
  }
  for (std::size_t s = 0; s <= full; ++s) out.push_back(braiding_coeff(m, g, sub.set(s), sub.set(full & ~s)));
  return out;
}

}  // namespace

std::vector<CheckRecord> check_functors(const Graph& g, bool coproduct_swap) {
  std::vector<CheckRecord> out;
  const Graph gbar = complement(g);
  Subsets sub(g);
  const std::size_t full = sub.full();
  {
    Recorder rec("functors", "graph", g);
    rec.check("double_complement", complement(gbar) == g,
              [&] { return Witness{"graph", complement(gbar).canonical_id(), g.canonical_id()}; });
    for (std::size_t s = 0; s <= full; ++s) {
      const auto &S = sub.set(s), &T = sub.set(full & ~s);
      const auto a = braiding_coeff(gbar, S, T), b = braiding_coeff(g, S, T).swap_qt();
      rec.check("complement_swaps_braiding", a == b,
                [&] { return Witness{"split " + split_text(S, T), a.to_string(), b.to_string()}; });
      const Graph lhs = complement(induced_subgraph(g, S)), rhs = induced_subgraph(gbar, S);
      rec.check("complement_commutes_with_restriction", lhs == rhs,
                [&] { return Witness{"subset " + vset::to_string(S), lhs.canonical_id(), rhs.canonical_id()}; });
      for (MonoidId m : {MonoidId::L, MonoidId::Sigma}) {
        if (!coproduct_swap) break;
        for (const auto& k : sub.basis_of(m, full)) {
          const auto x = coproduct_term(m, gbar, S, T, k);
          auto y = coproduct_term(m, g, S, T, k);
          if (y) y->coeff = y->coeff.swap_qt();
          rec.check("complement_swaps_" + mname(m) + "_coproduct", same_term(x, y), [&] {
            return Witness{"split " + split_text(S, T) + ", key " + key_text(k), term_text(x), term_text(y)};
          });
        }
      }
    }
    for (auto& r : rec.take()) out.push_back(std::move(r));
  }

  const std::size_t n = g.num_vertices();
  const bool complete = g.num_edges() == n * (n == 0 ? 0 : n - 1) / 2;
  const bool discrete = g.num_edges() == 0;
  auto counts = [&](Recorder& rec, MonoidId m, std::uint64_t expected) {
    const auto got = sub.basis_of(m, full).size();
    rec.check("basis_count_" + mname(m), got == expected,
              [&] { return Witness{"graph", std::to_string(got), std::to_string(expected)}; });
  };
  if (complete || discrete) {
    for (MonoidId m : all_monoids()) {
      Recorder rec("functors", mname(m), g);
      for (const auto& c : structure_constants(m, g)) {
        if (complete) {
          rec.check("clique_t_free", !c.has_t(), [&] { return Witness{"complete graph", c.to_string(), "no t"}; });
        }
        if (discrete) {
          rec.check("discrete_q_free", !c.has_q(), [&] { return Witness{"discrete graph", c.to_string(), "no q"}; });
        }
      }
      if (complete) {
        if (m == MonoidId::L || m == MonoidId::AO || m == MonoidId::SSigma) counts(rec, m, factorial(n));
        if (m == MonoidId::FL_M) counts(rec, m, bell(n));
        if (m == MonoidId::SPi_m) counts(rec, m, 1);
      }
      if (discrete) {
        if (m == MonoidId::SPi_m) counts(rec, m, bell(n));
        if (m == MonoidId::FL_M || m == MonoidId::AO) counts(rec, m, 1);
      }
      for (auto& r : rec.take()) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckRecord> check_stanley(const Graph& g) {
  Recorder rec("stanley", "AO", g);
  const auto chi = chromatic_polynomial(g);
  std::int64_t value = evaluate_integer_polynomial(chi, -1);
  if (g.num_vertices() % 2 == 1) value = -value;
  const auto count = static_cast<std::int64_t>(acyclic_orientations(g).size());
  rec.check("acyclic_orientations=chromatic_at_minus_1", count == value,
            [&] { return Witness{"graph", std::to_string(count), std::to_string(value)}; });
  return rec.take();
}

std::vector<std::string_view> suite_names() {
  return {"bimonoid", "antipode", "commutativity", "basis-change", "morphisms", "functors", "stanley", "all"};
}

namespace {

using Task = std::function<std::vector<CheckRecord>()>;

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < n; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<CheckRecord> out;
  for (auto& r : results) {
    for (auto& rec : r) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

VerificationReport run_suite(std::string_view suite, std::size_t n_max, const std::vector<MonoidId>& monoids,
                             const SuiteOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InputError("unknown suite `" + std::string(suite) + "`");
  }
  if (n_max > options.cap) {
    throw InputError("nmax " + std::to_string(n_max) + " exceeds the cap of " + std::to_string(options.cap));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Graph> graphs = corpus(n_max);

  // Seeded sample of the top layer for the monoids with large bases.
  std::set<std::size_t> sampled;
  {
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (graphs[i].num_vertices() >= 5) top.push_back(i);
    }
    std::mt19937_64 rng(options.seed);
    std::shuffle(top.begin(), top.end(), rng);
    for (std::size_t i = 0; i < std::min(options.sample_size, top.size()); ++i) sampled.insert(top[i]);
  }
  auto include = [&](std::size_t i) { return graphs[i].num_vertices() < 5 || sampled.count(i) > 0; };

  std::vector<Task> tasks;
  auto want = [&](std::string_view s) { return suite == s || suite == "all"; };
  using Check = std::vector<CheckRecord> (*)(MonoidId, const Graph&);
  auto per_monoid = [&](Check check) {
    for (MonoidId m : monoids) {
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (include(i)) tasks.emplace_back([check, m, &g = graphs[i]] { return check(m, g); });
      }
    }
  };
  if (want("bimonoid")) per_monoid(&check_bimonoid);
  if (want("antipode")) per_monoid(&check_antipode);
  if (want("commutativity")) per_monoid(&check_commutativity);
  if (want("basis-change")) {
    for (MonoidId m : monoids) {
      for (const auto& g : graphs) tasks.emplace_back([m, &g] { return check_basis_change(m, g); });
    }
  }
  if (want("morphisms")) {
    for (MorphismId f : all_morphisms()) {
      for (const auto& g : graphs) tasks.emplace_back([f, &g] { return check_morphism(f, g); });
    }
    for (const auto& g : graphs) tasks.emplace_back([&g] { return check_diagrams(g); });
  }
  if (want("functors")) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      tasks.emplace_back([&g = graphs[i], full = include(i)] { return check_functors(g, full); });
    }
  }
  std::vector<Graph> extra;
  if (want("stanley")) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.random_graphs; ++i) extra.push_back(random_graph(n_max + 1, rng));
    for (const auto& g : graphs) tasks.emplace_back([&g] { return check_stanley(g); });
    for (const auto& g : extra) tasks.emplace_back([&g] { return check_stanley(g); });
  }

  VerificationReport report;
  report.suite = std::string(suite);
  report.n_max = n_max;
  report.graph_count = graphs.size() + extra.size();
  for (MonoidId m : monoids) report.monoids.push_back(mname(m));
  report.seed = options.seed;
  report.records = run_tasks(tasks, options.jobs == 0 ? default_jobs() : options.jobs);
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace grhopf

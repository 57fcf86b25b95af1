#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "grhopf/basis_key.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/monoid.hpp"
#include "grhopf/qt_polynomial.hpp"

namespace grhopf {

using GraphPtr = std::shared_ptr<const Graph>;
inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Sparse Z[q,t]-combination of keys; never stores a zero coefficient.
using Terms = std::map<BasisKey, QTPolynomial>;
using TensorKey = std::pair<BasisKey, BasisKey>;
using TensorTerms = std::map<TensorKey, QTPolynomial>;

template <class Key>
void accumulate(std::map<Key, QTPolynomial>& into, const Key& key, const QTPolynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = into.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) into.erase(it);
  }
}

template <class Key>
void accumulate(std::map<Key, QTPolynomial>& into, const std::map<Key, QTPolynomial>& from,
                const QTPolynomial& scale) {
  if (scale.is_zero()) return;
  for (const auto& [key, c] : from) accumulate(into, key, scale.is_one() ? c : c * scale);
}

/// Text forms such as `q*[a<b] + -1*[b<a]`; zero prints as `0`.
std::string format_terms(const Terms& terms);
std::string format_tensor_terms(const TensorTerms& terms);

/// Element of g[G] for a catalog monoid g.
class Element {
 public:
  Element(MonoidId monoid, GraphPtr graph);
  /// Throws InputError if a key's tag does not belong to `monoid`.
  Element(MonoidId monoid, GraphPtr graph, const Terms& terms);

  static Element basis_vector(MonoidId monoid, GraphPtr graph, const BasisKey& key,
                              const QTPolynomial& coeff = QTPolynomial::one());

  MonoidId monoid() const { return monoid_; }
  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QTPolynomial coefficient(const BasisKey& key) const;

  void add(const BasisKey& key, const QTPolynomial& coeff);

  Element scaled(const QTPolynomial& c) const;
  Element specialized(bool q_to_one, bool t_to_one) const;
  std::string to_string() const;

  bool operator==(const Element& other) const {
    return monoid_ == other.monoid_ && *graph_ == *other.graph_ && terms_ == other.terms_;
  }

 private:
  void check_kind(const BasisKey& key) const;

  MonoidId monoid_;
  GraphPtr graph_;
  Terms terms_;
};

/// Element of g[G_S] (x) g[G_T].
class TensorElement {
 public:
  TensorElement(MonoidId monoid, GraphPtr left_graph, GraphPtr right_graph, TensorTerms terms = {});

  MonoidId monoid() const { return monoid_; }
  const Graph& left_graph() const { return *left_; }
  const Graph& right_graph() const { return *right_; }
  const GraphPtr& left_graph_ptr() const { return left_; }
  const GraphPtr& right_graph_ptr() const { return right_; }
  const TensorTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const BasisKey& left, const BasisKey& right, const QTPolynomial& coeff);
  std::string to_string() const;

  bool operator==(const TensorElement& o) const {
    return monoid_ == o.monoid_ && *left_ == *o.left_ && *right_ == *o.right_ && terms_ == o.terms_;
  }

 private:
  MonoidId monoid_;
  GraphPtr left_;
  GraphPtr right_;
  TensorTerms terms_;
};

/// c1*a + c2*b. Throws InputError unless a and b share monoid and graph.
Element elem_combine(const Element& a, const Element& b, const QTPolynomial& c1, const QTPolynomial& c2);

/// Sum of coeff(k) * f(k) over the keys of x; f returns an Element.
template <class F>
Element linear_extend(const Element& x, MonoidId target, GraphPtr target_graph, F&& f) {
  Terms out;
  for (const auto& [key, c] : x.terms()) accumulate(out, f(key).terms(), c);
  return Element(target, std::move(target_graph), out);
}

/// Table-driven linear extension; a key missing from the table is a
/// programming error and raises std::logic_error.
Element linear_extend(const std::map<BasisKey, Element>& table, const Element& x);
TensorElement linear_extend(const std::map<BasisKey, TensorElement>& table, const Element& x);

}  // namespace grhopf

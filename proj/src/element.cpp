#include "grhopf/element.hpp"

#include <algorithm>
#include <optional>

#include "grhopf/errors.hpp"

namespace grhopf {

Element::Element(MonoidId monoid, GraphPtr graph) : monoid_(monoid), graph_(std::move(graph)) {
  if (!graph_) throw InputError("element needs a graph");
}

Element::Element(MonoidId monoid, GraphPtr graph, const Terms& terms) : Element(monoid, std::move(graph)) {
  for (const auto& [key, c] : terms) add(key, c);
}

Element Element::basis_vector(MonoidId monoid, GraphPtr graph, const BasisKey& key, const QTPolynomial& coeff) {
  Element e(monoid, std::move(graph));
  e.add(key, coeff);
  return e;
}

void Element::check_kind(const BasisKey& key) const {
  if (key.kind() != monoid_info(monoid_).key_kind) {
    throw InputError(std::string(key_kind_name(key.kind())) + " key does not belong to monoid " +
                     std::string(monoid_name(monoid_)));
  }
}

QTPolynomial Element::coefficient(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QTPolynomial{} : it->second;
}

void Element::add(const BasisKey& key, const QTPolynomial& coeff) {
  check_kind(key);
  accumulate(terms_, key, coeff);
}

Element Element::scaled(const QTPolynomial& c) const {
  Element out(monoid_, graph_);
  accumulate(out.terms_, terms_, c);
  return out;
}

Element Element::specialized(bool q_to_one, bool t_to_one) const {
  Element out(monoid_, graph_);
  for (const auto& [key, c] : terms_) accumulate(out.terms_, key, c.specialize(q_to_one, t_to_one));
  return out;
}

namespace {

std::string coefficient_prefix(const QTPolynomial& c) {
  if (c.is_one()) return "";
  if (c == QTPolynomial::constant(-1)) return "-";
  if (c.terms().size() == 1) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string format_terms(const Terms& terms) {
  if (terms.empty()) return "0";
  // Sorted by literal, like the JSON form.
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [key, c] : terms) parts.emplace_back(key.literal(), coefficient_prefix(c));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [lit, prefix] : parts) {
    if (!out.empty()) out += " + ";
    out += prefix + "[" + lit + "]";
  }
  return out;
}

std::string format_tensor_terms(const TensorTerms& terms) {
  if (terms.empty()) return "0";
  std::vector<std::pair<std::string, std::string>> parts;
  for (const auto& [pair, c] : terms) {
    parts.emplace_back("[" + pair.first.literal() + "] (x) [" + pair.second.literal() + "]", coefficient_prefix(c));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [lit, prefix] : parts) {
    if (!out.empty()) out += " + ";
    out += prefix + lit;
  }
  return out;
}

std::string Element::to_string() const { return format_terms(terms_); }

TensorElement::TensorElement(MonoidId monoid, GraphPtr left_graph, GraphPtr right_graph, TensorTerms terms)
    : monoid_(monoid), left_(std::move(left_graph)), right_(std::move(right_graph)) {
  for (const auto& [pair, c] : terms) add(pair.first, pair.second, c);
}

void TensorElement::add(const BasisKey& left, const BasisKey& right, const QTPolynomial& coeff) {
  accumulate(terms_, TensorKey{left, right}, coeff);
}

std::string TensorElement::to_string() const { return format_tensor_terms(terms_); }

Element elem_combine(const Element& a, const Element& b, const QTPolynomial& c1, const QTPolynomial& c2) {
  if (a.monoid() != b.monoid()) throw InputError("elem_combine: monoids differ");
  if (!(a.graph() == b.graph())) throw InputError("elem_combine: graphs differ");
  Terms out;
  accumulate(out, a.terms(), c1);
  accumulate(out, b.terms(), c2);
  return Element(a.monoid(), a.graph_ptr(), out);
}

Element linear_extend(const std::map<BasisKey, Element>& table, const Element& x) {
  std::optional<Element> out;
  for (const auto& [key, c] : x.terms()) {
    auto it = table.find(key);
    if (it == table.end()) throw std::logic_error("linear_extend: map undefined on [" + key.literal() + "]");
    if (!out) out.emplace(it->second.monoid(), it->second.graph_ptr());
    for (const auto& [k2, c2] : it->second.terms()) out->add(k2, c2 * c);
  }
  if (!out) {
    if (table.empty()) throw std::logic_error("linear_extend: empty table gives no codomain");
    const Element& any = table.begin()->second;
    return Element(any.monoid(), any.graph_ptr());
  }
  return *out;
}

TensorElement linear_extend(const std::map<BasisKey, TensorElement>& table, const Element& x) {
  if (table.empty()) throw std::logic_error("linear_extend: empty table gives no codomain");
  const TensorElement& any = table.begin()->second;
  TensorElement out(any.monoid(), any.left_graph_ptr(), any.right_graph_ptr());
  for (const auto& [key, c] : x.terms()) {
    auto it = table.find(key);
    if (it == table.end()) throw std::logic_error("linear_extend: map undefined on [" + key.literal() + "]");
    for (const auto& [pair, c2] : it->second.terms()) out.add(pair.first, pair.second, c2 * c);
  }
  return out;
}

}  // namespace grhopf

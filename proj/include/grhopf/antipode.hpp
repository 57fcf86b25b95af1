#pragma once

#include <map>
#include <string_view>
#include <utility>

#include "grhopf/basis_key.hpp"
#include "grhopf/element.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/monoid.hpp"

namespace grhopf {

enum class AntipodeMethod { Takeuchi, MilnorMooreLeft, MilnorMooreRight, Closed };

std::string_view antipode_method_name(AntipodeMethod m);
/// Accepts takeuchi, milnor-moore-left, milnor-moore-right, closed.
AntipodeMethod parse_antipode_method(std::string_view name);

/// Alternating sum over all set compositions of `v`. The k-fold coproduct
/// peels blocks off from the left; the k-fold product multiplies left to
/// right. On the empty set this is the identity. `g` is any graph containing
/// `v`; only G_v matters.
Terms takeuchi_terms(MonoidId m, const Graph& g, const VertexSet& v, const BasisKey& k);

/// Recursive antipode with a per-instance cache keyed by (vertex subset, key).
/// Left side: s(x) = -sum over S nonempty of mu(id (x) s)(Delta^{S,T} x).
/// Right side: s(x) = -sum over T nonempty of mu(s (x) id)(Delta^{S,T} x).
class MilnorMooreSolver {
 public:
  enum class Side { Left, Right };
  MilnorMooreSolver(MonoidId m, GraphPtr ambient, Side side);
  const Terms& apply(const VertexSet& v, const BasisKey& k);
  std::size_t cache_size() const { return memo_.size(); }

 private:
  MonoidId monoid_;
  GraphPtr graph_;
  Side side_;
  std::map<std::pair<VertexSet, BasisKey>, Terms> memo_;
};

/// Every catalog monoid has a closed form; Pi_m and SPi_m go through the
/// p-basis. For Sigma and SSigma this is
///   s(C) = q^{e(G,C)} t^{e(Gbar,C)} * sum over C' <= reverse(C) of (-1)^{|C'|} C'.
bool has_closed_form(MonoidId m);
Terms closed_form_terms(MonoidId m, const Graph& g, const BasisKey& k);

/// The Sigma formula with the crossing weight taken on each refinement C'
/// instead of on C. It does not agree with the antipode in general and is
/// kept so the verifier can report on it.
Terms sigma_refinement_weighted_terms(const Graph& g, const BasisKey& k);

/// Checked single-key entry points; the key must be valid for g.
Element antipode(MonoidId m, const GraphPtr& g, const BasisKey& k, AntipodeMethod method);
/// Linear extension to a whole element.
Element antipode(const Element& x, AntipodeMethod method);

/// Number of acyclic orientations of the quotient of (V(G), F) by the
/// components of H.
std::size_t quotient_orientation_count(const Graph& g, const std::vector<Edge>& h, const std::vector<Edge>& f);

}  // namespace grhopf

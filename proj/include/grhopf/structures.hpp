#pragma once

#include <optional>
#include <vector>

#include "grhopf/basis_key.hpp"
#include "grhopf/element.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/monoid.hpp"
#include "grhopf/qt_polynomial.hpp"

namespace grhopf {

/// All basis keys of M[G], sorted by literal.
std::vector<BasisKey> basis(MonoidId m, const Graph& g);
bool is_valid_key(MonoidId m, const Graph& g, const BasisKey& k);
/// Throws InputError naming the monoid and graph if the key is invalid.
void require_valid_key(MonoidId m, const Graph& g, const BasisKey& k);

/// The key of the empty structure (unit of M on the empty graph).
BasisKey empty_key(MonoidId m);

/// q^{e(G,S,T)} t^{e(complement G,S,T)}. Throws InputError if S and T overlap.
QTPolynomial braiding_coeff(const Graph& g, const VertexSet& s, const VertexSet& t);
/// The braiding under which M is a bimonoid: full for L, Sigma, SSigma; t = 1
/// for AO; q = t = 1 for the remaining monoids.
QTPolynomial braiding_coeff(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t);

/// Structure maps on keys. Here `g` may be any graph containing S and T as
/// vertex subsets: only adjacency between the involved vertices is read, so
/// callers can pass the ambient graph instead of the induced subgraph.
/// No validity checks are performed.
BasisKey product_key(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t, const BasisKey& x,
                     const BasisKey& y);

struct CoproductTerm {
  BasisKey left;
  BasisKey right;
  QTPolynomial coeff;
};
/// The single term of the S|T coproduct component, or nullopt when it is zero.
std::optional<CoproductTerm> coproduct_term(MonoidId m, const Graph& g, const VertexSet& s, const VertexSet& t,
                                            const BasisKey& k);

/// Checked, Element-level versions. `split` must be an ordered bipartition
/// of V(G); x must be valid for G_S and y for G_T.
Element product(MonoidId m, const Graph& g, const OrderedBipartition& split, const BasisKey& x, const BasisKey& y);
TensorElement coproduct_component(MonoidId m, const Graph& g, const OrderedBipartition& split, const BasisKey& k);

/// Linear extensions of the above to whole elements.
Element product(const OrderedBipartition& split, const Element& x, const Element& y, const GraphPtr& g);
TensorElement coproduct_component(const OrderedBipartition& split, const Element& x);

/// Unit of M: the empty-structure key on the empty graph.
Element unit(MonoidId m);
/// Counit: the coefficient of the empty-structure key; zero on nonempty graphs.
QTPolynomial counit(const Element& x);

/// Parses "a,b|c,d" into an ordered bipartition of V(G).
OrderedBipartition parse_split(const Graph& g, std::string_view text);

/// Change between the two bases of Pi, SPi, FL or Match. from == to is the
/// identity; other pairs throw InputError.
Element basis_change(MonoidId from, MonoidId to, const Element& x);
bool supports_basis_change(MonoidId from, MonoidId to);

}  // namespace grhopf

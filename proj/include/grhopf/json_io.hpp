#pragma once

#include <nlohmann/json.hpp>

#include "grhopf/element.hpp"
#include "grhopf/graph.hpp"
#include "grhopf/qt_polynomial.hpp"
#include "grhopf/verifier.hpp"

namespace grhopf {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// [[qexp, texp, coeff], ...] in canonical term order; zero is [].
Json poly_to_json(const QTPolynomial& p);
QTPolynomial poly_from_json(const Json& j);

/// {"vertices": [...declaration order], "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"monoid", "graph", "terms": [{"key": literal, "coeff": poly}]}, terms
/// sorted by key literal.
Json element_to_json(const Element& x);
/// Keys are parsed with the monoid's grammar and checked against the graph.
Element element_from_json(const Json& j);

/// {"monoid", "left_graph", "right_graph", "terms": [{"left", "right", "coeff"}]}
Json tensor_to_json(const TensorElement& x);

Json report_to_json(const VerificationReport& r);

}  // namespace grhopf

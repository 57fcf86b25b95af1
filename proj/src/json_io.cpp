#include "grhopf/json_io.hpp"

#include <algorithm>
#include <string>

#include "grhopf/errors.hpp"
#include "grhopf/structures.hpp"

namespace grhopf {

Json poly_to_json(const QTPolynomial& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back({t.q, t.t, t.coeff});
  return out;
}

QTPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("coefficient must be an array of [q, t, c] triples");
  QTPolynomial out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() || !term[1].is_number_unsigned() ||
        !term[2].is_number_integer()) {
      throw InputError("malformed coefficient term " + term.dump());
    }
    out += QTPolynomial::monomial(term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>(),
                                  term[2].get<std::int64_t>());
  }
  return out;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph(j.at("vertices").get<std::vector<Label>>(), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed graph JSON: ") + ex.what());
  }
}

namespace {

template <class Terms, class Emit>
Json sorted_terms(const Terms& terms, Emit&& emit) {
  std::vector<std::pair<std::string, Json>> rows;
  for (const auto& [key, c] : terms) rows.push_back(emit(key, c));
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (auto& [sort_key, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace

Json element_to_json(const Element& x) {
  return Json{{"monoid", monoid_name(x.monoid())},
              {"graph", graph_to_json(x.graph())},
              {"terms", sorted_terms(x.terms(), [](const BasisKey& k, const QTPolynomial& c) {
                 return std::make_pair(k.literal(), Json{{"key", k.literal()}, {"coeff", poly_to_json(c)}});
               })}};
}

Element element_from_json(const Json& j) {
  try {
    const MonoidId m = parse_monoid(j.at("monoid").get<std::string>());
    auto g = share(graph_from_json(j.at("graph")));
    Element out(m, g);
    for (const auto& term : j.at("terms")) {
      const BasisKey k = parse_key_literal(monoid_info(m).key_kind, term.at("key").get<std::string>());
      require_valid_key(m, *g, k);
      out.add(k, poly_from_json(term.at("coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed element JSON: ") + ex.what());
  }
}

Json tensor_to_json(const TensorElement& x) {
  return Json{{"monoid", monoid_name(x.monoid())},
              {"left_graph", graph_to_json(x.left_graph())},
              {"right_graph", graph_to_json(x.right_graph())},
              {"terms", sorted_terms(x.terms(), [](const TensorKey& k, const QTPolynomial& c) {
                 return std::make_pair(k.first.literal() + "\x1f" + k.second.literal(),
                                       Json{{"left", k.first.literal()},
                                            {"right", k.second.literal()},
                                            {"coeff", poly_to_json(c)}});
               })}};
}

Json report_to_json(const VerificationReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json row{{"suite", rec.suite},         {"subject", rec.subject}, {"graph", rec.graph},
             {"check", rec.check},         {"claimed", rec.claimed}, {"passed", rec.passed},
             {"instances", rec.instances}};
    if (!rec.passed) row["counterexample"] = Json{{"inputs", rec.inputs}, {"lhs", rec.lhs}, {"rhs", rec.rhs}};
    records.push_back(std::move(row));
  }
  return Json{{"schema_version", kReportSchemaVersion},
              {"suite", r.suite},
              {"corpus", {{"n_max", r.n_max}, {"graph_count", r.graph_count}}},
              {"monoids", r.monoids},
              {"seed", r.seed},
              {"totals",
               {{"records", r.records.size()},
                {"claimed", r.claimed_count()},
                {"failed", r.failed_count()},
                {"informational_failed", r.informational_failures()}}},
              {"all_passed", r.all_passed()},
              {"records", records},
              {"wall_time_seconds", r.wall_time_seconds}};
}

}  // namespace grhopf

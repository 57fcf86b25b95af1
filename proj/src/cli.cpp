#include "grhopf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "grhopf/antipode.hpp"
#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"
#include "grhopf/json_io.hpp"
#include "grhopf/morphisms.hpp"
#include "grhopf/structures.hpp"
#include "grhopf/verifier.hpp"

namespace grhopf {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

Graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const InputError& e) {
    throw InputError(path + ":" + e.what());
  }
}

BasisKey load_key(MonoidId m, const Graph& g, const std::string& text, const std::string& option) {
  try {
    BasisKey k = parse_key_literal(monoid_info(m).key_kind, text);
    require_valid_key(m, g, k);
    return k;
  } catch (const InputError& e) {
    throw InputError(option + " " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << "\n";
}

std::vector<MonoidId> parse_monoid_list(const std::string& text) {
  if (text == "all") return {all_monoids().begin(), all_monoids().end()};
  std::vector<MonoidId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_monoid(item));
  if (out.empty()) throw InputError("empty monoid list");
  return out;
}

struct Options {
  std::string monoid, graph, key, left, right, split, json, method = "all", from, to, name, suite,
      monoids = "all";
  bool list = false;
  std::size_t nmax = 0;
  std::uint64_t seed = SuiteOptions::kDefaultSeed;
  unsigned jobs = 0;
  std::size_t sample = SuiteOptions{}.sample_size;
  std::size_t random_graphs = SuiteOptions{}.random_graphs;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
  const MonoidId m = parse_monoid(o.monoid);
  const Graph g = load_graph(o.graph);
  const auto keys = basis(m, g);
  out << "monoid: " << monoid_name(m) << "\n";
  out << "graph: " << g.canonical_id() << "\n";
  out << "count: " << keys.size() << "\n";
  if (o.list) {
    for (const auto& k : keys) out << (k.literal().empty() ? "(empty)" : k.literal()) << "\n";
  }
  if (!o.json.empty()) {
    Json list = Json::array();
    for (const auto& k : keys) list.push_back(k.literal());
    write_json(o.json, Json{{"monoid", monoid_name(m)}, {"graph", graph_to_json(g)}, {"count", keys.size()},
                            {"keys", list}});
  }
  return kOk;
}

int cmd_product(const Options& o, std::ostream& out) {
  const MonoidId m = parse_monoid(o.monoid);
  const Graph g = load_graph(o.graph);
  const auto split = parse_split(g, o.split);
  const auto x = load_key(m, induced_subgraph(g, split.first), o.left, "--left");
  const auto y = load_key(m, induced_subgraph(g, split.second), o.right, "--right");
  const Element p = product(m, g, split, x, y);
  out << p.to_string() << "\n";
  if (!o.json.empty()) write_json(o.json, element_to_json(p));
  return kOk;
}

int cmd_coproduct(const Options& o, std::ostream& out) {
  const MonoidId m = parse_monoid(o.monoid);
  const Graph g = load_graph(o.graph);
  const auto split = parse_split(g, o.split);
  const auto k = load_key(m, g, o.key, "--key");
  const TensorElement d = coproduct_component(m, g, split, k);
  out << d.to_string() << "\n";
  if (!o.json.empty()) write_json(o.json, tensor_to_json(d));
  return kOk;
}

int cmd_antipode(const Options& o, std::ostream& out) {
  const MonoidId m = parse_monoid(o.monoid);
  const auto g = share(load_graph(o.graph));
  const auto k = load_key(m, *g, o.key, "--key");
  std::vector<AntipodeMethod> methods;
  if (o.method == "all") {
    methods = {AntipodeMethod::Takeuchi, AntipodeMethod::MilnorMooreLeft, AntipodeMethod::MilnorMooreRight,
               AntipodeMethod::Closed};
  } else {
    methods = {parse_antipode_method(o.method)};
  }
  Json results = Json::object();
  std::vector<Element> values;
  for (auto method : methods) {
    values.push_back(antipode(m, g, k, method));
    out << antipode_method_name(method) << ": " << values.back().to_string() << "\n";
    results[std::string(antipode_method_name(method))] = element_to_json(values.back());
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const Element& v) { return v == values.front(); });
  if (methods.size() > 1) out << (agree ? "AGREE" : "DISAGREE") << "\n";
  if (!o.json.empty()) write_json(o.json, Json{{"results", results}, {"agree", agree}});
  return agree ? kOk : kCheckFailed;
}

int cmd_basis_change(const Options& o, std::ostream& out) {
  const MonoidId from = parse_monoid(o.from);
  const MonoidId to = parse_monoid(o.to);
  if (!supports_basis_change(from, to)) {
    throw InputError("no basis change from " + o.from + " to " + o.to);
  }
  const auto g = share(load_graph(o.graph));
  const auto k = load_key(from, *g, o.key, "--key");
  const Element y = basis_change(from, to, Element::basis_vector(from, g, k));
  out << y.to_string() << "\n";
  if (!o.json.empty()) write_json(o.json, element_to_json(y));
  return kOk;
}

int cmd_morphism(const Options& o, std::ostream& out) {
  const MorphismId f = parse_morphism(o.name);
  const auto& info = morphism_info(f);
  const auto g = share(load_graph(o.graph));
  const auto k = load_key(info.domain, *g, o.key, "--key");
  const Element y = morphism_apply(f, Element::basis_vector(info.domain, g, k));
  out << y.to_string() << "\n";
  if (!o.json.empty()) write_json(o.json, element_to_json(y));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions opts;
  opts.seed = o.seed;
  opts.jobs = o.jobs;
  opts.sample_size = o.sample;
  opts.random_graphs = o.random_graphs;
  const auto report = run_suite(o.suite, o.nmax, parse_monoid_list(o.monoids), opts);
  out << "suite: " << report.suite << "\n";
  out << "nmax: " << report.n_max << "  graphs: " << report.graph_count << "  seed: " << report.seed << "\n";
  out << "records: " << report.records.size() << "  claimed: " << report.claimed_count()
      << "  failed: " << report.failed_count() << "\n";
  for (const auto& r : report.records) {
    if (r.claimed && !r.passed) {
      out << "FAIL " << r.subject << " " << r.check << " on " << r.graph << "\n"
          << "  inputs: " << r.inputs << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs << "\n";
    }
  }
  // Unclaimed checks, summarized by how many graphs they hold on.
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> info;
  for (const auto& r : report.records) {
    if (r.claimed) continue;
    auto& [holds, total] = info[{r.subject, r.check}];
    ++total;
    if (r.passed) ++holds;
  }
  for (const auto& [id, counts] : info) {
    out << "info " << id.first << " " << id.second << ": holds on " << counts.first << "/" << counts.second
        << " graphs\n";
  }
  out << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  if (!o.json.empty()) write_json(o.json, report_to_json(report));
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_corpus_stats(const Options& o, std::ostream& out) {
  if (o.nmax > SuiteOptions{}.cap) throw InputError("nmax exceeds the cap of " + std::to_string(SuiteOptions{}.cap));
  const auto graphs = corpus(o.nmax);
  out << "n graphs";
  for (MonoidId m : all_monoids()) out << " " << monoid_name(m);
  out << "\n";
  for (std::size_t n = 0; n <= o.nmax; ++n) {
    std::size_t count = 0;
    std::map<MonoidId, std::size_t> totals;
    for (const auto& g : graphs) {
      if (g.num_vertices() != n) continue;
      ++count;
      for (MonoidId m : all_monoids()) totals[m] += basis(m, g).size();
    }
    out << n << " " << count;
    for (MonoidId m : all_monoids()) out << " " << totals[m];
    out << "\n";
  }
  out << "total " << graphs.size() << "\n";
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf monoids on graphical species: structure maps, antipodes and verification"};
  app.name("grhopf");
  app.require_subcommand(1);
  Options o;

  auto* enumerate = app.add_subcommand("enumerate", "Count and optionally list the basis of a component");
  enumerate->add_option("--monoid", o.monoid, "Monoid id")->required();
  enumerate->add_option("--graph", o.graph, "Graph file")->required();
  enumerate->add_flag("--list", o.list, "Print every basis key");
  enumerate->add_option("--json", o.json, "Write JSON to this file");

  auto* prod = app.add_subcommand("product", "Product of two basis keys");
  prod->add_option("--monoid", o.monoid, "Monoid id")->required();
  prod->add_option("--graph", o.graph, "Graph file")->required();
  prod->add_option("--split", o.split, "Ordered bipartition S|T, e.g. a,b|c")->required();
  prod->add_option("--left", o.left, "Key on the induced subgraph on S")->required();
  prod->add_option("--right", o.right, "Key on the induced subgraph on T")->required();
  prod->add_option("--json", o.json, "Write JSON to this file");

  auto* coprod = app.add_subcommand("coproduct", "One coproduct component of a basis key");
  coprod->add_option("--monoid", o.monoid, "Monoid id")->required();
  coprod->add_option("--graph", o.graph, "Graph file")->required();
  coprod->add_option("--split", o.split, "Ordered bipartition S|T")->required();
  coprod->add_option("--key", o.key, "Basis key")->required();
  coprod->add_option("--json", o.json, "Write JSON to this file");

  auto* anti = app.add_subcommand("antipode", "Antipode of a basis key");
  anti->add_option("--monoid", o.monoid, "Monoid id")->required();
  anti->add_option("--graph", o.graph, "Graph file")->required();
  anti->add_option("--key", o.key, "Basis key")->required();
  anti->add_option("--method", o.method, "takeuchi|milnor-moore-left|milnor-moore-right|closed|all");
  anti->add_option("--json", o.json, "Write JSON to this file");

  auto* change = app.add_subcommand("basis-change", "Rewrite a basis key in the other basis");
  change->add_option("--from", o.from, "Source monoid id")->required();
  change->add_option("--to", o.to, "Target monoid id")->required();
  change->add_option("--graph", o.graph, "Graph file")->required();
  change->add_option("--key", o.key, "Basis key")->required();
  change->add_option("--json", o.json, "Write JSON to this file");

  auto* morph = app.add_subcommand("morphism", "Apply a named morphism to a basis key");
  morph->add_option("--name", o.name, "Morphism name")->required();
  morph->add_option("--graph", o.graph, "Graph file")->required();
  morph->add_option("--key", o.key, "Basis key of the domain")->required();
  morph->add_option("--json", o.json, "Write JSON to this file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite over the graph corpus");
  verify->add_option("--suite", o.suite, "bimonoid|antipode|commutativity|basis-change|morphisms|functors|stanley|all")
      ->required();
  verify->add_option("--nmax", o.nmax, "Largest vertex count in the corpus")->required();
  verify->add_option("--monoid", o.monoids, "Monoid id, comma-separated list, or all");
  verify->add_option("--seed", o.seed, "Seed for sampled graphs");
  verify->add_option("--jobs", o.jobs, "Worker threads (default: GRHOPF_JOBS or all cores)");
  verify->add_option("--sample", o.sample, "Graphs sampled from the 5-vertex layer");
  verify->add_option("--random-graphs", o.random_graphs, "Random (nmax+1)-vertex graphs in the stanley suite");
  verify->add_option("--json", o.json, "Write the JSON report to this file");

  auto* stats = app.add_subcommand("corpus-stats", "Graph and basis counts over the corpus");
  stats->add_option("--nmax", o.nmax, "Largest vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*prod) return cmd_product(o, out);
    if (*coprod) return cmd_coproduct(o, out);
    if (*anti) return cmd_antipode(o, out);
    if (*change) return cmd_basis_change(o, out);
    if (*morph) return cmd_morphism(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*stats) return cmd_corpus_stats(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace grhopf

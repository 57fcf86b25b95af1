#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grhopf/graph.hpp"
#include "grhopf/monoid.hpp"
#include "grhopf/morphisms.hpp"

namespace grhopf {

/// Outcome of one check id for one subject (monoid, morphism, diagram, or
/// "graph") on one graph, aggregated over all instances tried. Only the
/// first failing instance is kept as the counterexample.
struct CheckRecord {
  std::string suite;
  std::string subject;
  std::string graph;  // canonical id
  std::string check;
  /// False for statements that are reported but not asserted, such as the
  /// commutativity flavors a monoid is not expected to have.
  bool claimed = true;
  bool passed = true;
  std::size_t instances = 0;
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string suite;
  std::size_t n_max = 0;
  std::size_t graph_count = 0;
  std::vector<std::string> monoids;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;
  double wall_time_seconds = 0;

  std::size_t claimed_count() const;
  std::size_t failed_count() const;
  std::size_t informational_failures() const;
  bool all_passed() const { return failed_count() == 0; }
};

struct SuiteOptions {
  static constexpr std::uint64_t kDefaultSeed = 20240601;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 0;  // 0: default_jobs()
  std::size_t cap = 5;
  /// Graphs sampled from the 5-vertex layer by the bimonoid, antipode and
  /// commutativity suites, and for the coproduct part of the functor checks.
  std::size_t sample_size = 8;
  /// Random graphs with n_max + 1 vertices added to the stanley suite.
  std::size_t random_graphs = 100;
};

/// GRHOPF_JOBS if set and positive, else the hardware concurrency.
unsigned default_jobs();

/// All labeled graphs on v1..vn for n = 0..n_max, by n then edge bitmask.
std::vector<Graph> corpus(std::size_t n_max);
/// Graph on v1..vn with each edge present with probability 1/2.
Graph random_graph(std::size_t n, std::mt19937_64& rng);

std::vector<CheckRecord> check_bimonoid(MonoidId m, const Graph& g);
std::vector<CheckRecord> check_antipode(MonoidId m, const Graph& g);
std::vector<CheckRecord> check_commutativity(MonoidId m, const Graph& g);
std::vector<CheckRecord> check_basis_change(MonoidId m, const Graph& g);
std::vector<CheckRecord> check_morphism(MorphismId f, const Graph& g);
std::vector<CheckRecord> check_diagrams(const Graph& g);
/// `coproduct_swap` adds the per-key check that complementing the graph swaps
/// q and t in the L and Sigma coproduct coefficients.
std::vector<CheckRecord> check_functors(const Graph& g, bool coproduct_swap = true);
std::vector<CheckRecord> check_stanley(const Graph& g);

std::vector<std::string_view> suite_names();
/// Throws InputError for an unknown suite or n_max above the cap.
VerificationReport run_suite(std::string_view suite, std::size_t n_max, const std::vector<MonoidId>& monoids,
                             const SuiteOptions& options = {});

}  // namespace grhopf

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "grhopf/graph.hpp"

namespace grhopf {

/// Basis family of a key. The m/p and M/P tags travel with the key so a basis
/// change is an ordinary linear map between differently tagged keys.
enum class KeyKind {
  Unit,
  LinearOrder,
  Orientation,
  Composition,
  PartitionM,
  PartitionP,
  FlatM,
  FlatP,
  MatchingM,
  MatchingP,
};

std::string_view key_kind_name(KeyKind kind);
bool is_partition_kind(KeyKind kind);
bool is_edge_set_kind(KeyKind kind);

/// Directed edge from -> to.
struct Arc {
  Label from;
  Label to;
  auto operator<=>(const Arc&) const = default;
};

/// A combinatorial basis element: linear order, acyclic orientation, set
/// composition, set partition, flat, matching, or the unit of E.
///
/// Payloads are stored canonically: orientations and edge sets sorted, blocks
/// of compositions sorted internally, partition blocks sorted.
class BasisKey {
 public:
  BasisKey() = default;

  static BasisKey unit();
  static BasisKey linear_order(std::vector<Label> order);
  static BasisKey orientation(std::vector<Arc> arcs);
  static BasisKey composition(std::vector<VertexSet> blocks);
  static BasisKey partition(KeyKind kind, const VertexPartition& pi);
  static BasisKey edge_set(KeyKind kind, std::vector<Edge> edges);

  KeyKind kind() const { return kind_; }
  const std::vector<Label>& order() const;
  const std::vector<Arc>& arcs() const;
  /// Blocks of a composition (in order) or a partition (canonical order).
  const std::vector<VertexSet>& blocks() const;
  const std::vector<Edge>& edges() const;

  /// Same combinatorial payload under another tag of the same family.
  BasisKey retagged(KeyKind kind) const;

  /// Literal form: `a<b<c`, `a>b,b>c`, `a,b|c`, `a,b/c`, `ab,bc`; the unit
  /// key is `1` and empty structures are the empty string.
  std::string literal() const;

  auto operator<=>(const BasisKey&) const = default;

 private:
  using Payload = std::variant<std::monostate, std::vector<Label>, std::vector<Arc>, std::vector<VertexSet>,
                               std::vector<Edge>>;
  BasisKey(KeyKind kind, Payload payload) : kind_(kind), payload_(std::move(payload)) {}

  KeyKind kind_ = KeyKind::Unit;
  Payload payload_;
};

/// Parses a key literal of the given kind. Throws InputError with a column
/// number on malformed input. Validity against a graph is checked separately.
BasisKey parse_key_literal(KeyKind kind, std::string_view text);

}  // namespace grhopf

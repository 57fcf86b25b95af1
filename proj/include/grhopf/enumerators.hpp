#pragma once

#include <vector>

#include "grhopf/basis_key.hpp"
#include "grhopf/graph.hpp"

namespace grhopf {

/// All 2^|V| pairs (S, V\S), ordered by the bitmask of S over sorted V.
std::vector<OrderedBipartition> ordered_bipartitions(const VertexSet& v);

/// Set compositions of V into nonempty blocks; only V = {} yields the empty
/// composition. Sorted by literal.
std::vector<std::vector<VertexSet>> ordered_set_partitions(const VertexSet& v);
std::vector<VertexPartition> set_partitions(const VertexSet& v);
std::vector<BasisKey> linear_orders(const VertexSet& v);

/// Orientations of E(G) with no directed cycle, found by filtering all
/// 2^|E| orientations with a DFS cycle check.
std::vector<BasisKey> acyclic_orientations(const Graph& g);
bool is_acyclic(const VertexSet& v, const std::vector<Arc>& arcs);

std::vector<VertexPartition> stable_partitions(const Graph& g);
std::vector<BasisKey> stable_compositions(const Graph& g);

/// D is a flat when it contains every edge of G inside a component of (V, D).
bool is_flat(const Graph& g, const std::vector<Edge>& d);
bool is_matching(const std::vector<Edge>& m);
std::vector<std::vector<Edge>> flats(const Graph& g);
std::vector<std::vector<Edge>> matchings(const Graph& g);

/// Every block of sigma lies in a block of tau.
bool partition_refines(const VertexPartition& sigma, const VertexPartition& tau);
/// Inclusion of flats; both arguments must be flats of g.
bool flat_leq(const std::vector<Edge>& f1, const std::vector<Edge>& f2, const Graph& g);
/// c2 arises from c1 by merging runs of consecutive blocks.
bool composition_refines(const std::vector<VertexSet>& c1, const std::vector<VertexSet>& c2);

/// Edges of g with both ends inside one block of pi.
std::vector<Edge> flat_of_partition(const Graph& g, const VertexPartition& pi);
/// Edges of f with both endpoints in s.
std::vector<Edge> restrict_edges(const std::vector<Edge>& f, const VertexSet& s);

}  // namespace grhopf

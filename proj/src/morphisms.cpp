#include "grhopf/morphisms.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "grhopf/enumerators.hpp"
#include "grhopf/errors.hpp"

namespace grhopf {

namespace {

using M = MonoidId;
using F = MorphismId;

constexpr std::array<MorphismInfo, 13> kMorphisms{{
    {F::iota_L_SSigma, "iota_L_SSigma", M::L, M::SSigma, false, false},
    {F::iota_SSigma_Sigma, "iota_SSigma_Sigma", M::SSigma, M::Sigma, false, false},
    {F::pi_arrow_L, "pi_arrow_L", M::L, M::AO, false, true},
    {F::pi_arrow_SSigma, "pi_arrow_SSigma", M::SSigma, M::AO, false, true},
    {F::pi_abelianize, "pi_abelianize", M::L, M::E, true, true},
    {F::pi_Sigma_Pi, "pi_Sigma_Pi", M::Sigma, M::Pi_m, true, true},
    {F::pi_SSigma_SPi, "pi_SSigma_SPi", M::SSigma, M::SPi_m, true, true},
    {F::iota_SPi_Pi, "iota_SPi_Pi", M::SPi_m, M::Pi_m, true, true},
    {F::iota_FL_Pi, "iota_FL_Pi", M::FL_P, M::Pi_p, true, true},
    {F::phi_Pi_FL, "phi_Pi_FL", M::Pi_m, M::FL_M, true, true},
    {F::rho_SPi_E, "rho_SPi_E", M::SPi_m, M::E, true, true},
    {F::iota_E_FL, "iota_E_FL", M::E, M::FL_M, true, true},
    {F::pi_AO_E, "pi_AO_E", M::AO, M::E, true, true},
}};

constexpr std::array<MorphismId, 13> kAllMorphisms{
    F::iota_L_SSigma, F::iota_SSigma_Sigma, F::pi_arrow_L, F::pi_arrow_SSigma, F::pi_abelianize,
    F::pi_Sigma_Pi,   F::pi_SSigma_SPi,     F::iota_SPi_Pi, F::iota_FL_Pi,     F::phi_Pi_FL,
    F::rho_SPi_E,     F::iota_E_FL,         F::pi_AO_E};

// Orient every edge of g from the earlier to the later vertex under `rank`.
template <class Rank>
BasisKey orient_by(const Graph& g, Rank&& rank) {
  std::vector<Arc> arcs;
  for (const auto& e : g.edges()) {
    if (rank(e.u) < rank(e.v)) {
      arcs.push_back({e.u, e.v});
    } else {
      arcs.push_back({e.v, e.u});
    }
  }
  return BasisKey::orientation(std::move(arcs));
}

}  // namespace

const MorphismInfo& morphism_info(MorphismId id) { return kMorphisms[static_cast<std::size_t>(id)]; }

std::span<const MorphismId> all_morphisms() { return kAllMorphisms; }

MorphismId parse_morphism(std::string_view name) {
  for (const auto& info : kMorphisms) {
    if (info.name == name) return info.id;
  }
  throw InputError("unknown morphism `" + std::string(name) + "`");
}

BasisKey morphism_key(MorphismId f, const Graph& g, const BasisKey& k) {
  switch (f) {
    case F::iota_L_SSigma: {
      std::vector<VertexSet> blocks;
      for (const auto& v : k.order()) blocks.push_back({v});
      return BasisKey::composition(std::move(blocks));
    }
    case F::iota_SSigma_Sigma:
      return k;
    case F::pi_arrow_L: {
      const auto& order = k.order();
      return orient_by(g, [&](const Label& v) { return std::find(order.begin(), order.end(), v) - order.begin(); });
    }
    case F::pi_arrow_SSigma: {
      const auto& blocks = k.blocks();
      return orient_by(g, [&](const Label& v) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (vset::contains(blocks[i], v)) return i;
        }
        return blocks.size();
      });
    }
    case F::pi_abelianize:
    case F::rho_SPi_E:
    case F::pi_AO_E:
      return BasisKey::unit();
    case F::pi_Sigma_Pi:
    case F::pi_SSigma_SPi:
    case F::iota_SPi_Pi:
      return BasisKey::partition(KeyKind::PartitionM, VertexPartition(k.blocks()));
    case F::iota_FL_Pi:
      return BasisKey::partition(KeyKind::PartitionP, components_partition(g.vertex_set(), k.edges()));
    case F::phi_Pi_FL:
      return BasisKey::edge_set(KeyKind::FlatM, flat_of_partition(g, VertexPartition(k.blocks())));
    case F::iota_E_FL:
      return BasisKey::edge_set(KeyKind::FlatM, {});
  }
  return {};
}

Element morphism_apply(MorphismId f, const Element& x) {
  const auto& info = morphism_info(f);
  if (x.monoid() != info.domain) {
    throw InputError(std::string(info.name) + " expects an element of " + std::string(monoid_name(info.domain)) +
                     ", got " + std::string(monoid_name(x.monoid())));
  }
  Terms out;
  for (const auto& [k, c] : x.terms()) accumulate(out, morphism_key(f, x.graph(), k), c);
  return Element(info.codomain, x.graph_ptr(), out);
}

}  // namespace grhopf

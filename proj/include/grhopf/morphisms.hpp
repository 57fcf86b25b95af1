#pragma once

#include <span>
#include <string_view>

#include "grhopf/basis_key.hpp"
#include "grhopf/element.hpp"
#include "grhopf/monoid.hpp"

namespace grhopf {

enum class MorphismId {
  iota_L_SSigma,
  iota_SSigma_Sigma,
  pi_arrow_L,
  pi_arrow_SSigma,
  pi_abelianize,
  pi_Sigma_Pi,
  pi_SSigma_SPi,
  iota_SPi_Pi,
  iota_FL_Pi,
  phi_Pi_FL,
  rho_SPi_E,
  iota_E_FL,
  pi_AO_E,
};

/// Each morphism sends basis keys to single basis keys. It commutes with the
/// structure maps once coefficients are specialized as recorded here: the
/// arrow maps into AO forget t, maps into the undeformed monoids forget both.
struct MorphismInfo {
  MorphismId id;
  std::string_view name;
  MonoidId domain;
  MonoidId codomain;
  bool q_to_one;
  bool t_to_one;
};

const MorphismInfo& morphism_info(MorphismId id);
std::span<const MorphismId> all_morphisms();
MorphismId parse_morphism(std::string_view name);

/// Image of one domain key; `g` is the graph the key lives on.
BasisKey morphism_key(MorphismId f, const Graph& g, const BasisKey& k);
/// Linear extension. Throws InputError if x is not in the domain monoid.
Element morphism_apply(MorphismId f, const Element& x);

}  // namespace grhopf

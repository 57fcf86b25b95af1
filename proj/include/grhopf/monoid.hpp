#pragma once

#include <span>
#include <string_view>

#include "grhopf/basis_key.hpp"

namespace grhopf {

enum class MonoidId { L, AO, Sigma, SSigma, Pi_m, Pi_p, SPi_m, SPi_p, FL_M, FL_P, Match_M, Match_P, E };

/// Static description of a catalog monoid.
///
/// `q_deformed` / `t_deformed` record which braiding parameters the monoid is a
/// bimonoid for: L, Sigma and SSigma are (q,t)-bimonoids, AO is a q-bimonoid,
/// and the partition/flat/matching families and E are bimonoids for the
/// undeformed braiding (q = t = 1).
struct MonoidInfo {
  MonoidId id;
  std::string_view name;
  KeyKind key_kind;
  bool q_deformed;
  bool t_deformed;
};

const MonoidInfo& monoid_info(MonoidId id);
std::string_view monoid_name(MonoidId id);
std::span<const MonoidId> all_monoids();
/// Throws InputError for unknown names.
MonoidId parse_monoid(std::string_view name);
/// Monoid whose keys carry `kind`; the inverse of monoid_info(id).key_kind.
MonoidId monoid_for_kind(KeyKind kind);

/// The other basis of the same space (Pi_m <-> Pi_p, FL_M <-> FL_P, ...), or
/// the monoid itself when it has only one catalog basis.
MonoidId dual_basis(MonoidId id);

}  // namespace grhopf

#include "grhopf/monoid.hpp"

#include <array>
#include <string>

#include "grhopf/errors.hpp"

namespace grhopf {

namespace {

constexpr std::array<MonoidInfo, 13> kCatalog{{
    {MonoidId::L, "L", KeyKind::LinearOrder, true, true},
    {MonoidId::AO, "AO", KeyKind::Orientation, true, false},
    {MonoidId::Sigma, "Sigma", KeyKind::Composition, true, true},
    {MonoidId::SSigma, "SSigma", KeyKind::Composition, true, true},
    {MonoidId::Pi_m, "Pi_m", KeyKind::PartitionM, false, false},
    {MonoidId::Pi_p, "Pi_p", KeyKind::PartitionP, false, false},
    {MonoidId::SPi_m, "SPi_m", KeyKind::PartitionM, false, false},
    {MonoidId::SPi_p, "SPi_p", KeyKind::PartitionP, false, false},
    {MonoidId::FL_M, "FL_M", KeyKind::FlatM, false, false},
    {MonoidId::FL_P, "FL_P", KeyKind::FlatP, false, false},
    {MonoidId::Match_M, "Match_M", KeyKind::MatchingM, false, false},
    {MonoidId::Match_P, "Match_P", KeyKind::MatchingP, false, false},
    {MonoidId::E, "E", KeyKind::Unit, false, false},
}};

constexpr std::array<MonoidId, 13> kAll{MonoidId::L,     MonoidId::AO,    MonoidId::Sigma,   MonoidId::SSigma,
                                        MonoidId::Pi_m,  MonoidId::Pi_p,  MonoidId::SPi_m,   MonoidId::SPi_p,
                                        MonoidId::FL_M,  MonoidId::FL_P,  MonoidId::Match_M, MonoidId::Match_P,
                                        MonoidId::E};

}  // namespace

const MonoidInfo& monoid_info(MonoidId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::string_view monoid_name(MonoidId id) { return monoid_info(id).name; }

std::span<const MonoidId> all_monoids() { return kAll; }

MonoidId parse_monoid(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw InputError("unknown monoid `" + std::string(name) + "`");
}

MonoidId monoid_for_kind(KeyKind kind) {
  switch (kind) {
    case KeyKind::Unit:
      return MonoidId::E;
    case KeyKind::LinearOrder:
      return MonoidId::L;
    case KeyKind::Orientation:
      return MonoidId::AO;
    case KeyKind::Composition:
      return MonoidId::Sigma;
    case KeyKind::PartitionM:
      return MonoidId::Pi_m;
    case KeyKind::PartitionP:
      return MonoidId::Pi_p;
    case KeyKind::FlatM:
      return MonoidId::FL_M;
    case KeyKind::FlatP:
      return MonoidId::FL_P;
    case KeyKind::MatchingM:
      return MonoidId::Match_M;
    case KeyKind::MatchingP:
      return MonoidId::Match_P;
  }
  return MonoidId::E;
}

MonoidId dual_basis(MonoidId id) {
  switch (id) {
    case MonoidId::Pi_m:
      return MonoidId::Pi_p;
    case MonoidId::Pi_p:
      return MonoidId::Pi_m;
    case MonoidId::SPi_m:
      return MonoidId::SPi_p;
    case MonoidId::SPi_p:
      return MonoidId::SPi_m;
    case MonoidId::FL_M:
      return MonoidId::FL_P;
    case MonoidId::FL_P:
      return MonoidId::FL_M;
    case MonoidId::Match_M:
      return MonoidId::Match_P;
    case MonoidId::Match_P:
      return MonoidId::Match_M;
    default:
      return id;
  }
}

}  // namespace grhopf

#pragma once

#include <optional>

#include "theta/lowest_ktypes.hpp"

namespace theta {

// The four families of irreducible admissible representations of O*(4),
// keyed by the infinitesimal character (l1, l2):
//   P    irreducible principal series: l1, l2 not integers,
//        Re(l1+l2) >= 0, l1 - l2 a positive integer;
//   D    limit of lowest weight discrete series: integers, l1+l2 >= 0;
//   Dbar limit of highest weight discrete series: integers, l1+l2 <= 0;
//   F    finite dimensional: integers, l1+l2 >= 1;
// all with l1 - l2 >= 1. P and F share the same standard-module datum, so the
// family tag is part of the value and never inferred from (l1, l2).
enum class OStar4Family { P, D, Dbar, F };

struct OStar4Rep {
  OStar4Family family = OStar4Family::F;
  Scalar l1;
  Scalar l2;
};

// Character t -> t^k of O*(2) = U(1).
struct OStar2Rep {
  long k = 0;
};

// Validated constructor; throws FamilyConstraint naming the violated bound.
OStar4Rep make_ostar4(OStar4Family family, Scalar l1, Scalar l2);

std::string family_str(OStar4Family f);
std::string rep_str(const OStar4Rep& rep);

// The U(2)-types of the representation are (idx + l1 - l2 - 1, idx) with idx
// ranging over all of Z for P, idx >= l2 + 1 for D, idx <= l2 for Dbar and
// 1 - l1 <= idx <= l2 for F. Every multiplicity is one.
std::optional<long> index_min(const OStar4Rep& rep);  // nullopt = unbounded
std::optional<long> index_max(const OStar4Rep& rep);
KTypeU ktype_at_index(const OStar4Rep& rep, long idx);

// K-types with index in [lo, hi], intersected with the family range.
std::vector<KTypeU> ktypes_in_window(const OStar4Rep& rep, long lo, long hi);

// Norm-minimizing K-types (one, or two for P/F with l1 - l2 even), found by
// scanning a radius-2 window around the real minimizer of the norm.
std::vector<KTypeU> lowest_ktypes(const OStar4Rep& rep);
KTypeU lowest_ktype(const OStar4Rep& rep);  // the smallest-index minimizer

OStar4Rep contragredient(const OStar4Rep& rep);
OStar2Rep contragredient(const OStar2Rep& rep);

// Langlands parameter on O*(4): P/F map to pi(1, 0, empty, l1-l2, l1+l2)
// (the family tag disambiguates), D/Dbar to the limit parameters with the
// sum root e1+e2 positive resp. negative.
LanglandsParam as_langlands(const OStar4Rep& rep);

// Infinitesimal character (l1, l2) as a TypeD character; (k) for O*(2).
InfChar rep_infchar(const OStar4Rep& rep);
InfChar rep_infchar(const OStar2Rep& rep);

}  // namespace theta

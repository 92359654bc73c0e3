#include "theta/ostar_dual.hpp"

#include <algorithm>

namespace theta {

namespace {

long rational_floor(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return static_cast<long>(q);
}

long diff(const OStar4Rep& rep) {
  Scalar d = rep.l1 - rep.l2;
  require(d.is_integer(), "FamilyConstraint", "l1 - l2 must be an integer");
  return d.to_long();
}

}  // namespace

OStar4Rep make_ostar4(OStar4Family family, Scalar l1, Scalar l2) {
  OStar4Rep rep{family, std::move(l1), std::move(l2)};
  require(diff(rep) >= 1, "FamilyConstraint", "l1 - l2 >= 1 fails");
  Scalar sum = rep.l1 + rep.l2;
  switch (family) {
    case OStar4Family::P:
      require(!rep.l1.is_integer() && !rep.l2.is_integer(), "FamilyConstraint",
              "P needs non-integral l1, l2");
      require(!(sum.re < 0), "FamilyConstraint", "Re(l1 + l2) >= 0 fails");
      break;
    case OStar4Family::D:
      require(rep.l1.is_integer() && rep.l2.is_integer(), "FamilyConstraint",
              "D needs integral l1, l2");
      require(!(sum.re < 0), "FamilyConstraint", "l1 + l2 >= 0 fails");
      break;
    case OStar4Family::Dbar:
      require(rep.l1.is_integer() && rep.l2.is_integer(), "FamilyConstraint",
              "Dbar needs integral l1, l2");
      require(!(sum.re > 0), "FamilyConstraint", "l1 + l2 <= 0 fails");
      break;
    case OStar4Family::F:
      require(rep.l1.is_integer() && rep.l2.is_integer(), "FamilyConstraint",
              "F needs integral l1, l2");
      require(sum.re >= 1, "FamilyConstraint", "l1 + l2 >= 1 fails");
      break;
  }
  return rep;
}

std::string family_str(OStar4Family f) {
  switch (f) {
    case OStar4Family::P: return "P";
    case OStar4Family::D: return "D";
    case OStar4Family::Dbar: return "Dbar";
    case OStar4Family::F: return "F";
  }
  return "?";
}

std::string rep_str(const OStar4Rep& rep) {
  return family_str(rep.family) + "[" + rep.l1.str() + "," + rep.l2.str() + "]";
}

std::optional<long> index_min(const OStar4Rep& rep) {
  switch (rep.family) {
    case OStar4Family::P: return std::nullopt;
    case OStar4Family::D: return rep.l2.to_long() + 1;
    case OStar4Family::Dbar: return std::nullopt;
    case OStar4Family::F: return 1 - rep.l1.to_long();
  }
  return std::nullopt;
}

std::optional<long> index_max(const OStar4Rep& rep) {
  switch (rep.family) {
    case OStar4Family::P: return std::nullopt;
    case OStar4Family::D: return std::nullopt;
    case OStar4Family::Dbar: return rep.l2.to_long();
    case OStar4Family::F: return rep.l2.to_long();
  }
  return std::nullopt;
}

KTypeU ktype_at_index(const OStar4Rep& rep, long idx) {
  return KTypeU{{idx + diff(rep) - 1, idx}};
}

std::vector<KTypeU> ktypes_in_window(const OStar4Rep& rep, long lo, long hi) {
  require(lo <= hi, "ShapeError", "window must satisfy lo <= hi");
  auto mn = index_min(rep);
  auto mx = index_max(rep);
  long from = mn ? std::max(lo, *mn) : lo;
  long to = mx ? std::min(hi, *mx) : hi;
  std::vector<KTypeU> out;
  for (long idx = from; idx <= to; ++idx) out.push_back(ktype_at_index(rep, idx));
  return out;
}

std::vector<KTypeU> lowest_ktypes(const OStar4Rep& rep) {
  // the norm (idx + l1 - l2)^2 + (idx - 1)^2 is a convex quadratic in the
  // index with real vertex (1 - (l1 - l2))/2; a radius-2 scan suffices
  long vertex = rational_floor(Rational(1 - diff(rep), 2));
  long lo = vertex - 2, hi = vertex + 3;
  auto mn = index_min(rep);
  auto mx = index_max(rep);
  if (mn && lo < *mn) lo = *mn;
  if (mx && hi > *mx) hi = *mx;
  if (mn && hi < *mn) hi = *mn;
  if (mx && lo > *mx) lo = *mx;

  const GroupSig u2 = GroupSig::ostar(2);
  std::vector<KTypeU> best;
  Integer best_norm = 0;
  for (long idx = lo; idx <= hi; ++idx) {
    KTypeU kt = ktype_at_index(rep, idx);
    Integer nn = norm(kt, u2);
    if (best.empty() || nn < best_norm) {
      best = {kt};
      best_norm = nn;
    } else if (nn == best_norm) {
      best.push_back(kt);
    }
  }
  return best;
}

KTypeU lowest_ktype(const OStar4Rep& rep) { return lowest_ktypes(rep).front(); }

OStar4Rep contragredient(const OStar4Rep& rep) {
  switch (rep.family) {
    case OStar4Family::P: return rep;
    case OStar4Family::F: return rep;
    case OStar4Family::D: return make_ostar4(OStar4Family::Dbar, -rep.l2, -rep.l1);
    case OStar4Family::Dbar: return make_ostar4(OStar4Family::D, -rep.l2, -rep.l1);
  }
  return rep;
}

OStar2Rep contragredient(const OStar2Rep& rep) { return OStar2Rep{-rep.k}; }

LanglandsParam as_langlands(const OStar4Rep& rep) {
  LanglandsParam param;
  param.group = GroupSig::ostar(2);
  if (rep.family == OStar4Family::P || rep.family == OStar4Family::F) {
    param.r = 1;
    param.mu = {diff(rep)};
    param.nu = {rep.l1 + rep.l2};
  } else {
    param.lambda.left = {rep.l1, rep.l2};
    HCShape shape = analyze_shape(param.levi(), param.lambda);
    if (shape.tied_count() == 1)
      param.psi.tied_signs[0] =
          rep.family == OStar4Family::D ? BlockSign::Plus : BlockSign::Minus;
  }
  validate(param);
  return param;
}

InfChar rep_infchar(const OStar4Rep& rep) {
  return InfChar{{rep.l1, rep.l2}, WeylFamily::TypeD};
}

InfChar rep_infchar(const OStar2Rep& rep) {
  return InfChar{{Scalar(rep.k)}, WeylFamily::TypeD};
}

}  // namespace theta

#pragma once

#include "theta/harmonics.hpp"

namespace theta {

// One reduction step of the lift engine. Base steps name the case that
// produced the value (family.signature.region); the rule string is stable
// and machine-readable.
struct LiftStep {
  enum class Kind { Duality, GoingUp, Base };
  Kind kind = Kind::Base;
  int s = 0;
  int base_p = 0;
  int base_q = 0;
  std::string rule;
};

// A lift is either a Langlands parameter (canonicalized) or zero. Zero is a
// value, not an error: occurrence sets are data.
struct LiftResult {
  std::optional<LanglandsParam> value;
  std::vector<LiftStep> trace;

  bool zero() const { return !value.has_value(); }
};

// Infinitesimal character forced on any nonzero lift: the representation's
// own character followed by (p+q-n, ..., 2, 1), as a TypeC character.
// Throws RankError when p + q < n.
InfChar expected_infchar(std::vector<Scalar> head, int p, int q, int n);
InfChar expected_infchar(const OStar2Rep& rep, int p, int q);
InfChar expected_infchar(const OStar4Rep& rep, int p, int q);

// Extends a lift at signature (base_p, base_q) to (base_p+s, base_q+s):
// r grows by s, mu gains s ones and nu gains the arithmetic progression
// 2p+2q-2n+4i-1 for i = 1..s. The result is validated.
LanglandsParam going_up(const LanglandsParam& param, int base_p, int base_q, int n, int s);

// Full lift of the O*(2) character chi_k to Sp(p,q): duality when q > p,
// the explicit q <= 1 case table, going-up with base (p-q+1, 1) otherwise.
LiftResult theta_ostar2(long k, int p, int q);

// Full lift of an O*(4) representation to Sp(p,q): duality when q > p, the
// explicit base theorems for q <= 2, and going-up from (p-q+2, 2) for q >= 3.
LiftResult theta_ostar4(const OStar4Rep& rep, int p, int q);

}  // namespace theta

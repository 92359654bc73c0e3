#pragma once

#include <vector>

#include "theta/pos_system.hpp"

namespace theta {

// pi(r, lambda, Psi, mu, nu): the constituent of the standard module induced
// from a limit of discrete series of the Levi factor and r copies of
// GL(1,H)-data (mu_i, nu_i). The universal output of the lift engine.
struct LanglandsParam {
  GroupSig group;
  int r = 0;
  HCParam lambda;
  PosSystem psi;
  std::vector<long> mu;
  std::vector<Scalar> nu;

  GroupSig levi() const { return group.levi(r); }
};

// Trivial representation pi(0, emptyset) of the trivial group.
LanglandsParam trivial_param(const GroupSig& sig);

// Checks, in order: r against the rank (RankError), the Harish-Chandra shape
// and the mu/nu lengths (ShapeError), the positive system (ConditionA), and
// the non-parity condition "mu_i odd whenever nu_i = 0" (ParityError).
void validate(const LanglandsParam& param);

// Sign-normalizes each nu_i and sorts the (mu_i, nu_i) pairs descending by
// (mu, Re nu, Im nu). Two parameters are infinitesimally equivalent iff their
// canonical forms are field-wise equal.
LanglandsParam canonicalize(LanglandsParam param);

// Field-wise equality of canonical forms (system names are ignored; only the
// resolved tied signs count).
bool canonical_equal(const LanglandsParam& a, const LanglandsParam& b);

// The same representation viewed through the swap Sp(q,p) = Sp(p,q): sides
// of lambda exchange and every tied-block sign flips.
LanglandsParam transport_swap(const LanglandsParam& param);

std::string param_str(const LanglandsParam& param);

}  // namespace theta

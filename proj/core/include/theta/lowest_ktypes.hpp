#pragma once

#include <set>

#include "theta/inf_char.hpp"
#include "theta/ktype.hpp"
#include "theta/langlands.hpp"

namespace theta {

// Lowest K-types of pi(r, lambda, Psi, mu, nu), computed from the dominant
// rearrangement of (lambda, mu/2) by the block recursion: every block value
// alpha_i with side multiplicities (M_i, N_i) contributes
//   beta_i  = alpha_i + M~_i - N~_i - (M_i - N_i + 1)/2 + q - p,
//   gamma_i = alpha_i - M~_i + N~_i - (N_i - M_i + 1)/2 + p - q,
// and a shift delta_i which is 0 for integral beta_i, forced by the tied
// sign when alpha_i is a parameter value, and free otherwise. All members of
// the returned set share one norm.
std::set<KTypeSp> lowest_ktypes_sp(const LanglandsParam& param);

// O*(2n) version; the beta/gamma formulas drop the q-p terms, a middle zero
// of the parameter passes through as the entry M~_s - N~_s, and the forced
// delta sign reads the tied block bit.
std::set<KTypeU> lowest_ktypes_ostar(const LanglandsParam& param);

// (lambda, (nu_1+mu_1)/2, (nu_1-mu_1)/2, ...); TypeC for Sp, TypeD for O*.
InfChar infinitesimal_character(const LanglandsParam& param);

}  // namespace theta

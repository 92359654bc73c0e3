#pragma once

#include <vector>

#include "theta/scalar.hpp"

namespace theta {

enum class WeylFamily { TypeC, TypeD };

// Infinitesimal character: a tuple of scalars considered up to the signed
// permutation Weyl action. Never compare the raw entry sequences; use
// equal_mod_weyl.
struct InfChar {
  std::vector<Scalar> entries;
  WeylFamily weyl = WeylFamily::TypeC;
};

// TypeC: multisets of sign-normalized entries agree (all sign changes
// allowed). TypeD: agree up to permutation and an even number of sign
// changes; a zero entry lifts the parity constraint.
bool equal_mod_weyl(const InfChar& a, const InfChar& b);

std::string infchar_str(const InfChar& c);

}  // namespace theta

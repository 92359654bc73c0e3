#pragma once

#include <vector>

#include "theta/group.hpp"
#include "theta/scalar.hpp"

namespace theta {

// Highest weight of an Sp(p) x Sp(q) type: both sides weakly decreasing, >= 0.
struct KTypeSp {
  std::vector<long> a;
  std::vector<long> b;

  friend bool operator==(const KTypeSp& x, const KTypeSp& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const KTypeSp& x, const KTypeSp& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

// Highest weight of a U(n) type: weakly decreasing, entries may be negative.
struct KTypeU {
  std::vector<long> w;

  friend bool operator==(const KTypeU& x, const KTypeU& y) { return x.w == y.w; }
  friend bool operator<(const KTypeU& x, const KTypeU& y) { return x.w < y.w; }
};

void check_dominant(const KTypeSp& kt);
void check_dominant(const KTypeU& kt);

// |sigma + 2 rho_c|^2: for Sp(p,q) this is
//   sum (a_i + 2p + 2 - 2i)^2 + sum (b_j + 2q + 2 - 2j)^2,
// for U(n) it is sum (w_i + n + 1 - 2i)^2.
Integer norm(const KTypeSp& kt, const GroupSig& sig);
Integer norm(const KTypeU& kt, const GroupSig& sig);

std::string ktype_str(const KTypeSp& kt);
std::string ktype_str(const KTypeU& kt);

}  // namespace theta

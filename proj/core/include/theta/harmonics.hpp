#pragma once

#include <optional>

#include "theta/ostar_dual.hpp"

namespace theta {

// Occurrence of one K-type in the Fock space of the pair (Sp(p,q), O*(2n))
// and in the joint harmonics, together with its polynomial degree. r and s
// count the strictly positive / strictly negative residual entries.
struct FockProfile {
  bool occurs_in_fock = false;
  bool occurs_in_harmonics = false;
  std::optional<Integer> degree;  // set when the type occurs in the Fock space
  int r = 0;
  int s = 0;
};

// Sp(p)xSp(q)-type side: r, s count positive entries of the two halves;
// Fock iff r <= n and s <= n, harmonics iff r + s <= n, degree = sum of all
// entries.
FockProfile profile_sp(const KTypeSp& kt, int n);

// U(n)-type side relative to (p,q): subtract p - q from every entry first;
// Fock iff r <= 2p and s <= 2q, harmonics iff r <= p and s <= q, degree =
// sum of absolute residual entries.
FockProfile profile_u(const KTypeU& kt, int p, int q);

// The joint-harmonics bijection: positive blocks transport across, with the
// p - q shift applied on the U(n) side. Throws NotInHarmonics when the input
// does not occur in the joint harmonics for (p, q, n).
KTypeU correspond(const KTypeSp& kt, int p, int q, int n);
KTypeSp correspond_u(const KTypeU& kt, int p, int q, int n);

// The K-types of the representation that occur in the Fock space with
// minimal degree. Throws NoneOccur when no K-type occurs at all (which
// signals a vanishing lift).
std::vector<KTypeU> lowest_degree_ktypes_ostar4(const OStar4Rep& rep, int p, int q);
std::vector<KTypeU> lowest_degree_ktypes_ostar2(const OStar2Rep& rep, int p, int q);

}  // namespace theta

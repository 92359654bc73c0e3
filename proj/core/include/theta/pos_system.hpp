#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/hc_param.hpp"

namespace theta {

enum class BlockSign { Plus, Minus };

// A positive root system satisfying condition (A) for a given parameter.
// Everything about the system is forced by dominance except one binary
// choice per tied block (m_i = n_i > 0), so we store exactly those bits.
// Sign Plus for tied block i means
//   Sp:  e_{m~_{i-1}+1} - f_{n~_{i-1}+1}  lies in the system,
//   O*:  e_{m~_{i-1}+1} + e_{n~_i+1}      lies in the system,
// and Minus means the negative does. Block indices count all blocks of the
// parameter from the largest value down, starting at 0.
struct PosSystem {
  std::map<int, BlockSign> tied_signs;
  std::optional<std::string> name;  // Psi1..Psi7 when built from a named system

  static PosSystem named(std::string n) {
    PosSystem psi;
    psi.name = std::move(n);
    return psi;
  }
  static PosSystem empty() { return {}; }
  static PosSystem signs(std::map<int, BlockSign> s) {
    PosSystem psi;
    psi.tied_signs = std::move(s);
    return psi;
  }
};

// Resolve a system against a concrete parameter: named systems get their
// tied signs extracted from the dominance target, explicit sign maps get
// checked for exact coverage of the tied blocks. Throws ConditionA.
PosSystem resolve_pos_system(const PosSystem& psi, const GroupSig& levi, const HCParam& lambda);

// All systems satisfying condition (A) for the parameter (2^t of them).
std::vector<PosSystem> condition_a_systems(const GroupSig& levi, const HCParam& lambda);

// The single system when the parameter leaves no choice (t = 0).
PosSystem unique_condition_a_system(const GroupSig& levi, const HCParam& lambda);

// Dominance target of the named systems, used for resolution:
//   Psi1 on Sp(p,0):  (p,...,1)
//   Psi2 on Sp(p,1):  (p,...,1; p+1)
//   Psi3 on Sp(p,1):  (p+1,p,...,2; 1)
//   Psi4 on Sp(p,1):  (p+1,p-1,...,1; p)
//   Psi5 on Sp(p,2):  (p,...,1; p+2,p+1)
//   Psi6 on Sp(p,2):  (p+2,...,3; 2,1)
//   Psi7 on Sp(2,2):  (4,2; 3,1)
HCParam named_system_target(const std::string& name, const GroupSig& levi);

// Total order of the p'+q' coordinates induced by a resolved system for an
// Sp parameter; earlier means larger in the dominance order.
class CoordOrder {
public:
  CoordOrder(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved);

  // is e_i - f_j in the system? (1-based coordinate indices)
  bool e_before_f(int i, int j) const;
  int position_e(int i) const { return epos_.at(static_cast<size_t>(i - 1)); }
  int position_f(int j) const { return fpos_.at(static_cast<size_t>(j - 1)); }

private:
  std::vector<int> epos_, fpos_;
};

// Is e_i + e_j (i < j, 1-based) in a resolved system for an O* parameter?
bool ostar_sum_root_in(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved,
                       int i, int j);

// Half sums of roots, used to cross-check the limit-of-discrete-series
// lowest K-type against lambda + rho_n - rho_c.
std::vector<Scalar> rho_c(const GroupSig& sig);
std::vector<Scalar> rho_n(const GroupSig& levi, const HCParam& lambda, const PosSystem& resolved);

}  // namespace theta

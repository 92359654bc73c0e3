#pragma once

#include <string>

#include "theta/error.hpp"

namespace theta {

enum class GroupKind { Sp, OStar };

// Sp(p,q) or O*(2n). Sp(0,0) and O*(0) are the trivial groups and are valid.
struct GroupSig {
  GroupKind kind = GroupKind::Sp;
  int p = 0;  // Sp only
  int q = 0;  // Sp only
  int n = 0;  // OStar rank, the group is O*(2n)

  static GroupSig sp(int p, int q) {
    require(p >= 0 && q >= 0, "ShapeError", "Sp(p,q) needs p,q >= 0");
    return {GroupKind::Sp, p, q, 0};
  }
  static GroupSig ostar(int n) {
    require(n >= 0, "ShapeError", "O*(2n) needs n >= 0");
    return {GroupKind::OStar, 0, 0, n};
  }

  int rank() const { return kind == GroupKind::Sp ? p + q : n; }

  // Levi factor Sp(p-r,q-r) resp. O*(2(n-2r)) of the cuspidal parabolic
  GroupSig levi(int r) const {
    if (kind == GroupKind::Sp) return sp(p - r, q - r);
    return ostar(n - 2 * r);
  }

  int max_r() const { return kind == GroupKind::Sp ? std::min(p, q) : n / 2; }

  std::string str() const {
    if (kind == GroupKind::Sp) return "Sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return "O*(" + std::to_string(2 * n) + ")";
  }

  friend bool operator==(const GroupSig& a, const GroupSig& b) {
    if (a.kind != b.kind) return false;
    return a.kind == GroupKind::Sp ? (a.p == b.p && a.q == b.q) : a.n == b.n;
  }
  friend bool operator!=(const GroupSig& a, const GroupSig& b) { return !(a == b); }
};

}  // namespace theta

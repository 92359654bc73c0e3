#pragma once

#include <vector>

#include "theta/group.hpp"
#include "theta/scalar.hpp"

namespace theta {

// Harish-Chandra parameter of a limit of discrete series of the Levi group.
// Sp(p',q'): left has length p', right length q'.
// O*(2n'): the full tuple sits in `left`; `right` stays empty.
struct HCParam {
  std::vector<Scalar> left;
  std::vector<Scalar> right;

  friend bool operator==(const HCParam& a, const HCParam& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const HCParam& a, const HCParam& b) { return !(a == b); }
};

// One repeated value a_i > 0 with its multiplicities. For Sp, m counts the
// left side and n the right side. For O*, m counts +a_i and n counts -a_i.
struct HCBlock {
  Scalar value;
  int m = 0;
  int n = 0;

  bool tied() const { return m == n && m > 0; }
};

// Blocks sorted by strictly decreasing value, plus the optional single zero
// in the middle of an O* parameter.
struct HCShape {
  std::vector<HCBlock> blocks;
  bool middle_zero = false;

  int tied_count() const {
    int t = 0;
    for (const auto& b : blocks) t += b.tied() ? 1 : 0;
    return t;
  }
  // index of the block holding `value`, or -1
  int block_of(const Scalar& value) const {
    for (size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].value == value) return static_cast<int>(i);
    return -1;
  }
};

// Validate the shape against the Levi signature and decompose into blocks.
// Throws ShapeError on any violation.
HCShape analyze_shape(const GroupSig& levi, const HCParam& lambda);

// All values, in tuple order, as one flat sequence (left then right for Sp).
std::vector<Scalar> flatten(const HCParam& lambda);

HCParam make_hc(std::vector<long> left, std::vector<long> right = {});

// (a, a-1, ..., b); empty when a < b
std::vector<long> descending_range(long a, long b);

}  // namespace theta

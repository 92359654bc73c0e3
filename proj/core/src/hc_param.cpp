#include "theta/hc_param.hpp"

#include <algorithm>
#include <map>

namespace theta {

namespace {

void check_weakly_decreasing_integers(const std::vector<Scalar>& v, const char* side) {
  for (size_t i = 0; i < v.size(); ++i) {
    require(v[i].is_integer(), "ShapeError",
            std::string(side) + " entries must be integers, got " + v[i].str());
    if (i > 0)
      require(!(v[i - 1] < v[i]), "ShapeError",
              std::string(side) + " entries must be weakly decreasing");
  }
}

HCShape analyze_sp(const GroupSig& levi, const HCParam& lambda) {
  require(static_cast<int>(lambda.left.size()) == levi.p &&
              static_cast<int>(lambda.right.size()) == levi.q,
          "ShapeError",
          "parameter length does not match " + levi.str());
  check_weakly_decreasing_integers(lambda.left, "left");
  check_weakly_decreasing_integers(lambda.right, "right");

  std::map<long, HCBlock, std::greater<>> by_value;
  for (const auto& x : lambda.left) {
    long v = x.to_long();
    require(v >= 1, "ShapeError", "entries must be positive, got " + x.str());
    auto& b = by_value[v];
    b.value = x;
    b.m += 1;
  }
  for (const auto& x : lambda.right) {
    long v = x.to_long();
    require(v >= 1, "ShapeError", "entries must be positive, got " + x.str());
    auto& b = by_value[v];
    b.value = x;
    b.n += 1;
  }

  HCShape shape;
  for (auto& [v, b] : by_value) {
    require(std::abs(b.m - b.n) <= 1, "ShapeError",
            "value " + std::to_string(v) + " has multiplicities |m-n| > 1");
    shape.blocks.push_back(b);
  }
  return shape;
}

HCShape analyze_ostar(const GroupSig& levi, const HCParam& lambda) {
  require(lambda.right.empty(), "ShapeError", "O* parameters use a single tuple");
  require(static_cast<int>(lambda.left.size()) == levi.n, "ShapeError",
          "parameter length does not match " + levi.str());
  check_weakly_decreasing_integers(lambda.left, "left");

  int zeros = 0;
  std::map<long, HCBlock, std::greater<>> by_value;  // keyed by |value|
  for (const auto& x : lambda.left) {
    long v = x.to_long();
    if (v == 0) {
      ++zeros;
      continue;
    }
    auto& b = by_value[std::labs(v)];
    b.value = Scalar(std::labs(v));
    (v > 0 ? b.m : b.n) += 1;
  }
  require(zeros <= 1, "ShapeError", "at most one zero entry is allowed");

  HCShape shape;
  shape.middle_zero = zeros == 1;
  for (auto& [v, b] : by_value) {
    require(std::abs(b.m - b.n) <= 1, "ShapeError",
            "value " + std::to_string(v) + " has multiplicities |m-n| > 1");
    shape.blocks.push_back(b);
  }
  return shape;
}

}  // namespace

HCShape analyze_shape(const GroupSig& levi, const HCParam& lambda) {
  return levi.kind == GroupKind::Sp ? analyze_sp(levi, lambda) : analyze_ostar(levi, lambda);
}

std::vector<Scalar> flatten(const HCParam& lambda) {
  std::vector<Scalar> out = lambda.left;
  out.insert(out.end(), lambda.right.begin(), lambda.right.end());
  return out;
}

HCParam make_hc(std::vector<long> left, std::vector<long> right) {
  HCParam h;
  h.left.assign(left.begin(), left.end());
  h.right.assign(right.begin(), right.end());
  return h;
}

std::vector<long> descending_range(long a, long b) {
  std::vector<long> out;
  for (long v = a; v >= b; --v) out.push_back(v);
  return out;
}

}  // namespace theta

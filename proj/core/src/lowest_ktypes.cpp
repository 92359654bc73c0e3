#include "theta/lowest_ktypes.hpp"

#include <algorithm>
#include <map>

namespace theta {

namespace {

struct MergedBlock {
  Scalar alpha;
  int big_m = 0;
  int big_n = 0;
};

// delta choices for one merged block: 0 for integral beta; otherwise +-1/2,
// forced through the tied sign when alpha is a value of lambda itself
std::vector<Scalar> delta_choices(const Scalar& beta, const Scalar& alpha, const HCShape& shape,
                                  const PosSystem& resolved) {
  if (beta.is_integer()) return {Scalar(0)};
  require(beta.is_half_integer(), "ShapeError", "internal: beta neither integral nor half");
  int j = shape.block_of(alpha);
  if (j < 0) return {Scalar::half(1), Scalar::half(-1)};
  require(shape.blocks[static_cast<size_t>(j)].tied(), "ShapeError",
          "internal: forced delta on an untied block");
  return {resolved.tied_signs.at(j) == BlockSign::Plus ? Scalar::half(1) : Scalar::half(-1)};
}

template <typename Emit>
void for_each_delta(const std::vector<std::vector<Scalar>>& choices, Emit emit) {
  std::vector<Scalar> delta(choices.size());
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == choices.size()) {
      emit(delta);
      return;
    }
    for (const auto& d : choices[i]) {
      delta[i] = d;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::set<KTypeSp> lowest_ktypes_sp(const LanglandsParam& param) {
  require(param.group.kind == GroupKind::Sp, "ShapeError", "expected an Sp parameter");
  validate(param);
  const GroupSig levi = param.levi();
  const HCShape shape = analyze_shape(levi, param.lambda);
  const PosSystem resolved = resolve_pos_system(param.psi, levi, param.lambda);
  const int p = param.group.p, q = param.group.q;

  // dominant rearrangement of (lambda_left, mu/2; lambda_right, mu/2)
  std::map<Rational, MergedBlock, std::greater<>> merged;
  auto add = [&](const Scalar& v, bool left_side) {
    auto& b = merged[v.re];
    b.alpha = v;
    (left_side ? b.big_m : b.big_n) += 1;
  };
  for (const auto& x : param.lambda.left) add(x, true);
  for (const auto& x : param.lambda.right) add(x, false);
  for (long m : param.mu) {
    add(Scalar::half(m), true);
    add(Scalar::half(m), false);
  }

  std::vector<MergedBlock> blocks;
  for (auto& [v, b] : merged) blocks.push_back(b);

  std::vector<Scalar> beta(blocks.size()), gamma(blocks.size());
  std::vector<std::vector<Scalar>> choices(blocks.size());
  int cm = 0, cn = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    cm += blocks[i].big_m;
    cn += blocks[i].big_n;
    beta[i] = blocks[i].alpha + Scalar(cm - cn) +
              Scalar::half(-(blocks[i].big_m - blocks[i].big_n + 1)) + Scalar(q - p);
    gamma[i] = blocks[i].alpha + Scalar(cn - cm) +
               Scalar::half(-(blocks[i].big_n - blocks[i].big_m + 1)) + Scalar(p - q);
    choices[i] = delta_choices(beta[i], blocks[i].alpha, shape, resolved);
  }
  require(cm == p && cn == q, "ShapeError", "internal: block multiplicities do not add up");

  std::set<KTypeSp> out;
  for_each_delta(choices, [&](const std::vector<Scalar>& delta) {
    KTypeSp kt;
    for (size_t i = 0; i < blocks.size(); ++i) {
      long av = (beta[i] + delta[i]).to_long();
      for (int c = 0; c < blocks[i].big_m; ++c) kt.a.push_back(av);
      long bv = (gamma[i] - delta[i]).to_long();
      for (int c = 0; c < blocks[i].big_n; ++c) kt.b.push_back(bv);
    }
    check_dominant(kt);
    out.insert(std::move(kt));
  });
  return out;
}

std::set<KTypeU> lowest_ktypes_ostar(const LanglandsParam& param) {
  require(param.group.kind == GroupKind::OStar, "ShapeError", "expected an O* parameter");
  validate(param);
  const GroupSig levi = param.levi();
  const HCShape shape = analyze_shape(levi, param.lambda);
  const PosSystem resolved = resolve_pos_system(param.psi, levi, param.lambda);

  std::map<Rational, MergedBlock, std::greater<>> merged;
  bool middle_zero = false;
  auto add = [&](const Scalar& v) {
    if (v.is_zero()) {
      middle_zero = true;
      return;
    }
    Scalar key = v.sign_normalized();
    auto& b = merged[key.re];
    b.alpha = key;
    (v.flips_under_normalization() ? b.big_n : b.big_m) += 1;
  };
  for (const auto& x : param.lambda.left) add(x);
  for (long m : param.mu) {
    add(Scalar::half(m));
    add(Scalar::half(-m));
  }

  std::vector<MergedBlock> blocks;
  for (auto& [v, b] : merged) blocks.push_back(b);

  std::vector<Scalar> beta(blocks.size()), gamma(blocks.size());
  std::vector<std::vector<Scalar>> choices(blocks.size());
  int cm = 0, cn = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    cm += blocks[i].big_m;
    cn += blocks[i].big_n;
    beta[i] = blocks[i].alpha + Scalar(cm - cn) +
              Scalar::half(-(blocks[i].big_m - blocks[i].big_n + 1));
    gamma[i] = blocks[i].alpha + Scalar(cn - cm) +
               Scalar::half(-(blocks[i].big_n - blocks[i].big_m + 1));
    choices[i] = delta_choices(beta[i], blocks[i].alpha, shape, resolved);
  }
  const long middle_value = cm - cn;

  std::set<KTypeU> out;
  for_each_delta(choices, [&](const std::vector<Scalar>& delta) {
    KTypeU kt;
    for (size_t i = 0; i < blocks.size(); ++i) {
      long v = (beta[i] + delta[i]).to_long();
      for (int c = 0; c < blocks[i].big_m; ++c) kt.w.push_back(v);
    }
    if (middle_zero) kt.w.push_back(middle_value);
    for (size_t ri = blocks.size(); ri-- > 0;) {
      long v = (-gamma[ri] + delta[ri]).to_long();
      for (int c = 0; c < blocks[ri].big_n; ++c) kt.w.push_back(v);
    }
    check_dominant(kt);
    out.insert(std::move(kt));
  });
  return out;
}

InfChar infinitesimal_character(const LanglandsParam& param) {
  validate(param);
  InfChar c;
  c.weyl = param.group.kind == GroupKind::Sp ? WeylFamily::TypeC : WeylFamily::TypeD;
  c.entries = flatten(param.lambda);
  for (size_t i = 0; i < param.mu.size(); ++i) {
    Rational m(param.mu[i]);
    c.entries.push_back(
        Scalar(Rational(1, 2) * (param.nu[i].re + m), Rational(1, 2) * param.nu[i].im));
    c.entries.push_back(
        Scalar(Rational(1, 2) * (param.nu[i].re - m), Rational(1, 2) * param.nu[i].im));
  }
  return c;
}

}  // namespace theta

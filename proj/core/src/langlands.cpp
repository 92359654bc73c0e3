#include "theta/langlands.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace theta {

LanglandsParam trivial_param(const GroupSig& sig) {
  LanglandsParam p;
  p.group = sig;
  return p;
}

void validate(const LanglandsParam& param) {
  require(param.r >= 0, "RankError", "r must be nonnegative");
  require(param.r <= param.group.max_r(), "RankError",
          "r = " + std::to_string(param.r) + " exceeds the rank bound of " + param.group.str());

  require(param.mu.size() == static_cast<size_t>(param.r) &&
              param.nu.size() == static_cast<size_t>(param.r),
          "ShapeError", "mu and nu must have length r");
  for (long m : param.mu)
    require(m >= 1, "ShapeError", "mu entries must be positive integers");

  GroupSig levi = param.levi();
  analyze_shape(levi, param.lambda);           // ShapeError on violation
  resolve_pos_system(param.psi, levi, param.lambda);  // ConditionA on violation

  for (size_t i = 0; i < param.mu.size(); ++i)
    require(param.mu[i] % 2 != 0 || !param.nu[i].is_zero(), "ParityError",
            "mu_" + std::to_string(i + 1) + " is even but nu_" + std::to_string(i + 1) +
                " vanishes");
}

LanglandsParam canonicalize(LanglandsParam param) {
  validate(param);
  std::vector<std::pair<long, Scalar>> pairs;
  for (size_t i = 0; i < param.mu.size(); ++i)
    pairs.push_back({param.mu[i], param.nu[i].sign_normalized()});
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    if (a.second.re != b.second.re) return b.second.re < a.second.re;
    return b.second.im < a.second.im;
  });
  for (size_t i = 0; i < pairs.size(); ++i) {
    param.mu[i] = pairs[i].first;
    param.nu[i] = pairs[i].second;
  }
  return param;
}

bool canonical_equal(const LanglandsParam& a, const LanglandsParam& b) {
  if (a.group != b.group || a.r != b.r || a.lambda != b.lambda) return false;
  if (a.mu != b.mu || a.nu != b.nu) return false;
  PosSystem ra = resolve_pos_system(a.psi, a.levi(), a.lambda);
  PosSystem rb = resolve_pos_system(b.psi, b.levi(), b.lambda);
  return ra.tied_signs == rb.tied_signs;
}

LanglandsParam transport_swap(const LanglandsParam& param) {
  require(param.group.kind == GroupKind::Sp, "ShapeError", "swap transport is for Sp parameters");
  LanglandsParam out = param;
  out.group = GroupSig::sp(param.group.q, param.group.p);
  std::swap(out.lambda.left, out.lambda.right);
  PosSystem resolved = resolve_pos_system(param.psi, param.levi(), param.lambda);
  out.psi = PosSystem();
  for (const auto& [idx, sign] : resolved.tied_signs)
    out.psi.tied_signs[idx] = sign == BlockSign::Plus ? BlockSign::Minus : BlockSign::Plus;
  return out;
}

std::string param_str(const LanglandsParam& param) {
  std::ostringstream os;
  os << "pi(" << param.group.str() << ", r=" << param.r << ", [";
  for (size_t i = 0; i < param.lambda.left.size(); ++i)
    os << (i ? "," : "") << param.lambda.left[i].str();
  if (param.group.kind == GroupKind::Sp) {
    os << ";";
    for (size_t i = 0; i < param.lambda.right.size(); ++i)
      os << (i ? "," : "") << param.lambda.right[i].str();
  }
  os << "]";
  if (param.psi.name) os << ", " << *param.psi.name;
  PosSystem resolved = resolve_pos_system(param.psi, param.levi(), param.lambda);
  if (!resolved.tied_signs.empty()) {
    os << ", signs{";
    bool first = true;
    for (const auto& [idx, sign] : resolved.tied_signs) {
      os << (first ? "" : ",") << idx << ":" << (sign == BlockSign::Plus ? "+" : "-");
      first = false;
    }
    os << "}";
  }
  if (param.r > 0) {
    os << ", mu=(";
    for (size_t i = 0; i < param.mu.size(); ++i) os << (i ? "," : "") << param.mu[i];
    os << "), nu=(";
    for (size_t i = 0; i < param.nu.size(); ++i) os << (i ? "," : "") << param.nu[i].str();
    os << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace theta

#include "theta/ktype.hpp"

#include <sstream>

namespace theta {

void check_dominant(const KTypeSp& kt) {
  auto check_side = [](const std::vector<long>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      require(v[i] >= 0, "ShapeError", "Sp-type entries must be nonnegative");
      if (i > 0) require(v[i - 1] >= v[i], "ShapeError", "Sp-type entries must be decreasing");
    }
  };
  check_side(kt.a);
  check_side(kt.b);
}

void check_dominant(const KTypeU& kt) {
  for (size_t i = 1; i < kt.w.size(); ++i)
    require(kt.w[i - 1] >= kt.w[i], "ShapeError", "U-type entries must be decreasing");
}

Integer norm(const KTypeSp& kt, const GroupSig& sig) {
  require(sig.kind == GroupKind::Sp, "LengthMismatch", "Sp-type norm needs an Sp signature");
  require(kt.a.size() == static_cast<size_t>(sig.p) && kt.b.size() == static_cast<size_t>(sig.q),
          "LengthMismatch", "type length does not match " + sig.str());
  Integer total = 0;
  for (size_t i = 0; i < kt.a.size(); ++i) {
    Integer t = kt.a[i] + 2 * sig.p + 2 - 2 * static_cast<long>(i + 1);
    total += t * t;
  }
  for (size_t j = 0; j < kt.b.size(); ++j) {
    Integer t = kt.b[j] + 2 * sig.q + 2 - 2 * static_cast<long>(j + 1);
    total += t * t;
  }
  return total;
}

Integer norm(const KTypeU& kt, const GroupSig& sig) {
  require(sig.kind == GroupKind::OStar, "LengthMismatch", "U-type norm needs an O* signature");
  require(kt.w.size() == static_cast<size_t>(sig.n), "LengthMismatch",
          "type length does not match " + sig.str());
  Integer total = 0;
  for (size_t i = 0; i < kt.w.size(); ++i) {
    Integer t = kt.w[i] + sig.n + 1 - 2 * static_cast<long>(i + 1);
    total += t * t;
  }
  return total;
}

std::string ktype_str(const KTypeSp& kt) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < kt.a.size(); ++i) os << (i ? "," : "") << kt.a[i];
  os << ";";
  for (size_t i = 0; i < kt.b.size(); ++i) os << (i ? "," : "") << kt.b[i];
  os << ")";
  return os.str();
}

std::string ktype_str(const KTypeU& kt) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < kt.w.size(); ++i) os << (i ? "," : "") << kt.w[i];
  os << ")";
  return os.str();
}

}  // namespace theta

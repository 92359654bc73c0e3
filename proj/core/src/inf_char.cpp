#include "theta/inf_char.hpp"

#include <algorithm>
#include <sstream>

#include "theta/error.hpp"

namespace theta {

bool equal_mod_weyl(const InfChar& a, const InfChar& b) {
  require(a.weyl == b.weyl, "LengthMismatch", "comparing characters of different Weyl families");
  require(a.entries.size() == b.entries.size(), "LengthMismatch",
          "comparing characters of different lengths");

  auto normalized = [](const InfChar& c, long& flips, bool& has_zero) {
    std::vector<Scalar> v;
    flips = 0;
    has_zero = false;
    for (const auto& x : c.entries) {
      if (x.is_zero()) has_zero = true;
      if (x.flips_under_normalization()) ++flips;
      v.push_back(x.sign_normalized());
    }
    std::sort(v.begin(), v.end());
    return v;
  };

  long fa = 0, fb = 0;
  bool za = false, zb = false;
  auto va = normalized(a, fa, za);
  auto vb = normalized(b, fb, zb);
  if (va != vb) return false;
  if (a.weyl == WeylFamily::TypeC) return true;
  if (za || zb) return true;
  return (fa + fb) % 2 == 0;
}

std::string infchar_str(const InfChar& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.entries.size(); ++i) os << (i ? "," : "") << c.entries[i].str();
  os << ")" << (c.weyl == WeylFamily::TypeC ? "C" : "D");
  return os.str();
}

}  // namespace theta

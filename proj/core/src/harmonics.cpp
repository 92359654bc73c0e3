#include "theta/harmonics.hpp"

#include <algorithm>

namespace theta {

FockProfile profile_sp(const KTypeSp& kt, int n) {
  check_dominant(kt);
  FockProfile prof;
  Integer deg = 0;
  for (long x : kt.a) {
    if (x > 0) ++prof.r;
    deg += x;
  }
  for (long x : kt.b) {
    if (x > 0) ++prof.s;
    deg += x;
  }
  prof.occurs_in_fock = prof.r <= n && prof.s <= n;
  prof.occurs_in_harmonics = prof.r + prof.s <= n;
  if (prof.occurs_in_fock) prof.degree = deg;
  return prof;
}

FockProfile profile_u(const KTypeU& kt, int p, int q) {
  check_dominant(kt);
  FockProfile prof;
  Integer deg = 0;
  for (long x : kt.w) {
    long res = x - (p - q);
    if (res > 0) {
      ++prof.r;
      deg += res;
    } else if (res < 0) {
      ++prof.s;
      deg -= res;
    }
  }
  prof.occurs_in_fock = prof.r <= 2 * p && prof.s <= 2 * q;
  prof.occurs_in_harmonics = prof.r <= p && prof.s <= q;
  if (prof.occurs_in_fock) prof.degree = deg;
  return prof;
}

KTypeU correspond(const KTypeSp& kt, int p, int q, int n) {
  require(kt.a.size() == static_cast<size_t>(p) && kt.b.size() == static_cast<size_t>(q),
          "LengthMismatch", "type length does not match Sp(p,q)");
  FockProfile prof = profile_sp(kt, n);
  require(prof.occurs_in_harmonics, "NotInHarmonics",
          ktype_str(kt) + " does not occur in the joint harmonics");
  KTypeU out;
  for (int i = 0; i < prof.r; ++i) out.w.push_back(kt.a[static_cast<size_t>(i)]);
  for (int i = 0; i < n - prof.r - prof.s; ++i) out.w.push_back(0);
  for (int i = prof.s; i-- > 0;) out.w.push_back(-kt.b[static_cast<size_t>(i)]);
  for (auto& x : out.w) x += p - q;
  return out;
}

KTypeSp correspond_u(const KTypeU& kt, int p, int q, int n) {
  require(kt.w.size() == static_cast<size_t>(n), "LengthMismatch",
          "type length does not match U(n)");
  FockProfile prof = profile_u(kt, p, q);
  require(prof.occurs_in_harmonics, "NotInHarmonics",
          ktype_str(kt) + " does not occur in the joint harmonics");
  KTypeSp out;
  for (long x : kt.w) {
    long res = x - (p - q);
    if (res > 0) out.a.push_back(res);
  }
  for (size_t i = kt.w.size(); i-- > 0;) {
    long res = kt.w[i] - (p - q);
    if (res < 0) out.b.push_back(-res);
  }
  out.a.resize(static_cast<size_t>(p), 0);
  out.b.resize(static_cast<size_t>(q), 0);
  return out;
}

std::vector<KTypeU> lowest_degree_ktypes_ostar4(const OStar4Rep& rep, int p, int q) {
  const long shift = p - q;
  const long c = (rep.l1 - rep.l2).to_long() - 1;

  // Residuals at index idx are idx+c-shift and idx-shift, so Fock occurrence
  // and the degree are monotone interval conditions in idx: the degree sits
  // at the constant c on the valley [shift-c, shift] and grows by 2 per step
  // outside it.
  bool lo_unbounded = q >= 1, hi_unbounded = p >= 1;
  long lo = q >= 1 ? 0 : shift;        // s' <= 2q
  long hi = p >= 1 ? 0 : shift - c;    // r' <= 2p
  auto mn = index_min(rep);
  auto mx = index_max(rep);
  if (mn && (lo_unbounded || lo < *mn)) {
    lo = *mn;
    lo_unbounded = false;
  }
  if (mx && (hi_unbounded || hi > *mx)) {
    hi = *mx;
    hi_unbounded = false;
  }
  require(lo_unbounded || hi_unbounded || lo <= hi, "NoneOccur",
          "no K-type of " + rep_str(rep) + " occurs in the Fock space at (" +
              std::to_string(p) + "," + std::to_string(q) + ")");

  const long valley_lo = shift - c, valley_hi = shift;
  long from, to;
  if (!hi_unbounded && hi < valley_lo) {
    from = to = hi;  // everything sits left of the valley
  } else if (!lo_unbounded && lo > valley_hi) {
    from = to = lo;  // everything sits right of the valley
  } else {
    from = lo_unbounded ? valley_lo : std::max(lo, valley_lo);
    to = hi_unbounded ? valley_hi : std::min(hi, valley_hi);
  }

  std::vector<KTypeU> out;
  for (long idx = from; idx <= to; ++idx) out.push_back(ktype_at_index(rep, idx));
  return out;
}

std::vector<KTypeU> lowest_degree_ktypes_ostar2(const OStar2Rep& rep, int p, int q) {
  KTypeU kt{{rep.k}};
  FockProfile prof = profile_u(kt, p, q);
  require(prof.occurs_in_fock, "NoneOccur",
          "the character does not occur in the Fock space at (" + std::to_string(p) + "," +
              std::to_string(q) + ")");
  return {kt};
}

}  // namespace theta

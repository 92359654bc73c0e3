#include "theta/lifts.hpp"

namespace theta {

namespace {

LiftResult zero_result(std::string rule) {
  LiftResult res;
  res.trace.push_back({LiftStep::Kind::Base, 0, 0, 0, std::move(rule)});
  return res;
}

LiftResult base_result(LanglandsParam param, std::string rule) {
  LiftResult res;
  res.value = canonicalize(std::move(param));
  res.trace.push_back({LiftStep::Kind::Base, 0, 0, 0, std::move(rule)});
  return res;
}

// transports a lift computed on Sp(q,p) back through the swap Sp(q,p)=Sp(p,q)
LiftResult dualize(LiftResult inner) {
  if (inner.value) inner.value = transport_swap(*inner.value);
  inner.trace.push_back({LiftStep::Kind::Duality, 0, 0, 0, ""});
  return inner;
}

LiftResult lift_up(LiftResult base, int base_p, int base_q, int n, int s) {
  require(!base.zero(), "RankError", "internal: going-up from a vanishing base");
  base.value = canonicalize(going_up(*base.value, base_p, base_q, n, s));
  base.trace.push_back({LiftStep::Kind::GoingUp, s, base_p, base_q, ""});
  return base;
}

LanglandsParam mk_sp(int p, int q, int r, std::vector<long> left, std::vector<long> right,
                     PosSystem psi, std::vector<long> mu = {}, std::vector<Scalar> nu = {}) {
  LanglandsParam param;
  param.group = GroupSig::sp(p, q);
  param.r = r;
  param.lambda = make_hc(std::move(left), std::move(right));
  param.psi = std::move(psi);
  param.mu = std::move(mu);
  param.nu = std::move(nu);
  validate(param);
  return param;
}

// (p-1, ..., lam+1, lam, lam, lam-1, ..., 1): the doubled tuple of the
// limit cases; length p
std::vector<long> doubled_range(long top, long lam) {
  std::vector<long> v = descending_range(top, lam);
  auto tail = descending_range(lam, 1);
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

PosSystem psi(const char* name) { return PosSystem::named(name); }

}  // namespace

InfChar expected_infchar(std::vector<Scalar> head, int p, int q, int n) {
  require(p + q >= n, "RankError", "expected character needs p + q >= n");
  InfChar c;
  c.weyl = WeylFamily::TypeC;
  c.entries = std::move(head);
  for (long v = p + q - n; v >= 1; --v) c.entries.push_back(Scalar(v));
  return c;
}

InfChar expected_infchar(const OStar2Rep& rep, int p, int q) {
  return expected_infchar({Scalar(rep.k)}, p, q, 1);
}

InfChar expected_infchar(const OStar4Rep& rep, int p, int q) {
  return expected_infchar({rep.l1, rep.l2}, p, q, 2);
}

LanglandsParam going_up(const LanglandsParam& param, int base_p, int base_q, int n, int s) {
  require(param.group == GroupSig::sp(base_p, base_q), "RankError",
          "parameter does not live at the stated base signature");
  require(s >= 0, "RankError", "going-up needs s >= 0");
  LanglandsParam out = param;
  out.group = GroupSig::sp(base_p + s, base_q + s);
  out.r += s;
  for (int i = 1; i <= s; ++i) {
    out.mu.push_back(1);
    out.nu.push_back(Scalar(2L * base_p + 2L * base_q - 2L * n + 4L * i - 1L));
  }
  validate(out);
  return out;
}

LiftResult theta_ostar2(long k, int p, int q) {
  require(p >= 0 && q >= 0, "ShapeError", "signature entries must be nonnegative");
  if (q > p) return dualize(theta_ostar2(-k, q, p));

  if (q == 0) {
    if (p == 0)
      return k == 0 ? base_result(trivial_param(GroupSig::sp(0, 0)), "chi.q0.trivial")
                    : zero_result("chi.q0.zero");
    if (k < p) return zero_result("chi.q0.zero");
    std::vector<long> left = descending_range(p - 1, 1);
    left.insert(left.begin(), k);
    return base_result(mk_sp(p, 0, 0, std::move(left), {}, psi("Psi1")), "chi.q0.cohomological");
  }

  if (q == 1) {
    if (p == 1) {
      if (k > 0) return base_result(mk_sp(1, 1, 0, {k}, {1}, psi("Psi3")), "chi.q1.p1.pos");
      if (k < 0) return base_result(mk_sp(1, 1, 0, {1}, {-k}, psi("Psi2")), "chi.q1.p1.neg");
      return base_result(mk_sp(1, 1, 1, {}, {}, PosSystem(), {1}, {Scalar(1)}), "chi.q1.p1.zero");
    }
    if (k >= p - 1) {
      std::vector<long> left = descending_range(p - 2, 1);
      left.insert(left.begin(), k);
      return base_result(
          mk_sp(p, 1, 1, std::move(left), {}, psi("Psi1"), {1}, {Scalar(2L * p - 1)}),
          "chi.q1.high");
    }
    if (k > -p)
      return base_result(mk_sp(p, 1, 1, descending_range(p - 1, 1), {}, psi("Psi1"), {p - k},
                               {Scalar(p + k)}),
                         "chi.q1.mid");
    return base_result(mk_sp(p, 1, 0, descending_range(p, 1), {-k}, psi("Psi2")), "chi.q1.low");
  }

  return lift_up(theta_ostar2(k, p - q + 1, 1), p - q + 1, 1, 1, q - 1);
}

namespace {

// pi(1, (p-1,...,1), Psi1, l1-l2, l1+l2): the shared principal-series shape
// of the P and F lifts at (p,1)
LanglandsParam principal_q1(int p, const OStar4Rep& rep) {
  return mk_sp(p, 1, 1, descending_range(p - 1, 1), {}, psi("Psi1"),
               {(rep.l1 - rep.l2).to_long()}, {rep.l1 + rep.l2});
}

// pi(2, (p-2,...,1), Psi1, (p-1-l2, p-l1), (p-1+l2, p+l1)): the shared
// double-induced shape of the Dbar and F lifts at (p,2)
LanglandsParam double_induced_q2(int p, const OStar4Rep& rep) {
  long l1 = rep.l1.to_long(), l2 = rep.l2.to_long();
  return mk_sp(p, 2, 2, descending_range(p - 2, 1), {}, psi("Psi1"), {p - 1 - l2, p - l1},
               {Scalar(p - 1 + l2), Scalar(p + l1)});
}

}  // namespace

LiftResult theta_ostar4(const OStar4Rep& rep, int p, int q) {
  require(p >= 0 && q >= 0, "ShapeError", "signature entries must be nonnegative");
  if (q > p) return dualize(theta_ostar4(contragredient(rep), q, p));
  if (q >= 3)
    return lift_up(theta_ostar4(rep, p - q + 2, 2), p - q + 2, 2, 2, q - 2);

  switch (rep.family) {
    case OStar4Family::P: {
      if (q == 0) return zero_result("P.q0.zero");
      if (q == 1) return base_result(principal_q1(p, rep), "P.q1");
      return lift_up(theta_ostar4(rep, p - 1, 1), p - 1, 1, 2, 1);
    }

    case OStar4Family::F: {
      long l1 = rep.l1.to_long();
      if (q == 0) {
        if (p == 0 && l1 == 1 && rep.l2.is_zero())
          return base_result(trivial_param(GroupSig::sp(0, 0)), "F.q0.trivial");
        return zero_result("F.q0.zero");
      }
      if (q == 1)
        return l1 >= p ? base_result(principal_q1(p, rep), "F.q1") : zero_result("F.q1.zero");
      if (l1 < p - 1) return base_result(double_induced_q2(p, rep), "F.q2.small");
      return lift_up(theta_ostar4(rep, p - 1, 1), p - 1, 1, 2, 1);
    }

    case OStar4Family::Dbar: {
      long l1 = rep.l1.to_long(), l2 = rep.l2.to_long();
      if (q == 0) return zero_result("Dbar.q0.zero");
      if (q == 1) {
        if (l1 < p) return zero_result("Dbar.q1.zero");
        std::vector<long> left = descending_range(p - 1, 1);
        left.insert(left.begin(), l1);
        return base_result(mk_sp(p, 1, 0, std::move(left), {-l2}, psi("Psi2")), "Dbar.q1");
      }
      if (l1 >= p - 1) return lift_up(theta_ostar4(rep, p - 1, 1), p - 1, 1, 2, 1);
      if (l1 <= -p)
        return base_result(mk_sp(p, 2, 0, descending_range(p, 1), {-l2, -l1}, psi("Psi5")),
                           "Dbar.q2.deep");
      if (l2 <= -p + 1)
        return base_result(mk_sp(p, 2, 1, descending_range(p - 1, 1), {-l2}, psi("Psi2"),
                                 {p - l1}, {Scalar(p + l1)}),
                           "Dbar.q2.mid");
      return base_result(double_induced_q2(p, rep), "Dbar.q2.wide");
    }

    case OStar4Family::D: {
      long l1 = rep.l1.to_long(), l2 = rep.l2.to_long();
      if (q == 0) {
        if (p == 1 && l2 == 0)
          return base_result(mk_sp(1, 0, 0, {l1}, {}, psi("Psi1")), "D.q0.p1");
        if (p >= 2 && l2 >= p - 1) {
          std::vector<long> left = {l1, l2};
          auto tail = descending_range(p - 2, 1);
          left.insert(left.end(), tail.begin(), tail.end());
          return base_result(mk_sp(p, 0, 0, std::move(left), {}, psi("Psi1")),
                             "D.q0.cohomological");
        }
        return zero_result("D.q0.zero");
      }
      if (q == 1) {
        if (p == 1) {
          if (l2 >= 0) return zero_result("D.q1.p1.zero");
          return base_result(mk_sp(1, 1, 0, {l1}, {-l2}, psi("Psi4")), "D.q1.deep");
        }
        if (l1 <= p - 1) {
          if (l1 + l2 > 0)
            return base_result(mk_sp(p, 1, 1, descending_range(p - 1, 1), {}, psi("Psi1"),
                                     {l1 - l2}, {Scalar(l1 + l2)}),
                               "D.q1.small");
          // l1 + l2 = 0: the standard module collapses to a limit of
          // discrete series whose parameter satisfies condition (B)
          LanglandsParam param;
          param.group = GroupSig::sp(p, 1);
          param.lambda = make_hc(doubled_range(p - 1, l1), {l1});
          param.psi = unique_condition_a_system(param.group, param.lambda);
          validate(param);
          return base_result(std::move(param), "D.q1.small.limit");
        }
        if (l2 <= -p) {
          std::vector<long> left = descending_range(p - 1, 1);
          left.insert(left.begin(), l1);
          return base_result(mk_sp(p, 1, 0, std::move(left), {-l2}, psi("Psi4")), "D.q1.deep");
        }
        if (l2 == 1 - p) {
          std::vector<long> left = descending_range(p - 1, 1);
          left.insert(left.begin(), l1);
          return base_result(mk_sp(p, 1, 0, std::move(left), {p - 1}, psi("Psi4")), "D.q1.edge");
        }
        if (l2 <= p - 2) {
          std::vector<long> left = descending_range(p - 2, 1);
          left.insert(left.begin(), l1);
          return base_result(mk_sp(p, 1, 1, std::move(left), {}, psi("Psi1"), {p - 1 - l2},
                                   {Scalar(p - 1 + l2)}),
                             "D.q1.mid");
        }
        if (p == 2)
          return base_result(mk_sp(2, 1, 0, {l1, l2}, {1}, psi("Psi3")), "D.q1.p2.tall");
        std::vector<long> left = {l1, l2};
        auto tail = descending_range(p - 3, 1);
        left.insert(left.end(), tail.begin(), tail.end());
        return base_result(
            mk_sp(p, 1, 1, std::move(left), {}, psi("Psi1"), {1}, {Scalar(2L * p - 3)}),
            "D.q1.tall");
      }
      if (p == 2) {
        if (l2 >= 2)
          return base_result(mk_sp(2, 2, 0, {l1, l2}, {2, 1}, psi("Psi6")), "D.q2.tall");
        if (l2 == 1)
          return base_result(mk_sp(2, 2, 1, {l1}, {1}, psi("Psi3"), {3}, {Scalar(1)}),
                             "D.q2.one");
        if (l2 == 0)
          return base_result(mk_sp(2, 2, 1, {l1}, {1}, psi("Psi3"), {2}, {Scalar(2)}),
                             "D.q2.zero");
        return lift_up(theta_ostar4(rep, 1, 1), 1, 1, 2, 1);
      }
      return lift_up(theta_ostar4(rep, p - 1, 1), p - 1, 1, 2, 1);
    }
  }
  fail("ShapeError", "unreachable family");
}

}  // namespace theta

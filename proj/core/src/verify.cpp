#include "theta/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace theta {

namespace {

LanglandsParam mk(int p, int q, int r, std::vector<long> left, std::vector<long> right,
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

LiftResult golden_value(LanglandsParam param, const char* rule) {
  LiftResult res;
  res.value = canonicalize(std::move(param));
  res.trace.push_back({LiftStep::Kind::Base, 0, 0, 0, rule});
  return res;
}

LiftResult golden_zero(const char* rule) {
  LiftResult res;
  res.trace.push_back({LiftStep::Kind::Base, 0, 0, 0, rule});
  return res;
}

std::optional<LiftResult> transport_back(std::optional<LiftResult> mirror) {
  if (!mirror) return std::nullopt;
  if (mirror->value) mirror->value = transport_swap(*mirror->value);
  mirror->trace.push_back({LiftStep::Kind::Duality, 0, 0, 0, ""});
  return mirror;
}

std::vector<long> with_head(long head, std::vector<long> tail) {
  tail.insert(tail.begin(), head);
  return tail;
}

std::vector<long> doubled_tuple(long top, long lam) {
  std::vector<long> v = descending_range(top, lam);
  auto t = descending_range(lam, 1);
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

}  // namespace

std::optional<LiftResult> golden_ostar2(long k, int p, int q, Mutation m) {
  if (q > p) return transport_back(golden_ostar2(-k, q, p, m));

  if (q == 0) {
    if (p == 0)
      return k == 0 ? golden_value(trivial_param(GroupSig::sp(0, 0)), "golden.chi.q0.trivial")
                    : golden_zero("golden.chi.q0.zero");
    if (k < p) return golden_zero("golden.chi.q0.zero");
    return golden_value(mk(p, 0, 0, with_head(k, descending_range(p - 1, 1)), {},
                           PosSystem::named("Psi1")),
                        "golden.chi.q0");
  }
  if (q > 1) return std::nullopt;

  if (p == 1) {
    if (k > 0)
      return golden_value(mk(1, 1, 0, {k}, {1}, PosSystem::named("Psi3")), "golden.chi.q1.pos");
    if (k < 0)
      return golden_value(mk(1, 1, 0, {1}, {-k}, PosSystem::named("Psi2")), "golden.chi.q1.neg");
    return golden_value(mk(1, 1, 1, {}, {}, PosSystem(), {1}, {Scalar(1)}),
                        "golden.chi.q1.zero");
  }
  if (k >= p - 1) {
    long nu = 2L * p - 1 + (m == Mutation::ChiHighNuShift ? 2 : 0);
    return golden_value(mk(p, 1, 1, with_head(k, descending_range(p - 2, 1)), {},
                           PosSystem::named("Psi1"), {1}, {Scalar(nu)}),
                        "golden.chi.q1.high");
  }
  if (k > -p) {
    long nu = p + k + (m == Mutation::ChiMidNuShift ? 2 : 0);
    return golden_value(
        mk(p, 1, 1, descending_range(p - 1, 1), {}, PosSystem::named("Psi1"), {p - k},
           {Scalar(nu)}),
        "golden.chi.q1.mid");
  }
  PosSystem psi = PosSystem::named("Psi2");
  if (m == Mutation::ChiLowSignFlip && k == -p)
    psi = PosSystem::signs({{0, BlockSign::Plus}});  // the tied block is the top value
  return golden_value(mk(p, 1, 0, descending_range(p, 1), {-k}, std::move(psi)),
                      "golden.chi.q1.low");
}

std::optional<LiftResult> golden_ostar4(const OStar4Rep& rep, int p, int q, Mutation m) {
  if (q > p) return transport_back(golden_ostar4(contragredient(rep), q, p, m));

  const bool integral = rep.family != OStar4Family::P;
  const long l1 = integral ? rep.l1.to_long() : 0;
  const long l2 = integral ? rep.l2.to_long() : 0;

  if (q == 0) {
    switch (rep.family) {
      case OStar4Family::F:
        return (p == 0 && l1 == 1 && l2 == 0)
                   ? golden_value(trivial_param(GroupSig::sp(0, 0)), "golden.F.q0.trivial")
                   : golden_zero("golden.F.q0.zero");
      case OStar4Family::D:
        if (p == 1 && l2 == 0)
          return golden_value(mk(1, 0, 0, {l1}, {}, PosSystem::named("Psi1")), "golden.D.q0.p1");
        if (p >= 2 && l2 >= p - 1) {
          std::vector<long> left = {l1, l2};
          auto tail = descending_range(p - 2, 1);
          left.insert(left.end(), tail.begin(), tail.end());
          return golden_value(mk(p, 0, 0, std::move(left), {}, PosSystem::named("Psi1")),
                              "golden.D.q0");
        }
        return golden_zero("golden.D.q0.zero");
      default:
        return golden_zero("golden.PDbar.q0.zero");
    }
  }

  if (q == 1) {
    switch (rep.family) {
      case OStar4Family::P:
        return golden_value(mk(p, 1, 1, descending_range(p - 1, 1), {}, PosSystem::named("Psi1"),
                               {(rep.l1 - rep.l2).to_long()}, {rep.l1 + rep.l2}),
                            "golden.P.q1");
      case OStar4Family::F:
        if (l1 < p) return golden_zero("golden.F.q1.zero");
        return golden_value(mk(p, 1, 1, descending_range(p - 1, 1), {}, PosSystem::named("Psi1"),
                               {l1 - l2}, {Scalar(l1 + l2)}),
                            "golden.F.q1");
      case OStar4Family::Dbar: {
        if (l1 < p) return golden_zero("golden.Dbar.q1.zero");
        PosSystem psi = PosSystem::named("Psi2");
        if (m == Mutation::DbarQ1SignFlip && l1 == -l2)
          psi = PosSystem::signs({{0, BlockSign::Plus}});
        return golden_value(
            mk(p, 1, 0, with_head(l1, descending_range(p - 1, 1)), {-l2}, std::move(psi)),
            "golden.Dbar.q1");
      }
      case OStar4Family::D: {
        if (p == 1) {
          if (l2 >= 0) return golden_zero("golden.D.q1.zero");
          return golden_value(mk(1, 1, 0, {l1}, {-l2}, PosSystem::named("Psi4")),
                              "golden.D.q1.deep");
        }
        if (l1 <= p - 1 && l1 + l2 > 0)
          return golden_value(mk(p, 1, 1, descending_range(p - 1, 1), {}, PosSystem::named("Psi1"),
                                 {l1 - l2}, {Scalar(l1 + l2)}),
                              "golden.D.q1.small");
        if (l1 <= p - 1) {  // l1 + l2 = 0
          LanglandsParam param;
          param.group = GroupSig::sp(p, 1);
          param.lambda = make_hc(doubled_tuple(p - 1, l1), {l1});
          param.psi = unique_condition_a_system(param.group, param.lambda);
          validate(param);
          return golden_value(std::move(param), "golden.D.q1.limit");
        }
        if (l2 <= -p)
          return golden_value(
              mk(p, 1, 0, with_head(l1, descending_range(p - 1, 1)), {-l2},
                 PosSystem::named("Psi4")),
              "golden.D.q1.deep");
        if (l2 == 1 - p)
          return golden_value(
              mk(p, 1, 0, with_head(l1, descending_range(p - 1, 1)), {p - 1},
                 PosSystem::named("Psi4")),
              "golden.D.q1.edge");
        if (l2 <= p - 2)
          return golden_value(
              mk(p, 1, 1, with_head(l1, descending_range(p - 2, 1)), {}, PosSystem::named("Psi1"),
                 {p - 1 - l2}, {Scalar(p - 1 + l2)}),
              "golden.D.q1.mid");
        if (p == 2)
          return golden_value(mk(2, 1, 0, {l1, l2}, {1}, PosSystem::named("Psi3")),
                              "golden.D.q1.p2");
        std::vector<long> left = {l1, l2};
        auto tail = descending_range(p - 3, 1);
        left.insert(left.end(), tail.begin(), tail.end());
        return golden_value(mk(p, 1, 1, std::move(left), {}, PosSystem::named("Psi1"), {1},
                               {Scalar(2L * p - 3)}),
                            "golden.D.q1.tall");
      }
    }
  }

  if (q == 2) {
    switch (rep.family) {
      case OStar4Family::Dbar: {
        if (l1 >= p - 1) return std::nullopt;
        if (l1 <= -p)
          return golden_value(
              mk(p, 2, 0, descending_range(p, 1), {-l2, -l1}, PosSystem::named("Psi5")),
              "golden.Dbar.q2.deep");
        if (l2 <= -p + 1)
          return golden_value(mk(p, 2, 1, descending_range(p - 1, 1), {-l2},
                                 PosSystem::named("Psi2"), {p - l1}, {Scalar(p + l1)}),
                              "golden.Dbar.q2.mid");
        return golden_value(mk(p, 2, 2, descending_range(p - 2, 1), {}, PosSystem::named("Psi1"),
                               {p - 1 - l2, p - l1}, {Scalar(p - 1 + l2), Scalar(p + l1)}),
                            "golden.Dbar.q2.wide");
      }
      case OStar4Family::F: {
        if (l1 >= p - 1) return std::nullopt;
        return golden_value(mk(p, 2, 2, descending_range(p - 2, 1), {}, PosSystem::named("Psi1"),
                               {p - 1 - l2, p - l1}, {Scalar(p - 1 + l2), Scalar(p + l1)}),
                            "golden.F.q2.wide");
      }
      case OStar4Family::D: {
        if (p != 2 || l2 < 0) return std::nullopt;
        if (l2 >= 2) {
          PosSystem psi = PosSystem::named("Psi6");
          if (m == Mutation::DTallQ2SignFlip && l2 == 2)
            psi = PosSystem::signs({{1, BlockSign::Minus}});  // the tie sits below l1
          return golden_value(mk(2, 2, 0, {l1, l2}, {2, 1}, std::move(psi)), "golden.D.q2.tall");
        }
        if (l2 == 1)
          return golden_value(
              mk(2, 2, 1, {l1}, {1}, PosSystem::named("Psi3"), {3}, {Scalar(1)}),
              "golden.D.q2.one");
        return golden_value(mk(2, 2, 1, {l1}, {1}, PosSystem::named("Psi3"), {2}, {Scalar(2)}),
                            "golden.D.q2.zero");
      }
      default:
        return std::nullopt;
    }
  }

  return std::nullopt;
}

Ostar2Lift engine_ostar2() {
  return [](long k, int p, int q) -> std::optional<LiftResult> { return theta_ostar2(k, p, q); };
}

Ostar4Lift engine_ostar4() {
  return [](const OStar4Rep& rep, int p, int q) -> std::optional<LiftResult> {
    return theta_ostar4(rep, p, q);
  };
}

Ostar2Lift golden_ostar2_provider(Mutation m) {
  return [m](long k, int p, int q) { return golden_ostar2(k, p, q, m); };
}

Ostar4Lift golden_ostar4_provider(Mutation m) {
  return [m](const OStar4Rep& rep, int p, int q) { return golden_ostar4(rep, p, q, m); };
}

std::vector<OStar2Rep> all_ostar2_reps(long max_param) {
  std::vector<OStar2Rep> out;
  for (long k = -max_param; k <= max_param; ++k) out.push_back({k});
  return out;
}

std::vector<OStar4Rep> all_ostar4_reps(long max_param) {
  std::vector<OStar4Rep> out;
  for (long l1 = -max_param; l1 <= max_param; ++l1)
    for (long l2 = -max_param; l2 < l1; ++l2) {
      if (l1 + l2 >= 0) out.push_back(make_ostar4(OStar4Family::D, Scalar(l1), Scalar(l2)));
      if (l1 + l2 <= 0) out.push_back(make_ostar4(OStar4Family::Dbar, Scalar(l1), Scalar(l2)));
      if (l1 + l2 >= 1) out.push_back(make_ostar4(OStar4Family::F, Scalar(l1), Scalar(l2)));
    }
  // principal series: all half-integer pairs in range plus a few off-lattice
  // and complex samples
  for (long t2 = -2 * max_param + 1; t2 <= 2 * max_param - 1; t2 += 2)
    for (long t1 = t2 + 2; t1 <= 2 * max_param - 1; t1 += 2) {
      if (t1 + t2 < 0) continue;
      out.push_back(make_ostar4(OStar4Family::P, Scalar::half(t1), Scalar::half(t2)));
    }
  if (max_param >= 3) {
    auto quarter = [](long num) { return Scalar(Rational(num, 4)); };
    out.push_back(make_ostar4(OStar4Family::P, quarter(5), quarter(1)));
    out.push_back(make_ostar4(OStar4Family::P, Scalar(Rational(1), Rational(1)),
                              Scalar(Rational(0), Rational(1))));
    out.push_back(make_ostar4(OStar4Family::P, Scalar(Rational(2), Rational(1)),
                              Scalar(Rational(1), Rational(1))));
    out.push_back(make_ostar4(OStar4Family::P, Scalar(Rational(3, 2), Rational(2)),
                              Scalar(Rational(1, 2), Rational(2))));
  }
  return out;
}

namespace {

std::string cell_str(const std::string& rep, int p, int q) {
  return rep + " @ (" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// runs f over every rep/cell combination of both towers
void for_each_cell(int max_pq, long max_param,
                   const std::function<void(const std::string&, int, int, int,
                                            const std::optional<LiftResult>&,
                                            const std::vector<Scalar>&)>& f,
                   const Ostar2Lift& o2, const Ostar4Lift& o4) {
  for (const auto& rep : all_ostar2_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        f(to_json(rep), p, q, 1, o2(rep.k, p, q), {Scalar(rep.k)});
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        f(to_json(rep), p, q, 2, o4(rep, p, q), {rep.l1, rep.l2});
}

}  // namespace

CheckResult check_infchar_law(int max_pq, long max_param, const Ostar2Lift& o2,
                              const Ostar4Lift& o4) {
  CheckResult res;
  res.name = "infchar_law";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);
  for_each_cell(
      max_pq, max_param,
      [&](const std::string& rep, int p, int q, int n, const std::optional<LiftResult>& lift,
          const std::vector<Scalar>& head) {
        if (!lift || lift->zero() || p + q < n) return;
        InfChar actual = infinitesimal_character(*lift->value);
        InfChar expected = expected_infchar(head, p, q, n);
        if (equal_mod_weyl(actual, expected))
          res.pass();
        else
          res.fail_case(cell_str(rep, p, q), "character " + infchar_str(actual) +
                                                 " != expected " + infchar_str(expected));
      },
      o2, o4);
  return res;
}

CheckResult check_duality_law(int max_pq, long max_param, const Ostar2Lift& o2,
                              const Ostar4Lift& o4) {
  CheckResult res;
  res.name = "duality_law";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);
  auto compare = [&](const std::string& rep, int p, int q, std::optional<LiftResult> lhs,
                     std::optional<LiftResult> rhs) {
    if (!lhs || !rhs) return;
    if (lhs->zero() != rhs->zero()) {
      res.fail_case(cell_str(rep, p, q), "one side vanishes and the other does not");
      return;
    }
    if (lhs->zero()) {
      res.pass();
      return;
    }
    LanglandsParam transported = canonicalize(transport_swap(*rhs->value));
    if (canonical_equal(*lhs->value, transported))
      res.pass();
    else
      res.fail_case(cell_str(rep, p, q), "dual transport mismatch: " + param_str(*lhs->value) +
                                             " vs " + param_str(transported));
  };
  for (const auto& rep : all_ostar2_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        compare(to_json(rep), p, q, o2(rep.k, p, q), o2(-rep.k, q, p));
  for (const auto& rep : all_ostar4_reps(max_param)) {
    OStar4Rep dual = contragredient(rep);
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        compare(to_json(rep), p, q, o4(rep, p, q), o4(dual, q, p));
  }
  return res;
}

CheckResult check_harmonics_law(int max_pq, long max_param, const Ostar2Lift& o2,
                                const Ostar4Lift& o4) {
  CheckResult res;
  res.name = "harmonics_law";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);

  auto run = [&](const std::string& rep_name, int p, int q, int n,
                 const std::optional<LiftResult>& lift,
                 const std::function<std::vector<KTypeU>()>& lowest_degree) {
    if (!lift || lift->zero()) return;
    std::vector<KTypeU> targets;
    try {
      targets = lowest_degree();
    } catch (const Error&) {
      res.fail_case(cell_str(rep_name, p, q), "nonzero lift but no K-type occurs in the Fock space");
      return;
    }
    for (const auto& sigma : lowest_ktypes_sp(*lift->value)) {
      if (!profile_sp(sigma, n).occurs_in_harmonics) continue;
      KTypeU image = correspond(sigma, p, q, n);
      if (std::find(targets.begin(), targets.end(), image) != targets.end()) {
        res.pass();
        return;
      }
    }
    res.fail_case(cell_str(rep_name, p, q),
                  "no lowest K-type lands in the lowest-degree set through the joint harmonics");
  };

  for (const auto& rep : all_ostar2_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        run(to_json(rep), p, q, 1, o2(rep.k, p, q),
            [&] { return lowest_degree_ktypes_ostar2(rep, p, q); });
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q)
        run(to_json(rep), p, q, 2, o4(rep, p, q),
            [&] { return lowest_degree_ktypes_ostar4(rep, p, q); });
  return res;
}

CheckResult check_occurrence_law(int max_pq, long max_param) {
  CheckResult res;
  res.name = "occurrence_law";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);
  for (const auto& rep : all_ostar2_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q) {
        bool zero = theta_ostar2(rep.k, p, q).zero();
        if (zero == !occurs(rep, p, q))
          res.pass();
        else
          res.fail_case(cell_str(to_json(rep), p, q), "engine and occurrence set disagree");
      }
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int p = 0; p <= max_pq; ++p)
      for (int q = 0; q <= max_pq; ++q) {
        bool zero = theta_ostar4(rep, p, q).zero();
        if (zero == !occurs(rep, p, q))
          res.pass();
        else
          res.fail_case(cell_str(to_json(rep), p, q), "engine and occurrence set disagree");
      }
  return res;
}

CheckResult check_stable_range(int max_pq, long max_param) {
  CheckResult res;
  res.name = "stable_range";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);
  for (const auto& rep : all_ostar2_reps(max_param))
    for (int p = 1; p <= max_pq; ++p)
      for (int q = 1; q <= max_pq; ++q) {
        if (!theta_ostar2(rep.k, p, q).zero())
          res.pass();
        else
          res.fail_case(cell_str(to_json(rep), p, q), "vanishing lift inside the stable range");
      }
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int p = 2; p <= max_pq; ++p)
      for (int q = 2; q <= max_pq; ++q) {
        if (!theta_ostar4(rep, p, q).zero())
          res.pass();
        else
          res.fail_case(cell_str(to_json(rep), p, q), "vanishing lift inside the stable range");
      }
  return res;
}

CheckResult check_going_up_paths(int q_lo, int q_hi, int max_p, long max_param) {
  CheckResult res;
  res.name = "going_up_paths";
  res.grid = "q in [" + std::to_string(q_lo) + "," + std::to_string(q_hi) + "], p <= " +
             std::to_string(max_p) + ", |params| <= " + std::to_string(max_param);

  auto run = [&](const std::string& rep_name, int p, int q, int n, const LiftResult& engine,
                 const std::function<std::optional<LiftResult>(int, int)>& direct) {
    for (int s = 1; s <= q; ++s) {
      auto base = direct(p - s, q - s);
      if (!base || base->zero()) continue;
      LanglandsParam lifted = canonicalize(going_up(*base->value, p - s, q - s, n, s));
      if (engine.zero()) {
        res.fail_case(cell_str(rep_name, p, q), "engine vanishes but a going-up path exists");
        return;
      }
      if (canonical_equal(*engine.value, lifted))
        res.pass();
      else
        res.fail_case(cell_str(rep_name, p, q),
                      "path mismatch from base (" + std::to_string(p - s) + "," +
                          std::to_string(q - s) + "): " + param_str(lifted) + " vs " +
                          param_str(*engine.value));
    }
  };

  for (const auto& rep : all_ostar2_reps(max_param))
    for (int q = q_lo; q <= q_hi; ++q)
      for (int p = q; p <= max_p; ++p)
        run(to_json(rep), p, q, 1, theta_ostar2(rep.k, p, q),
            [&](int bp, int bq) { return golden_ostar2(rep.k, bp, bq); });
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int q = q_lo; q <= q_hi; ++q)
      for (int p = q; p <= max_p; ++p)
        run(to_json(rep), p, q, 2, theta_ostar4(rep, p, q),
            [&](int bp, int bq) { return golden_ostar4(rep, bp, bq); });
  return res;
}

CheckResult check_conservation(long max_param, int delta_bound) {
  CheckResult res;
  res.name = "conservation";
  res.grid = "|params| <= " + std::to_string(max_param) + ", |delta| <= " +
             std::to_string(delta_bound);
  for (const auto& rep : all_ostar4_reps(max_param)) {
    try {
      ConservationReport report = conservation_report(rep, delta_bound);
      // every sum-5 pair must carry one and the same value split {n, 5-n}
      std::set<std::pair<int, int>> splits;
      for (const auto& [t1, t2] : report.sum5_pairs) {
        int a = report.n_by_delta.at(t1.delta), b = report.n_by_delta.at(t2.delta);
        splits.insert({std::min(a, b), std::max(a, b)});
      }
      if (report.all_pairs_ok && splits.size() == 1)
        res.pass();
      else
        res.fail_case(to_json(rep), "sum-5 pairs carry " + std::to_string(splits.size()) +
                                        " distinct value splits");
    } catch (const Error& e) {
      res.fail_case(to_json(rep), e.what());
    }
  }
  return res;
}

CheckResult check_golden_ostar2(int max_p, long max_k) {
  CheckResult res;
  res.name = "golden_ostar2";
  res.grid = "p,q <= " + std::to_string(max_p) + " with q <= 1, |k| <= " + std::to_string(max_k);
  for (long k = -max_k; k <= max_k; ++k)
    for (int p = 0; p <= max_p; ++p)
      for (int q = 0; q <= std::min(max_p, 1); ++q) {
        auto golden = golden_ostar2(k, p, q);
        if (!golden) continue;
        LiftResult engine = theta_ostar2(k, p, q);
        if (engine.zero() != golden->zero()) {
          res.fail_case(cell_str(to_json(OStar2Rep{k}), p, q), "vanishing disagreement");
          continue;
        }
        if (engine.zero() || canonical_equal(*engine.value, *golden->value))
          res.pass();
        else
          res.fail_case(cell_str(to_json(OStar2Rep{k}), p, q),
                        "engine " + param_str(*engine.value) + " != formula " +
                            param_str(*golden->value));
      }
  return res;
}

CheckResult check_golden_ostar4(int max_p, long max_param) {
  CheckResult res;
  res.name = "golden_ostar4";
  res.grid = "p <= " + std::to_string(max_p) + ", q <= 2, |params| <= " + std::to_string(max_param);
  for (const auto& rep : all_ostar4_reps(max_param))
    for (int p = 0; p <= max_p; ++p)
      for (int q = 0; q <= 2; ++q) {
        auto golden = golden_ostar4(rep, p, q);
        if (!golden) continue;
        LiftResult engine = theta_ostar4(rep, p, q);
        if (engine.zero() != golden->zero()) {
          res.fail_case(cell_str(to_json(rep), p, q), "vanishing disagreement");
          continue;
        }
        if (engine.zero() || canonical_equal(*engine.value, *golden->value))
          res.pass();
        else
          res.fail_case(cell_str(to_json(rep), p, q), "engine " + param_str(*engine.value) +
                                                          " != formula " +
                                                          param_str(*golden->value));
      }
  return res;
}

CheckResult check_exclusion_bplus(int max_p, long max_param) {
  CheckResult res;
  res.name = "exclusion_bplus";
  res.grid = "p <= " + std::to_string(max_p) + ", |params| <= " + std::to_string(max_param);
  for (int p = 2; p <= max_p; ++p) {
    long bound = max_param + 2 * p + 2;
    auto list = enumerate_B_p2(p, bound);
    for (const auto& rep : all_ostar4_reps(max_param)) {
      bool in_g = (rep.family == OStar4Family::Dbar || rep.family == OStar4Family::F) &&
                  rep.l1.to_long() < p - 1;
      if (!in_g) continue;
      LiftResult lift = theta_ostar4(rep, p, 2);
      if (lift.zero()) {
        res.fail_case(cell_str(to_json(rep), p, 2), "vanishing lift of a G-set member");
        continue;
      }
      CatalogEntry probe;
      probe.param = *lift.value;
      bool found_plus = false, found = false;
      for (const auto& entry : list)
        if (same_entry(entry, probe)) {
          found = true;
          found_plus = entry.b_side == '+';
          break;
        }
      if (found && found_plus)
        res.pass();
      else
        res.fail_case(cell_str(to_json(rep), p, 2),
                      found ? "lift lands outside the plus part" : "lift missing from the list");
    }
  }
  return res;
}

namespace {

// brute-force membership test: every lowest K-type matches the shape
bool lkt_shape_all(const LanglandsParam& param,
                   const std::function<bool(const KTypeSp&)>& shape) {
  for (const auto& kt : lowest_ktypes_sp(param))
    if (!shape(kt)) return false;
  return true;
}

// all valid (r, lambda, Psi, mu) with discrete data bounded by `bound`
std::vector<LanglandsParam> all_params(const GroupSig& sig, long bound) {
  std::vector<LanglandsParam> out;
  for (int r = 0; r <= sig.max_r(); ++r) {
    GroupSig levi = sig.levi(r);
    for (const auto& lambda : enumerate_hc_params(levi, bound)) {
      for (const auto& psi : condition_a_systems(levi, lambda)) {
        std::vector<std::vector<long>> mus{{}};
        for (int i = 0; i < r; ++i) {
          std::vector<std::vector<long>> next;
          for (const auto& mu : mus) {
            long hi = mu.empty() ? bound : mu.back();
            for (long m = 1; m <= hi; ++m) {
              auto ext = mu;
              ext.push_back(m);
              next.push_back(std::move(ext));
            }
          }
          mus = std::move(next);
        }
        for (const auto& mu : mus) {
          LanglandsParam param;
          param.group = sig;
          param.r = r;
          param.lambda = lambda;
          param.psi = psi;
          param.mu = mu;
          for (long m : mu) param.nu.push_back(Scalar(m));
          validate(param);
          out.push_back(std::move(param));
        }
      }
    }
  }
  return out;
}

bool entry_sets_equal(const std::vector<CatalogEntry>& list,
                      const std::vector<CatalogEntry>& brute, std::string& detail) {
  auto find_in = [](const CatalogEntry& e, const std::vector<CatalogEntry>& v) {
    for (const auto& x : v)
      if (same_entry(e, x)) return true;
    return false;
  };
  for (const auto& e : list)
    if (!find_in(e, brute)) {
      detail = "listed but not generated: " + param_str(e.param) + " [" + e.case_tag + "]";
      return false;
    }
  for (const auto& e : brute)
    if (!find_in(e, list)) {
      detail = "generated but not listed: " + param_str(e.param);
      return false;
    }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j)
      if (same_entry(list[i], list[j])) {
        detail = "duplicate entries " + list[i].case_tag + "/" + list[j].case_tag + ": " +
                 param_str(list[i].param);
        return false;
      }
  return true;
}

}  // namespace

CheckResult check_catalog_soundness(int max_p_a, int max_p_b, long bound) {
  CheckResult res;
  res.name = "catalog_soundness";
  res.grid = "A: p <= " + std::to_string(max_p_a) + ", B: p <= " + std::to_string(max_p_b) +
             ", C; entries <= " + std::to_string(bound);
  auto a_shape = [](const KTypeSp& kt) {
    for (size_t i = 1; i < kt.a.size(); ++i)
      if (kt.a[i] != 0) return false;
    return true;
  };
  auto b_shape = [](const KTypeSp& kt) {
    for (long x : kt.a)
      if (x != 0) return false;
    return true;
  };
  auto c_shape = [](const KTypeSp& kt) {
    for (long x : kt.b)
      if (x != 0) return false;
    return true;
  };
  for (int p = 2; p <= max_p_a; ++p)
    for (const auto& e : enumerate_A_p1(p, bound)) {
      if (lkt_shape_all(e.param, a_shape))
        res.pass();
      else
        res.fail_case(param_str(e.param), e.case_tag + " entry has a lowest type off shape");
    }
  for (int p = 2; p <= max_p_b; ++p)
    for (const auto& e : enumerate_B_p2(p, bound)) {
      if (lkt_shape_all(e.param, b_shape))
        res.pass();
      else
        res.fail_case(param_str(e.param), e.case_tag + " entry has a lowest type off shape");
    }
  for (const auto& e : enumerate_C_22(bound)) {
    if (lkt_shape_all(e.param, c_shape))
      res.pass();
    else
      res.fail_case(param_str(e.param), e.case_tag + " entry has a lowest type off shape");
  }
  return res;
}

CheckResult check_catalog_completeness(int max_p_a, int max_p_b, long bound) {
  CheckResult res;
  res.name = "catalog_completeness";
  res.grid = "A: p <= " + std::to_string(max_p_a) + ", B: p <= " + std::to_string(max_p_b) +
             ", C; entries <= " + std::to_string(bound);

  auto run_family = [&](const GroupSig& sig, const std::vector<CatalogEntry>& list,
                        const std::function<bool(const KTypeSp&)>& shape, const std::string& tag) {
    std::vector<CatalogEntry> brute;
    for (auto& param : all_params(sig, bound)) {
      if (!lkt_shape_all(param, shape)) continue;
      CatalogEntry e;
      e.param = std::move(param);
      brute.push_back(std::move(e));
    }
    std::string detail;
    if (entry_sets_equal(list, brute, detail))
      res.pass();
    else
      res.fail_case(tag, detail);
  };

  auto a_shape = [](const KTypeSp& kt) {
    for (size_t i = 1; i < kt.a.size(); ++i)
      if (kt.a[i] != 0) return false;
    return true;
  };
  auto b_shape = [](const KTypeSp& kt) {
    for (long x : kt.a)
      if (x != 0) return false;
    return true;
  };
  auto c_shape = [](const KTypeSp& kt) {
    for (long x : kt.b)
      if (x != 0) return false;
    return true;
  };

  for (int p = 2; p <= max_p_a; ++p)
    run_family(GroupSig::sp(p, 1), enumerate_A_p1(p, bound), a_shape,
               "A_{" + std::to_string(p) + ",1}");
  for (int p = 2; p <= max_p_b; ++p)
    run_family(GroupSig::sp(p, 2), enumerate_B_p2(p, bound), b_shape,
               "B_{" + std::to_string(p) + ",2}");
  run_family(GroupSig::sp(2, 2), enumerate_C_22(bound), c_shape, "C_{2,2}");
  return res;
}

CheckResult check_table_agreement(int max_p, long bound) {
  CheckResult res;
  res.name = "table_agreement";
  res.grid = "Sp(p,2) with p <= " + std::to_string(max_p) + ", entries <= " + std::to_string(bound);

  auto run_param = [&](const LanglandsParam& param, bool a3) {
    std::vector<TableRowMatch> rows;
    try {
      rows = a3 ? first_coord_rows_a3(param) : first_coord_rows_a1(param);
    } catch (const Error&) {
      return;  // outside the table's coverage
    }
    if (rows.empty()) return;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].values != rows[0].values) {
        res.fail_case(param_str(param), "rows " + std::to_string(rows[0].row) + " and " +
                                            std::to_string(rows[i].row) +
                                            " overlap with different outputs");
        return;
      }
    std::set<Scalar> actual;
    for (const auto& kt : lowest_ktypes_sp(param))
      actual.insert(a3 ? Scalar(kt.b.front()) : Scalar(kt.a.front()));
    if (actual == rows[0].values)
      res.pass();
    else
      res.fail_case(param_str(param), "table disagrees with the block recursion");
  };

  for (int p = 2; p <= max_p; ++p)
    for (const auto& param : all_params(GroupSig::sp(p, 2), bound)) run_param(param, false);
  for (const auto& param : all_params(GroupSig::sp(2, 2), bound)) run_param(param, true);
  return res;
}

long law_violations(int max_pq, long max_param, const Ostar2Lift& o2, const Ostar4Lift& o4) {
  return check_infchar_law(max_pq, max_param, o2, o4).failure_count +
         check_duality_law(max_pq, max_param, o2, o4).failure_count +
         check_harmonics_law(max_pq, max_param, o2, o4).failure_count;
}

CheckResult check_mutation_sensitivity(int max_pq, long max_param) {
  CheckResult res;
  res.name = "mutation_sensitivity";
  res.grid = "p,q <= " + std::to_string(max_pq) + ", |params| <= " + std::to_string(max_param);
  if (law_violations(max_pq, max_param, golden_ostar2_provider(Mutation::None),
                     golden_ostar4_provider(Mutation::None)) == 0)
    res.pass();
  else
    res.fail_case("Mutation::None", "pristine golden formulas violate the laws");
  for (Mutation m : kAllMutations) {
    long violations = law_violations(max_pq, max_param, golden_ostar2_provider(m),
                                     golden_ostar4_provider(m));
    if (violations > 0)
      res.pass();
    else
      res.fail_case("mutation " + std::to_string(static_cast<int>(m)),
                    "seeded defect slips through the laws");
  }
  return res;
}

SuiteReport run_suite(int max_pq, long max_param) {
  require(max_pq >= 3, "ShapeError", "run_suite needs max_pq >= 3");
  require(max_param >= 4, "ShapeError", "run_suite needs max_param >= 4");
  SuiteReport report;
  auto o2 = engine_ostar2();
  auto o4 = engine_ostar4();
  report.checks.push_back(check_golden_ostar2(max_pq, max_param));
  report.checks.push_back(check_golden_ostar4(max_pq, max_param));
  report.checks.push_back(check_infchar_law(max_pq, max_param, o2, o4));
  report.checks.push_back(check_duality_law(max_pq, max_param, o2, o4));
  report.checks.push_back(check_harmonics_law(max_pq, max_param, o2, o4));
  report.checks.push_back(check_occurrence_law(max_pq, max_param));
  report.checks.push_back(check_stable_range(max_pq, max_param));
  report.checks.push_back(check_going_up_paths(1, max_pq, max_pq, max_param));
  report.checks.push_back(check_conservation(std::min<long>(max_param, 6), 12));
  report.checks.push_back(check_exclusion_bplus(3, std::min<long>(max_param, 5)));
  report.checks.push_back(check_catalog_soundness(3, 3, std::min<long>(max_param, 5)));
  report.checks.push_back(check_catalog_completeness(3, 3, std::min<long>(max_param, 5)));
  report.checks.push_back(check_table_agreement(3, std::min<long>(max_param, 5)));
  report.checks.push_back(check_mutation_sensitivity(max_pq, max_param));
  return report;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok() ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.grid << "]  " << c.passes
       << " passed";
    if (!c.ok()) os << ", " << c.failure_count << " failed";
    os << "\n";
    for (const auto& f : c.failures) os << "      " << f.input << ": " << f.detail << "\n";
  }
  os << (ok() ? "suite: all checks passed" : "suite: FAILURES PRESENT") << "\n";
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : c.failures) fails.push_back({{"input", f.input}, {"detail", f.detail}});
    checks_json.push_back({{"name", c.name},
                           {"grid", c.grid},
                           {"passes", c.passes},
                           {"failures", c.failure_count},
                           {"first_failures", fails}});
  }
  return nlohmann::json{{"ok", ok()}, {"checks", checks_json}}.dump(2);
}

}  // namespace theta

#include "theta/catalog.hpp"

#include <algorithm>
#include <functional>

namespace theta {

namespace {

// placeholder for a symbolic continuous parameter; any nonzero value passes
// the parity condition and the lowest K-types do not depend on it
Scalar nu_placeholder(long mu) { return Scalar(mu); }

CatalogEntry entry_r0(const GroupSig& sig, HCParam lambda, PosSystem psi, std::string tag,
                      std::optional<char> side = std::nullopt) {
  CatalogEntry e;
  e.param.group = sig;
  e.param.lambda = std::move(lambda);
  e.param.psi = std::move(psi);
  e.case_tag = std::move(tag);
  e.b_side = side;
  validate(e.param);
  return e;
}

CatalogEntry entry_r(const GroupSig& sig, int r, HCParam lambda, PosSystem psi,
                     std::vector<long> mu, std::string tag,
                     std::optional<char> side = std::nullopt) {
  CatalogEntry e;
  e.param.group = sig;
  e.param.r = r;
  e.param.lambda = std::move(lambda);
  e.param.psi = std::move(psi);
  e.param.mu = std::move(mu);
  for (long m : e.param.mu) e.param.nu.push_back(nu_placeholder(m));
  e.case_tag = std::move(tag);
  e.b_side = side;
  validate(e.param);
  return e;
}

std::vector<long> prefixed(long head, std::vector<long> tail) {
  tail.insert(tail.begin(), head);
  return tail;
}

// (top, ..., lam+1, lam, lam, lam-1, ..., 1); needs top >= lam >= 1
std::vector<long> doubled(long top, long lam) {
  std::vector<long> v = descending_range(top, lam);
  auto t = descending_range(lam, 1);
  v.insert(v.end(), t.begin(), t.end());
  return v;
}

}  // namespace

bool same_entry(const CatalogEntry& a, const CatalogEntry& b) {
  if (a.param.group != b.param.group || a.param.r != b.param.r) return false;
  if (a.param.lambda != b.param.lambda) return false;
  auto mu_a = a.param.mu, mu_b = b.param.mu;
  std::sort(mu_a.begin(), mu_a.end());
  std::sort(mu_b.begin(), mu_b.end());
  if (mu_a != mu_b) return false;
  return resolve_pos_system(a.param.psi, a.param.levi(), a.param.lambda).tied_signs ==
         resolve_pos_system(b.param.psi, b.param.levi(), b.param.lambda).tied_signs;
}

std::vector<CatalogEntry> enumerate_A_p1(int p, long value_bound) {
  require(p >= 2, "ShapeError", "the Sp(p,1) list is written down for p >= 2");
  const GroupSig sig = GroupSig::sp(p, 1);
  std::vector<CatalogEntry> out;

  for (long l1 = p; l1 <= value_bound; ++l1)
    for (long d1 = l1; d1 <= value_bound; ++d1)
      out.push_back(entry_r0(sig, make_hc(prefixed(l1, descending_range(p - 1, 1)), {d1}),
                             PosSystem::named("Psi2"), "A1"));

  for (long l1 = p; l1 <= value_bound; ++l1)
    for (long d1 = p; d1 <= l1; ++d1)
      out.push_back(entry_r0(sig, make_hc(prefixed(l1, descending_range(p - 1, 1)), {d1}),
                             PosSystem::named("Psi4"), "A2"));

  for (long l1 = p - 1; l1 <= value_bound; ++l1)
    out.push_back(entry_r0(sig, make_hc(prefixed(l1, descending_range(p - 1, 1)), {p - 1}),
                           PosSystem::named("Psi4"), "A3"));

  for (long l1 = p - 1; l1 <= value_bound; ++l1)
    for (long d1 = 1; d1 <= p - 2; ++d1) {
      HCParam lambda = make_hc(prefixed(l1, doubled(p - 2, d1)), {d1});
      PosSystem psi = unique_condition_a_system(sig, lambda);
      out.push_back(entry_r0(sig, std::move(lambda), std::move(psi), "A4"));
    }

  for (long mu = 1; mu <= value_bound; ++mu)
    out.push_back(entry_r(sig, 1, make_hc(descending_range(p - 1, 1), {}),
                          PosSystem::named("Psi1"), {mu}, "A5"));

  for (long l1 = p; l1 <= value_bound; ++l1)
    for (long mu = 1; mu <= std::min<long>(2 * p - 3, value_bound); ++mu)
      out.push_back(entry_r(sig, 1, make_hc(prefixed(l1, descending_range(p - 2, 1)), {}),
                            PosSystem::named("Psi1"), {mu}, "A6"));

  return out;
}

std::vector<CatalogEntry> enumerate_B_p2(int p, long value_bound) {
  require(p >= 2, "ShapeError", "the Sp(p,2) list is written down for p >= 2");
  const GroupSig sig = GroupSig::sp(p, 2);
  std::vector<CatalogEntry> out;

  for (long d2 = p; d2 <= value_bound; ++d2)
    for (long d1 = d2 + 1; d1 <= value_bound; ++d1)
      out.push_back(entry_r0(sig, make_hc(descending_range(p, 1), {d1, d2}),
                             PosSystem::named("Psi5"), "B1", '+'));

  // (p-1,...,d2+1,d2,d2,...,1; d1,d2) with f1 above e1 and e1 above f2
  for (long d2 = 1; d2 <= p - 1; ++d2)
    for (long d1 = p - 1; d1 <= value_bound; ++d1) {
      HCParam lambda = make_hc(doubled(p - 1, d2), {d1, d2});
      PosSystem chosen;
      bool found = false;
      for (const auto& psi : condition_a_systems(sig, lambda)) {
        CoordOrder order(sig, lambda, psi);
        if (!order.e_before_f(1, 1) && order.e_before_f(1, 2)) {
          require(!found, "ConditionA", "B2 admits two systems");
          chosen = psi;
          found = true;
        }
      }
      require(found, "ConditionA", "B2 admits no system with the stated roots");
      out.push_back(entry_r0(sig, std::move(lambda), std::move(chosen), "B2", '-'));
    }

  // every valid parameter with lambda_1 = p-2 and delta_1 <= p-2
  if (p >= 3) {
    for (const auto& lambda : enumerate_hc_params(sig, std::min<long>(value_bound, p - 2))) {
      if (lambda.left.front().to_long() != p - 2) continue;
      if (lambda.right.front().to_long() > p - 2) continue;
      PosSystem psi = unique_condition_a_system(sig, lambda);
      out.push_back(entry_r0(sig, lambda, std::move(psi), "B3", '-'));
    }
  }

  for (long d1 = p; d1 <= value_bound; ++d1)
    for (long mu = 1; mu <= std::min<long>(2 * p - 1, value_bound); ++mu)
      out.push_back(entry_r(sig, 1, make_hc(descending_range(p - 1, 1), {d1}),
                            PosSystem::named("Psi2"), {mu}, "B4", '+'));

  for (long mu = 1; mu <= std::min<long>(2 * p - 2, value_bound); ++mu)
    out.push_back(entry_r(sig, 1, make_hc(descending_range(p - 1, 1), {p - 1}),
                          PosSystem::named("Psi2"), {mu}, "B5", '+'));

  for (long d = 1; d <= p - 2; ++d)
    for (long mu = 1; mu <= std::min<long>(2 * p - 3, value_bound); ++mu) {
      HCParam lambda = make_hc(doubled(p - 2, d), {d});
      PosSystem psi = unique_condition_a_system(GroupSig::sp(p - 1, 1), lambda);
      out.push_back(entry_r(sig, 1, std::move(lambda), std::move(psi), {mu}, "B6", '-'));
    }

  for (long mu1 = 1; mu1 <= std::min<long>(2 * p - 3, value_bound); ++mu1)
    for (long mu2 = 1; mu2 <= mu1; ++mu2)
      out.push_back(entry_r(sig, 2, make_hc(descending_range(p - 2, 1), {}),
                            PosSystem::named("Psi1"), {mu1, mu2}, "B7", '+'));

  return out;
}

std::vector<CatalogEntry> enumerate_C_22(long value_bound) {
  const GroupSig sig = GroupSig::sp(2, 2);
  std::vector<CatalogEntry> out;

  for (long l2 = 2; l2 <= value_bound; ++l2)
    for (long l1 = l2 + 1; l1 <= value_bound; ++l1)
      out.push_back(
          entry_r0(sig, make_hc({l1, l2}, {2, 1}), PosSystem::named("Psi6"), "C1"));

  // at l1 = 1 all four coordinates tie and Psi7 resolves to the e-first system
  for (long l1 = 1; l1 <= value_bound; ++l1)
    out.push_back(entry_r0(sig, make_hc({l1, 1}, {1, 1}), PosSystem::named("Psi7"), "C2"));

  for (long l1 = 2; l1 <= value_bound; ++l1)
    out.push_back(
        entry_r(sig, 1, make_hc({l1}, {1}), PosSystem::named("Psi3"), {3}, "C3"));

  for (long l1 = 1; l1 <= value_bound; ++l1)
    for (long mu = 1; mu <= 2; ++mu)
      out.push_back(
          entry_r(sig, 1, make_hc({l1}, {1}), PosSystem::named("Psi3"), {mu}, "C4"));

  out.push_back(entry_r(sig, 2, make_hc({}, {}), PosSystem(), {1, 1}, "C5"));
  return out;
}

namespace {

struct Row {
  std::function<bool()> matches;
  std::function<std::set<Scalar>()> values;
};

std::vector<TableRowMatch> run_rows(const std::vector<Row>& rows) {
  std::vector<TableRowMatch> out;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].matches()) out.push_back({static_cast<int>(i + 1), rows[i].values()});
  return out;
}

std::set<Scalar> sset(std::initializer_list<Scalar> xs) { return std::set<Scalar>(xs); }

// shared context for the Sp(p,2) first-coordinate tables
std::vector<TableRowMatch> rows_a1(const LanglandsParam& param) {
  require(param.group.kind == GroupKind::Sp && param.group.q == 2 && param.group.p >= 2,
          "UnsupportedShape", "the a1 tables cover Sp(p,2) with p >= 2");
  validate(param);
  const long p = param.group.p;
  const GroupSig levi = param.levi();
  const PosSystem resolved = resolve_pos_system(param.psi, levi, param.lambda);

  if (param.r == 0) {
    CoordOrder order(levi, param.lambda, resolved);
    Scalar L1 = param.lambda.left[0], L2 = param.lambda.left[1];
    Scalar D1 = param.lambda.right[0], D2 = param.lambda.right[1];
    auto ef = [&](int i, int j) { return order.e_before_f(i, j); };
    Scalar base = Scalar(-p);
    return run_rows({
        {[&] { return L1 < D2; }, [&] { return sset({L1 + base}); }},
        {[&] { return D2 < L1 && L1 < D1; }, [&] { return sset({L1 + base + Scalar(1)}); }},
        {[&] { return D1 < L1; }, [&] { return sset({L1 + base + Scalar(2)}); }},
        {[&] { return D1 > D2 && D2 == L1 && L1 > L2 && !ef(1, 2); },
         [&] { return sset({L1 + base}); }},
        {[&] { return D1 > D2 && D2 == L1 && L1 > L2 && ef(1, 2); },
         [&] { return sset({L1 + base + Scalar(1)}); }},
        {[&] { return D1 == L1 && L2 < L1 && D2 < L1 && !ef(1, 1); },
         [&] { return sset({L1 + base + Scalar(1)}); }},
        {[&] { return D1 == L1 && L2 < L1 && D2 < L1 && ef(1, 1); },
         [&] { return sset({L1 + base + Scalar(2)}); }},
        {[&] { return D1 == L1 && L1 == L2 && D2 < L1; },
         [&] { return sset({L1 + base + Scalar(2)}); }},
        {[&] { return D2 == L1 && L1 == L2 && L1 < D1; },
         [&] { return sset({L1 + base + Scalar(1)}); }},
        {[&] { return L1 == D1 && D1 == D2 && L2 < L1; },
         [&] { return sset({L1 + base + Scalar(1)}); }},
        {[&] { return L1 == L2 && L2 == D1 && D1 == D2 && ef(1, 1); },
         [&] { return sset({L1 + base + Scalar(2)}); }},
        {[&] { return L1 == L2 && L2 == D1 && D1 == D2 && !ef(1, 1); },
         [&] { return sset({L1 + base + Scalar(1)}); }},
    });
  }

  if (param.r == 1) {
    CoordOrder order(levi, param.lambda, resolved);
    Scalar L1 = param.lambda.left[0];
    Scalar D1 = param.lambda.right[0];
    Scalar H = Scalar::half(param.mu[0]);
    long mu = param.mu[0];
    bool odd = mu % 2 != 0;
    auto ef = [&](int i, int j) { return order.e_before_f(i, j); };
    return run_rows({
        {[&] { return L1 > D1 && L1 > H; }, [&] { return sset({L1 + Scalar(2 - p)}); }},
        {[&] { return H < L1 && L1 < D1; }, [&] { return sset({L1 + Scalar(1 - p)}); }},
        {[&] { return D1 < H && L1 < H && odd; },
         [&] { return sset({Scalar::half(mu + 3) + Scalar(-p)}); }},
        {[&] { return D1 > H && H > L1 && odd; },
         [&] { return sset({Scalar::half(mu + 1) + Scalar(-p)}); }},
        {[&] { return D1 < H && L1 < H && !odd; },
         [&] { return sset({H + Scalar(1 - p), H + Scalar(2 - p)}); }},
        {[&] { return D1 > H && H > L1 && !odd; },
         [&] { return sset({H + Scalar(-p), H + Scalar(1 - p)}); }},
        {[&] { return L1 == D1 && !(L1 < H) && ef(1, 1); },
         [&] { return sset({L1 + Scalar(2 - p)}); }},
        {[&] { return L1 == D1 && !(L1 < H) && !ef(1, 1); },
         [&] { return sset({L1 + Scalar(1 - p)}); }},
        {[&] { return L1 == H && L1 > D1; }, [&] { return sset({L1 + Scalar(2 - p)}); }},
        {[&] { return L1 == H && L1 < D1; }, [&] { return sset({L1 + Scalar(1 - p)}); }},
        {[&] { return D1 == H && D1 > L1; }, [&] { return sset({H + Scalar(1 - p)}); }},
    });
  }

  require(param.r == 2, "UnsupportedShape", "r > 2 cannot occur on Sp(p,2)");
  long mu1 = std::max(param.mu[0], param.mu[1]);
  bool odd = mu1 % 2 != 0;
  Scalar H = Scalar::half(mu1);
  bool has_l = !param.lambda.left.empty();
  Scalar L1 = has_l ? param.lambda.left[0] : Scalar(0);
  return run_rows({
      {[&] { return has_l && L1 > H; }, [&] { return sset({L1 + Scalar(2 - p)}); }},
      {[&] { return (!has_l || L1 < H) && odd; },
       [&] { return sset({Scalar::half(mu1 + 3) + Scalar(-p)}); }},
      {[&] { return (!has_l || L1 < H) && !odd; },
       [&] { return sset({H + Scalar(1 - p), H + Scalar(2 - p)}); }},
      {[&] { return has_l && L1 == H; }, [&] { return sset({L1 + Scalar(2 - p)}); }},
  });
}

// the Sp(2,2) first-b1-coordinate tables
std::vector<TableRowMatch> rows_a3(const LanglandsParam& param) {
  require(param.group.kind == GroupKind::Sp && param.group.p == 2 && param.group.q == 2,
          "UnsupportedShape", "the b1 tables cover Sp(2,2)");
  validate(param);
  const GroupSig levi = param.levi();
  const PosSystem resolved = resolve_pos_system(param.psi, levi, param.lambda);

  if (param.r == 0) {
    CoordOrder order(levi, param.lambda, resolved);
    Scalar L1 = param.lambda.left[0], L2 = param.lambda.left[1];
    Scalar D1 = param.lambda.right[0], D2 = param.lambda.right[1];
    auto ef = [&](int i, int j) { return order.e_before_f(i, j); };
    return run_rows({
        {[&] { return D1 < L2; }, [&] { return sset({D1 - Scalar(2)}); }},
        {[&] { return L2 < D1 && D1 < L1; }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return D1 > L1; }, [&] { return sset({D1}); }},
        {[&] { return L1 > L2 && L2 == D1 && D1 > D2 && ef(2, 1); },
         [&] { return sset({D1 - Scalar(2)}); }},
        {[&] { return L1 > L2 && L2 == D1 && D1 > D2 && !ef(2, 1); },
         [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return D1 == L1 && L2 < D1 && D2 < D1 && ef(1, 1); },
         [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return D1 == L1 && L2 < D1 && D2 < D1 && !ef(1, 1); },
         [&] { return sset({D1}); }},
        {[&] { return L1 == L2 && L2 == D1 && D1 > D2; }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return L1 > L2 && L2 == D1 && D1 == D2; }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return L1 == D1 && D1 == D2 && L2 < L1; }, [&] { return sset({D1}); }},
        {[&] { return L1 == L2 && L2 == D1 && D1 == D2 && ef(1, 1); },
         [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return L1 == L2 && L2 == D1 && D1 == D2 && !ef(1, 1); }, [&] { return sset({D1}); }},
    });
  }

  if (param.r == 1) {
    CoordOrder order(levi, param.lambda, resolved);
    Scalar L1 = param.lambda.left[0];
    Scalar D1 = param.lambda.right[0];
    long mu = param.mu[0];
    Scalar H = Scalar::half(mu);
    bool odd = mu % 2 != 0;
    auto ef = [&](int i, int j) { return order.e_before_f(i, j); };
    return run_rows({
        {[&] { return L1 < H && D1 < H && odd; }, [&] { return sset({Scalar::half(mu - 1)}); }},
        {[&] { return L1 < H && D1 < H && !odd; },
         [&] { return sset({H, H - Scalar(1)}); }},
        {[&] { return L1 > D1 && D1 > H; }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return D1 > L1 && !(D1 < H); }, [&] { return sset({D1}); }},
        {[&] { return L1 > H && H > D1 && odd; }, [&] { return sset({Scalar::half(mu - 3)}); }},
        {[&] { return L1 > H && H > D1 && !odd; },
         [&] { return sset({H - Scalar(1), H - Scalar(2)}); }},
        {[&] { return H == L1 && L1 > D1; }, [&] { return sset({H - Scalar(1)}); }},
        {[&] { return L1 > D1 && D1 == H; }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return L1 == D1 && !(D1 < H) && ef(1, 1); }, [&] { return sset({D1 - Scalar(1)}); }},
        {[&] { return L1 == D1 && !(D1 < H) && !ef(1, 1); }, [&] { return sset({D1}); }},
    });
  }

  require(param.r == 2, "UnsupportedShape", "r > 2 cannot occur on Sp(2,2)");
  long mu1 = std::max(param.mu[0], param.mu[1]);
  if (mu1 % 2 != 0) return {{1, sset({Scalar::half(mu1 - 1)})}};
  return {{2, sset({Scalar::half(mu1), Scalar::half(mu1) - Scalar(1)})}};
}

std::set<Scalar> first_of(const std::vector<TableRowMatch>& matches, const char* table) {
  require(!matches.empty(), "UnsupportedShape",
          std::string("no row of the ") + table + " table covers this parameter");
  return matches.front().values;
}

}  // namespace

std::set<Scalar> first_coord_set_a1(const LanglandsParam& param) {
  return first_of(rows_a1(param), "a1");
}

std::set<Scalar> first_coord_set_a3(const LanglandsParam& param) {
  return first_of(rows_a3(param), "b1");
}

std::vector<TableRowMatch> first_coord_rows_a1(const LanglandsParam& param) {
  return rows_a1(param);
}

std::vector<TableRowMatch> first_coord_rows_a3(const LanglandsParam& param) {
  return rows_a3(param);
}

namespace {

// assignments of nu making the parameter's character match the target
void solve_nu(const LanglandsParam& templ, size_t slot, std::vector<Scalar> remaining,
              std::vector<Scalar>& nu, std::vector<LanglandsParam>& out) {
  if (slot == templ.mu.size()) {
    if (!remaining.empty()) return;
    LanglandsParam cand = templ;
    cand.nu = nu;
    try {
      out.push_back(canonicalize(cand));
    } catch (const Error&) {
      // parity violation: this assignment does not name a representation
    }
    return;
  }
  Scalar mu(templ.mu[slot]);
  for (size_t i = 0; i < remaining.size(); ++i)
    for (size_t j = 0; j < remaining.size(); ++j) {
      if (i == j) continue;
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          Scalar u = si > 0 ? remaining[i] : -remaining[i];
          Scalar v = sj > 0 ? remaining[j] : -remaining[j];
          if (u - v != mu) continue;
          std::vector<Scalar> rest;
          for (size_t k = 0; k < remaining.size(); ++k)
            if (k != i && k != j) rest.push_back(remaining[k]);
          nu.push_back(u + v);
          solve_nu(templ, slot + 1, rest, nu, out);
          nu.pop_back();
        }
    }
}

// multiset difference of sign-normalized values; nullopt when lhs is not
// contained in rhs
std::optional<std::vector<Scalar>> subtract_normalized(const std::vector<Scalar>& target,
                                                       const std::vector<Scalar>& lambda) {
  std::vector<Scalar> pool;
  for (const auto& x : target) pool.push_back(x.sign_normalized());
  for (const auto& l : lambda) {
    auto it = std::find(pool.begin(), pool.end(), l.sign_normalized());
    if (it == pool.end()) return std::nullopt;
    pool.erase(it);
  }
  return pool;
}

}  // namespace

CatalogEntry resolve_unique(const std::vector<CatalogEntry>& entries,
                            const std::set<KTypeSp>& target_lkt, const InfChar& target_infchar) {
  std::vector<CatalogEntry> matches;
  for (const auto& entry : entries) {
    if (lowest_ktypes_sp(entry.param) != target_lkt) continue;

    if (!entry.nu_symbolic()) {
      InfChar c = infinitesimal_character(entry.param);
      if (c.entries.size() != target_infchar.entries.size()) continue;
      if (equal_mod_weyl(c, target_infchar)) matches.push_back(entry);
      continue;
    }

    if (target_infchar.entries.size() != flatten(entry.param.lambda).size() + 2 * entry.param.mu.size())
      continue;
    auto remaining = subtract_normalized(target_infchar.entries, flatten(entry.param.lambda));
    if (!remaining) continue;
    std::vector<Scalar> nu;
    std::vector<LanglandsParam> solved;
    solve_nu(entry.param, 0, *remaining, nu, solved);
    for (const auto& cand : solved) {
      InfChar c = infinitesimal_character(cand);
      if (!equal_mod_weyl(c, target_infchar)) continue;
      bool dup = false;
      for (const auto& m : matches)
        if (canonical_equal(m.param, cand)) dup = true;
      if (dup) continue;
      CatalogEntry resolved = entry;
      resolved.param = cand;
      matches.push_back(std::move(resolved));
    }
  }

  require(!matches.empty(), "NoMatch", "no catalog entry matches the lowest-type/character data");
  require(matches.size() == 1, "AmbiguousMatch",
          std::to_string(matches.size()) + " catalog entries match");
  return matches.front();
}

std::vector<HCParam> enumerate_hc_params(const GroupSig& levi, long max_entry) {
  std::vector<HCParam> out;

  if (levi.kind == GroupKind::Sp) {
    std::vector<std::pair<long, std::pair<int, int>>> picks;  // (value, (m,n)) in use
    std::function<void(long, int, int)> rec = [&](long value, int left_left, int right_left) {
      if (left_left == 0 && right_left == 0) {
        HCParam h;
        for (const auto& [v, mn] : picks) {
          for (int c = 0; c < mn.first; ++c) h.left.push_back(Scalar(v));
          for (int c = 0; c < mn.second; ++c) h.right.push_back(Scalar(v));
        }
        out.push_back(std::move(h));
        return;
      }
      if (value < 1) return;
      for (int m = 0; m <= left_left; ++m)
        for (int n = 0; n <= right_left; ++n) {
          if (std::abs(m - n) > 1) continue;
          if (m + n > 0) picks.push_back({value, {m, n}});
          rec(value - 1, left_left - m, right_left - n);
          if (m + n > 0) picks.pop_back();
        }
    };
    rec(max_entry, levi.p, levi.q);
    return out;
  }

  // O*: positive blocks, an optional single zero, and mirrored negatives
  std::vector<std::pair<long, std::pair<int, int>>> picks;
  auto emit = [&](bool zero) {
    HCParam h;
    for (const auto& [v, mn] : picks)
      for (int c = 0; c < mn.first; ++c) h.left.push_back(Scalar(v));
    if (zero) h.left.push_back(Scalar(0));
    for (auto it = picks.rbegin(); it != picks.rend(); ++it)
      for (int c = 0; c < it->second.second; ++c) h.left.push_back(Scalar(-it->first));
    out.push_back(std::move(h));
  };
  std::function<void(long, int)> rec = [&](long value, int slots) {
    if (value < 1) {
      if (slots == 0) emit(false);
      if (slots == 1) emit(true);
      return;
    }
    for (int m = 0; m <= slots; ++m)
      for (int n = 0; n + m <= slots; ++n) {
        if (std::abs(m - n) > 1) continue;
        if (m + n > 0) picks.push_back({value, {m, n}});
        rec(value - 1, slots - m - n);
        if (m + n > 0) picks.pop_back();
      }
  };
  rec(max_entry, levi.n);
  return out;
}

}  // namespace theta

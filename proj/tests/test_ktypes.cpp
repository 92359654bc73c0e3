#include <doctest.h>

#include "theta/catalog.hpp"
#include "theta/lifts.hpp"

using namespace theta;

namespace {

LanglandsParam limit_param(const GroupSig& sig, HCParam lambda, PosSystem psi) {
  LanglandsParam p;
  p.group = sig;
  p.lambda = std::move(lambda);
  p.psi = std::move(psi);
  validate(p);
  return p;
}

// lambda + rho_n - rho_c, the closed form for the unique lowest type of a
// limit of discrete series; independent route used as the oracle for r = 0
std::vector<Scalar> limit_lkt(const GroupSig& sig, const HCParam& lambda, const PosSystem& psi) {
  PosSystem resolved = resolve_pos_system(psi, sig, lambda);
  std::vector<Scalar> rn = rho_n(sig, lambda, resolved);
  std::vector<Scalar> rc = rho_c(sig);
  std::vector<Scalar> flat = flatten(lambda);
  std::vector<Scalar> out;
  for (size_t i = 0; i < flat.size(); ++i) out.push_back(flat[i] + rn[i] - rc[i]);
  return out;
}

}  // namespace

TEST_SUITE("ktypes") {
  TEST_CASE("norm formulas") {
    CHECK(norm(KTypeSp{{0, 0}, {1}}, GroupSig::sp(2, 1)) == 29);
    CHECK(norm(KTypeU{{1, 0}}, GroupSig::ostar(2)) == 5);
    for (long k = 1; k <= 5; ++k)
      CHECK(norm(KTypeSp{{k - 1}, {}}, GroupSig::sp(1, 0)) == (k + 1) * (k + 1));
    CHECK_THROWS_AS(norm(KTypeSp{{0}, {}}, GroupSig::sp(2, 0)), Error);
  }

  TEST_CASE("lowest types of the worked parameters") {
    LanglandsParam chi_lift;
    chi_lift.group = GroupSig::sp(2, 1);
    chi_lift.r = 1;
    chi_lift.lambda = make_hc({1}, {});
    chi_lift.psi = PosSystem::named("Psi1");
    chi_lift.mu = {2};
    chi_lift.nu = {Scalar(2)};
    CHECK(lowest_ktypes_sp(chi_lift) == std::set<KTypeSp>{KTypeSp{{0, 0}, {1}}});

    auto dbar_lift =
        limit_param(GroupSig::sp(3, 1), make_hc({3, 2, 1}, {3}), PosSystem::named("Psi2"));
    CHECK(lowest_ktypes_sp(dbar_lift) == std::set<KTypeSp>{KTypeSp{{0, 0, 0}, {5}}});

    for (long k = 1; k <= 4; ++k) {
      auto compact = limit_param(GroupSig::sp(1, 0), make_hc({k}, {}), PosSystem::named("Psi1"));
      CHECK(lowest_ktypes_sp(compact) == std::set<KTypeSp>{KTypeSp{{k - 1}, {}}});
    }
  }

  TEST_CASE("r = 0 output equals lambda + rho_n - rho_c") {
    for (const GroupSig& sig : {GroupSig::sp(2, 1), GroupSig::sp(2, 2), GroupSig::sp(3, 1)})
      for (const auto& lambda : enumerate_hc_params(sig, 4))
        for (const auto& psi : condition_a_systems(sig, lambda)) {
          auto param = limit_param(sig, lambda, psi);
          auto kts = lowest_ktypes_sp(param);
          REQUIRE(kts.size() == 1);
          std::vector<Scalar> expected = limit_lkt(sig, lambda, psi);
          std::vector<Scalar> got;
          for (long v : kts.begin()->a) got.push_back(Scalar(v));
          for (long v : kts.begin()->b) got.push_back(Scalar(v));
          CHECK(got == expected);
        }
  }

  TEST_CASE("O* lowest types match the window-scan oracle") {
    for (long l1 = -3; l1 <= 4; ++l1)
      for (long l2 = -4; l2 < l1; ++l2) {
        if (l1 + l2 >= 0) {
          auto rep = make_ostar4(OStar4Family::D, Scalar(l1), Scalar(l2));
          auto kts = lowest_ktypes_ostar(as_langlands(rep));
          auto scan = lowest_ktypes(rep);
          CHECK(kts == std::set<KTypeU>{KTypeU{{l1, l2 + 1}}});
          CHECK(kts == std::set<KTypeU>(scan.begin(), scan.end()));
        }
        if (l1 + l2 <= 0) {
          auto rep = make_ostar4(OStar4Family::Dbar, Scalar(l1), Scalar(l2));
          auto kts = lowest_ktypes_ostar(as_langlands(rep));
          auto scan = lowest_ktypes(rep);
          CHECK(kts == std::set<KTypeU>{KTypeU{{l1 - 1, l2}}});
          CHECK(kts == std::set<KTypeU>(scan.begin(), scan.end()));
        }
      }
  }

  TEST_CASE("O* principal parameters agree with the window-scan oracle") {
    for (long mu = 1; mu <= 5; ++mu) {
      // nu integral of the right parity makes this the finite-dimensional datum
      long nu = mu + 1;
      auto rep = make_ostar4(OStar4Family::F, Scalar::half(nu + mu), Scalar::half(nu - mu));
      LanglandsParam param;
      param.group = GroupSig::ostar(2);
      param.r = 1;
      param.mu = {mu};
      param.nu = {Scalar(nu)};
      validate(param);
      auto kts = lowest_ktypes_ostar(param);
      auto oracle = lowest_ktypes(rep);
      CHECK(kts == std::set<KTypeU>(oracle.begin(), oracle.end()));
    }
  }

  TEST_CASE("O* r = 0 regular parameters equal lambda + rho_n - rho_c") {
    for (const GroupSig& sig : {GroupSig::ostar(2), GroupSig::ostar(3)})
      for (const auto& lambda : enumerate_hc_params(sig, 4)) {
        auto systems = condition_a_systems(sig, lambda);
        if (systems.size() != 1) continue;  // keep to the regular case
        auto param = limit_param(sig, lambda, systems[0]);
        auto kts = lowest_ktypes_ostar(param);
        REQUIRE(kts.size() == 1);
        std::vector<Scalar> expected = limit_lkt(sig, lambda, systems[0]);
        std::vector<Scalar> got;
        for (long v : kts.begin()->w) got.push_back(Scalar(v));
        CHECK(got == expected);
      }
  }

  TEST_CASE("infinitesimal characters") {
    LanglandsParam chi_lift;
    chi_lift.group = GroupSig::sp(2, 1);
    chi_lift.r = 1;
    chi_lift.lambda = make_hc({1}, {});
    chi_lift.psi = PosSystem::named("Psi1");
    chi_lift.mu = {2};
    chi_lift.nu = {Scalar(2)};
    InfChar c = infinitesimal_character(chi_lift);
    CHECK(c.weyl == WeylFamily::TypeC);
    CHECK(equal_mod_weyl(c, InfChar{{Scalar(1), Scalar(2), Scalar(0)}, WeylFamily::TypeC}));

    // a GL(1,H) factor tau(3,1) contributes ((1+3)/2, (1-3)/2) = (2,-1)
    LanglandsParam tau;
    tau.group = GroupSig::sp(1, 1);
    tau.r = 1;
    tau.mu = {3};
    tau.nu = {Scalar(1)};
    CHECK(infinitesimal_character(tau).entries == std::vector<Scalar>{Scalar(2), Scalar(-1)});

    CHECK(infinitesimal_character(trivial_param(GroupSig::sp(0, 0))).entries.empty());
  }

  TEST_CASE("all lowest types share one norm, and one Fock degree on lifts") {
    for (long k = -4; k <= 4; ++k)
      for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 3; ++q) {
          LiftResult lift = theta_ostar2(k, p, q);
          if (lift.zero()) continue;
          auto kts = lowest_ktypes_sp(*lift.value);
          REQUIRE(!kts.empty());
          Integer the_norm = norm(*kts.begin(), lift.value->group);
          std::optional<Integer> the_degree;
          for (const auto& kt : kts) {
            CHECK(norm(kt, lift.value->group) == the_norm);
            FockProfile prof = profile_sp(kt, 1);
            REQUIRE(prof.occurs_in_fock);
            if (!the_degree) the_degree = prof.degree;
            CHECK(prof.degree == the_degree);
          }
        }
  }

  TEST_CASE("condition (B) forces a unique lowest type") {
    for (const auto& lambda : enumerate_hc_params(GroupSig::sp(2, 2), 4)) {
      auto systems = condition_a_systems(GroupSig::sp(2, 2), lambda);
      if (systems.size() != 1) continue;
      CHECK(lowest_ktypes_sp(limit_param(GroupSig::sp(2, 2), lambda, systems[0])).size() == 1);
    }
  }
}

#include <doctest.h>

#include "theta/catalog.hpp"
#include "theta/lifts.hpp"

using namespace theta;

namespace {

bool list_contains(const std::vector<CatalogEntry>& list, const LanglandsParam& param,
                   const std::string& tag = "") {
  CatalogEntry probe;
  probe.param = param;
  for (const auto& e : list)
    if (same_entry(e, probe) && (tag.empty() || e.case_tag == tag)) return true;
  return false;
}

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

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("Sp(p,1) list contents at p = 2") {
    auto list = enumerate_A_p1(2, 5);
    for (long l1 = 2; l1 <= 5; ++l1)
      for (long d1 = l1; d1 <= 5; ++d1)
        CHECK(list_contains(list, mk(2, 1, 0, {l1, 1}, {d1}, PosSystem::named("Psi2")), "A1"));
    for (long mu = 1; mu <= 5; ++mu)
      CHECK(list_contains(
          list, mk(2, 1, 1, {1}, {}, PosSystem::named("Psi1"), {mu}, {Scalar(mu + 1)})));
    // mu = 2p-2 = 2 exceeds the 2p-3 cap of the top-heavy principal entries
    CHECK(!list_contains(
        list, mk(2, 1, 1, {3}, {}, PosSystem::named("Psi1"), {2}, {Scalar(1)})));
    CHECK(list_contains(
        list, mk(2, 1, 1, {3}, {}, PosSystem::named("Psi1"), {1}, {Scalar(1)})));
  }

  TEST_CASE("Sp(p,2) list contents at p = 3") {
    auto list = enumerate_B_p2(3, 6);
    CHECK(list_contains(list, mk(3, 2, 0, {3, 2, 1}, {5, 4}, PosSystem::named("Psi5")), "B1"));
    CHECK(list_contains(list, mk(3, 2, 2, {1}, {}, PosSystem::named("Psi1"), {3, 2},
                                 {Scalar(3), Scalar(2)}),
                        "B7"));
    CHECK(!list_contains(list, mk(3, 2, 2, {1}, {}, PosSystem::named("Psi1"), {4, 1},
                                  {Scalar(3), Scalar(2)})));  // mu1 > 2p-3

    // the doubled-delta entries carry the f1 > e1 > f2 system
    HCParam lambda = make_hc({2, 2, 1}, {4, 2});
    bool found = false;
    for (const auto& e : list) {
      if (e.param.r != 0 || e.param.lambda != lambda) continue;
      found = true;
      PosSystem resolved = resolve_pos_system(e.param.psi, e.param.levi(), e.param.lambda);
      CoordOrder order(e.param.levi(), e.param.lambda, resolved);
      CHECK(!order.e_before_f(1, 1));
      CHECK(order.e_before_f(1, 2));
      CHECK(e.b_side == '-');
    }
    CHECK(found);

    // B sides split as stated
    for (const auto& e : list) {
      REQUIRE(e.b_side.has_value());
      bool plus = e.case_tag == "B1" || e.case_tag == "B4" || e.case_tag == "B5" ||
                  e.case_tag == "B7";
      CHECK(*e.b_side == (plus ? '+' : '-'));
    }
  }

  TEST_CASE("Sp(2,2) list contents") {
    auto list = enumerate_C_22(6);
    CHECK(list_contains(list, mk(2, 2, 0, {4, 2}, {2, 1}, PosSystem::named("Psi6")), "C1"));
    for (long l1 = 2; l1 <= 6; ++l1)
      CHECK(list_contains(
          list, mk(2, 2, 1, {l1}, {1}, PosSystem::named("Psi3"), {3}, {Scalar(2)}), "C3"));
    CHECK(list_contains(list, mk(2, 2, 2, {}, {}, PosSystem(), {1, 1}, {Scalar(1), Scalar(2)}),
                        "C5"));
    CHECK(!list_contains(list, mk(2, 2, 1, {1}, {1}, PosSystem::named("Psi3"), {3}, {Scalar(2)}),
                         "C3"));  // needs l1 > 1
  }

  TEST_CASE("first-coordinate tables") {
    // a1 < d2 row
    CHECK(first_coord_set_a1(mk(2, 2, 0, {2, 1}, {4, 3}, PosSystem::named("Psi5"))) ==
          std::set<Scalar>{Scalar(0)});
    // r = 2, odd top mu
    CHECK(first_coord_set_a1(mk(2, 2, 2, {}, {}, PosSystem(), {3, 1}, {Scalar(1), Scalar(2)})) ==
          std::set<Scalar>{Scalar::half(3) - Scalar(2)});
    CHECK(first_coord_set_a3(mk(2, 2, 2, {}, {}, PosSystem(), {3, 1}, {Scalar(1), Scalar(2)})) ==
          std::set<Scalar>{Scalar(1)});
    // the tied row with -e1+f2 in the system (through Psi5)
    CHECK(first_coord_set_a1(mk(2, 2, 0, {2, 1}, {4, 2}, PosSystem::named("Psi5"))) ==
          std::set<Scalar>{Scalar(0)});
    CHECK(error_name([] {
            first_coord_set_a1(mk(2, 1, 0, {2, 1}, {1}, PosSystem::named("Psi3")));
          }) == "UnsupportedShape");
  }

  TEST_CASE("tables agree with the block recursion on a sample") {
    for (const auto& param : {mk(3, 2, 0, {3, 2, 1}, {5, 4}, PosSystem::named("Psi5")),
                              mk(2, 2, 0, {4, 2}, {2, 1}, PosSystem::named("Psi6")),
                              mk(3, 2, 1, {2, 1}, {4}, PosSystem::named("Psi2"), {3}, {Scalar(1)}),
                              mk(2, 2, 1, {3}, {1}, PosSystem::named("Psi3"), {2}, {Scalar(1)})}) {
      std::set<Scalar> firsts;
      for (const auto& kt : lowest_ktypes_sp(param)) firsts.insert(Scalar(kt.a.front()));
      CHECK(first_coord_set_a1(param) == firsts);
    }
  }

  TEST_CASE("resolve_unique pins the worked lifts") {
    auto a21 = enumerate_A_p1(2, 8);
    CatalogEntry hit = resolve_unique(a21, {KTypeSp{{0, 0}, {1}}},
                                      InfChar{{Scalar(0), Scalar(2), Scalar(1)}, WeylFamily::TypeC});
    CHECK(hit.param.r == 1);
    CHECK(hit.param.mu == std::vector<long>{2});
    CHECK(hit.param.nu == std::vector<Scalar>{Scalar(2)});

    // theta_{2,1} of the lowest-weight family member with l2 = 1
    CatalogEntry tall = resolve_unique(a21, {KTypeSp{{3, 1}, {0}}},
                                       InfChar{{Scalar(4), Scalar(1), Scalar(1)}, WeylFamily::TypeC});
    CHECK(tall.param.r == 0);
    CHECK(tall.param.lambda == make_hc({4, 1}, {1}));
    CHECK(canonical_equal(tall.param,
                          *theta_ostar4(make_ostar4(OStar4Family::D, Scalar(4), Scalar(1)), 2, 1)
                               .value));

    CHECK(error_name([&] {
            resolve_unique(a21, {KTypeSp{{0, 0}, {1}}},
                           InfChar{{Scalar(0), Scalar(7), Scalar(5)}, WeylFamily::TypeC});
          }) == "NoMatch");

    auto doubled = a21;
    doubled.insert(doubled.end(), a21.begin(), a21.end());
    CHECK(error_name([&] {
            resolve_unique(doubled, {KTypeSp{{3, 1}, {0}}},
                           InfChar{{Scalar(4), Scalar(1), Scalar(1)}, WeylFamily::TypeC});
          }) == "AmbiguousMatch");
  }

  TEST_CASE("parameter enumeration matches hand counts") {
    // Sp(1,1) with entries <= 2: (1;1),(2;2) tied, (2;1),(1;2) regular
    auto params = enumerate_hc_params(GroupSig::sp(1, 1), 2);
    CHECK(params.size() == 4);
    // O*(4) with entries <= 1: (1,1) invalid; valid: (1,-1),(1,0),(0,-1)
    auto oparams = enumerate_hc_params(GroupSig::ostar(2), 1);
    CHECK(oparams.size() == 3);
  }
}

#include <doctest.h>

#include "theta/verify.hpp"

using namespace theta;

namespace {

std::string error_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

// brute-force minimum of the norm over a wide index window
std::vector<KTypeU> scan_lowest(const OStar4Rep& rep) {
  auto window = ktypes_in_window(rep, -40, 40);
  Integer best = 0;
  std::vector<KTypeU> out;
  for (const auto& kt : window) {
    Integer n = norm(kt, GroupSig::ostar(2));
    if (out.empty() || n < best) {
      out = {kt};
      best = n;
    } else if (n == best) {
      out.push_back(kt);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("ostar_dual") {
  TEST_CASE("family constraints") {
    CHECK_NOTHROW(make_ostar4(OStar4Family::F, Scalar(1), Scalar(0)));
    CHECK(error_name([] { make_ostar4(OStar4Family::D, Scalar(2), Scalar(2)); }) ==
          "FamilyConstraint");
    CHECK_NOTHROW(make_ostar4(OStar4Family::P, Scalar::half(3), Scalar::half(1)));
    CHECK(error_name([] { make_ostar4(OStar4Family::P, Scalar(2), Scalar(1)); }) ==
          "FamilyConstraint");
    CHECK(error_name([] { make_ostar4(OStar4Family::F, Scalar(0), Scalar(-1)); }) ==
          "FamilyConstraint");
    CHECK(error_name([] { make_ostar4(OStar4Family::Dbar, Scalar(3), Scalar(-1)); }) ==
          "FamilyConstraint");
    // the boundary l1 + l2 = 0 belongs to both discrete-series families
    CHECK_NOTHROW(make_ostar4(OStar4Family::D, Scalar(2), Scalar(-2)));
    CHECK_NOTHROW(make_ostar4(OStar4Family::Dbar, Scalar(2), Scalar(-2)));
  }

  TEST_CASE("K-type windows") {
    auto d = make_ostar4(OStar4Family::D, Scalar(3), Scalar(1));
    CHECK(ktypes_in_window(d, 0, 4) ==
          std::vector<KTypeU>{KTypeU{{3, 2}}, KTypeU{{4, 3}}, KTypeU{{5, 4}}});

    auto f = make_ostar4(OStar4Family::F, Scalar(1), Scalar(0));
    CHECK(ktypes_in_window(f, -5, 5) == std::vector<KTypeU>{KTypeU{{0, 0}}});

    // the family range caps the window: indices above l2 do not occur
    auto dbar = make_ostar4(OStar4Family::Dbar, Scalar(0), Scalar(-1));
    CHECK(ktypes_in_window(dbar, -2, 0) ==
          std::vector<KTypeU>{KTypeU{{-2, -2}}, KTypeU{{-1, -1}}});
  }

  TEST_CASE("windows have no repeated types") {
    for (const auto& rep : all_ostar4_reps(4)) {
      auto window = ktypes_in_window(rep, -6, 6);
      std::set<KTypeU> dedup(window.begin(), window.end());
      CHECK(dedup.size() == window.size());
    }
  }

  TEST_CASE("lowest K-types against the scan oracle") {
    CHECK(lowest_ktype(make_ostar4(OStar4Family::D, Scalar(3), Scalar(1))) == KTypeU{{3, 2}});
    CHECK(lowest_ktype(make_ostar4(OStar4Family::Dbar, Scalar(-1), Scalar(-2))) ==
          KTypeU{{-2, -2}});
    CHECK(lowest_ktype(make_ostar4(OStar4Family::F, Scalar(1), Scalar(0))) == KTypeU{{0, 0}});
    for (const auto& rep : all_ostar4_reps(4)) {
      if (!(rep.l1 - rep.l2).is_integer()) continue;
      CHECK(lowest_ktypes(rep) == scan_lowest(rep));
    }
  }

  TEST_CASE("contragredients") {
    auto d = make_ostar4(OStar4Family::D, Scalar(3), Scalar(1));
    auto dbar = contragredient(d);
    CHECK(dbar.family == OStar4Family::Dbar);
    CHECK(dbar.l1 == Scalar(-1));
    CHECK(dbar.l2 == Scalar(-3));

    auto f = make_ostar4(OStar4Family::F, Scalar(2), Scalar(1));
    CHECK(contragredient(f).family == OStar4Family::F);
    CHECK(contragredient(f).l1 == Scalar(2));

    for (const auto& rep : all_ostar4_reps(4)) {
      auto twice = contragredient(contragredient(rep));
      CHECK(twice.family == rep.family);
      CHECK(twice.l1 == rep.l1);
      CHECK(twice.l2 == rep.l2);
    }
    CHECK(contragredient(OStar2Rep{-4}).k == 4);
  }

  TEST_CASE("Langlands parameters of the four families") {
    auto d = as_langlands(make_ostar4(OStar4Family::D, Scalar(3), Scalar(1)));
    CHECK(d.r == 0);
    CHECK(d.lambda.left == std::vector<Scalar>{Scalar(3), Scalar(1)});

    // at the l1 + l2 = 0 boundary the sum root membership is the family tag
    auto d0 = as_langlands(make_ostar4(OStar4Family::D, Scalar(2), Scalar(-2)));
    CHECK(resolve_pos_system(d0.psi, d0.levi(), d0.lambda).tied_signs.at(0) == BlockSign::Plus);
    auto dbar0 = as_langlands(make_ostar4(OStar4Family::Dbar, Scalar(2), Scalar(-2)));
    CHECK(resolve_pos_system(dbar0.psi, dbar0.levi(), dbar0.lambda).tied_signs.at(0) ==
          BlockSign::Minus);

    auto p = as_langlands(make_ostar4(OStar4Family::P, Scalar::half(3), Scalar::half(1)));
    CHECK(p.r == 1);
    CHECK(p.mu == std::vector<long>{1});
    CHECK(p.nu == std::vector<Scalar>{Scalar(2)});

    auto f = as_langlands(make_ostar4(OStar4Family::F, Scalar(1), Scalar(0)));
    CHECK(f.r == 1);
    CHECK(f.mu == std::vector<long>{1});
    CHECK(f.nu == std::vector<Scalar>{Scalar(1)});
  }

  TEST_CASE("every family has infinitesimal character (l1, l2)") {
    for (const auto& rep : all_ostar4_reps(4))
      CHECK(equal_mod_weyl(infinitesimal_character(as_langlands(rep)), rep_infchar(rep)));
  }

  TEST_CASE("D and Dbar lowest types agree with the block recursion") {
    for (const auto& rep : all_ostar4_reps(5)) {
      if (rep.family != OStar4Family::D && rep.family != OStar4Family::Dbar) continue;
      auto via_param = lowest_ktypes_ostar(as_langlands(rep));
      REQUIRE(via_param.size() == 1);
      CHECK(*via_param.begin() == lowest_ktype(rep));
    }
  }
}

#include <doctest.h>

#include <random>

#include "theta/harmonics.hpp"

using namespace theta;

TEST_SUITE("harmonics") {
  TEST_CASE("Sp-side profiles") {
    FockProfile a = profile_sp(KTypeSp{{2, 0}, {1}}, 2);
    CHECK(a.occurs_in_fock);
    CHECK(a.occurs_in_harmonics);
    CHECK(a.degree == Integer(3));
    CHECK(a.r == 1);
    CHECK(a.s == 1);

    FockProfile b = profile_sp(KTypeSp{{1, 1}, {1}}, 2);
    CHECK(b.occurs_in_fock);
    CHECK(!b.occurs_in_harmonics);  // r + s = 3 > 2
    CHECK(b.degree == Integer(3));

    FockProfile c = profile_sp(KTypeSp{{0, 0, 0}, {0}}, 1);
    CHECK(c.occurs_in_fock);
    CHECK(c.occurs_in_harmonics);
    CHECK(c.degree == Integer(0));
  }

  TEST_CASE("U-side profiles") {
    FockProfile a = profile_u(KTypeU{{3, 1}}, 3, 1);
    CHECK(a.r == 1);
    CHECK(a.s == 1);
    CHECK(a.occurs_in_harmonics);
    CHECK(a.degree == Integer(2));

    // (l1-1, l2) at (p,1) has degree l1 - l2 - 1 when l2 <= p-1 <= l1-1
    for (long l1 = 4; l1 <= 6; ++l1)
      for (long l2 = -2; l2 <= 2; ++l2)
        for (int p = l2 + 1; p <= l1; ++p) {
          FockProfile prof = profile_u(KTypeU{{l1 - 1, l2}}, p, 1);
          CHECK(prof.degree == Integer(l1 - l2 - 1));
        }

    // a U(1)-type (k) misses the harmonics for (p,0) exactly when k < p
    for (long k = 0; k <= 5; ++k)
      for (int p = 0; p <= 5; ++p)
        CHECK(profile_u(KTypeU{{k}}, p, 0).occurs_in_harmonics == (k >= p));
  }

  // occurrence in the harmonics is monotone where the residual counts do not
  // move: along the diagonal on the U side (the shift p-q is unchanged) and
  // in n on the Sp side
  TEST_CASE("harmonics occurrence is monotone") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 300; ++trial) {
      int n = 1 + gen() % 3;
      KTypeU kt;
      long top = 6 - static_cast<long>(gen() % 12);
      for (int i = 0; i < n; ++i) {
        kt.w.push_back(top);
        top -= gen() % 4;
      }
      int p = gen() % 6, q = gen() % 6;
      if (profile_u(kt, p, q).occurs_in_harmonics)
        CHECK(profile_u(kt, p + 1, q + 1).occurs_in_harmonics);

      KTypeSp sp;
      long a = gen() % 6;
      for (int i = 0; i < 1 + static_cast<int>(gen() % 3); ++i) {
        sp.a.push_back(a);
        a = std::max<long>(0, a - static_cast<long>(gen() % 3));
      }
      sp.b = {static_cast<long>(gen() % 6)};
      if (profile_sp(sp, n).occurs_in_harmonics) CHECK(profile_sp(sp, n + 1).occurs_in_harmonics);
    }
  }

  TEST_CASE("joint-harmonics transport") {
    CHECK(correspond(KTypeSp{{0, 0, 0}, {5}}, 3, 1, 2) == KTypeU{{2, -3}});
    CHECK(correspond_u(KTypeU{{2, -3}}, 3, 1, 2) == KTypeSp{{0, 0, 0}, {5}});

    // (l1-p, 0, ..., 0; p-1-l2) matches (l1-1, l2) at (p,1)
    for (long l1 = 3; l1 <= 5; ++l1)
      for (long l2 = -3; l2 <= 0; ++l2)
        for (int p = 2; p <= static_cast<int>(l1); ++p) {
          KTypeSp sp;
          sp.a.assign(static_cast<size_t>(p), 0);
          sp.a[0] = l1 - p;
          sp.b = {p - 1 - l2};
          CHECK(correspond(sp, p, 1, 2) == KTypeU{{l1 - 1, l2}});
        }

    CHECK_THROWS_AS(correspond(KTypeSp{{1, 1}, {1}}, 2, 1, 2), Error);
  }

  TEST_CASE("transport round trip and degree preservation") {
    std::mt19937 gen(5);
    int checked = 0;
    while (checked < 400) {
      int p = 1 + gen() % 4, q = gen() % 3, n = 1 + gen() % 3;
      KTypeSp kt;
      long a = gen() % 13;
      for (int i = 0; i < p; ++i) {
        kt.a.push_back(a);
        a = std::min<long>(a, a - static_cast<long>(gen() % 3));
        a = std::max<long>(a, 0);
      }
      long b = gen() % 13;
      for (int i = 0; i < q; ++i) {
        kt.b.push_back(b);
        b = std::max<long>(0, b - static_cast<long>(gen() % 3));
      }
      FockProfile prof = profile_sp(kt, n);
      if (!prof.occurs_in_harmonics) continue;
      KTypeU image = correspond(kt, p, q, n);
      CHECK(correspond_u(image, p, q, n) == kt);
      CHECK(profile_u(image, p, q).degree == prof.degree);
      ++checked;
    }
  }

  TEST_CASE("lowest-degree sets of O*(4) representations") {
    // D at (p,1) with l1 >= p: the full run between the family edge and p-1
    for (long l1 = 4; l1 <= 5; ++l1)
      for (long l2 = 0; l2 <= 2; ++l2)
        for (int p = static_cast<int>(l2) + 2; p <= static_cast<int>(l1); ++p) {
          auto rep = make_ostar4(OStar4Family::D, Scalar(l1), Scalar(l2));
          std::vector<KTypeU> expected;
          for (long k = l2 + 1; k <= p - 1; ++k)
            expected.push_back(KTypeU{{k + l1 - l2 - 1, k}});
          CHECK(lowest_degree_ktypes_ostar4(rep, p, 1) == expected);
        }

    // Dbar at (p,1) with l1 < p: only (l1-1, l2) has minimal degree, and it
    // misses the joint harmonics (which is how the vanishing shows up)
    auto dbar = make_ostar4(OStar4Family::Dbar, Scalar(1), Scalar(-2));
    auto lds = lowest_degree_ktypes_ostar4(dbar, 3, 1);
    REQUIRE(lds.size() == 1);
    CHECK(lds.front() == KTypeU{{0, -2}});
    CHECK(!profile_u(lds.front(), 3, 1).occurs_in_harmonics);

    // at q = 0 no K-type of Dbar occurs in the Fock space at all
    CHECK_THROWS_AS(lowest_degree_ktypes_ostar4(dbar, 3, 0), Error);

    auto f = make_ostar4(OStar4Family::F, Scalar(1), Scalar(0));
    CHECK(lowest_degree_ktypes_ostar4(f, 0, 0) == std::vector<KTypeU>{KTypeU{{0, 0}}});
  }

  TEST_CASE("lowest-degree sets match a direct scan") {
    for (long l1 = -2; l1 <= 3; ++l1)
      for (long l2 = -3; l2 < l1; ++l2)
        for (int p = 0; p <= 4; ++p)
          for (int q = 0; q <= 2; ++q)
            for (auto family : {OStar4Family::D, OStar4Family::Dbar}) {
              if (family == OStar4Family::D && l1 + l2 < 0) continue;
              if (family == OStar4Family::Dbar && l1 + l2 > 0) continue;
              auto rep = make_ostar4(family, Scalar(l1), Scalar(l2));
              std::vector<KTypeU> scan;
              std::optional<Integer> best;
              for (const auto& kt : ktypes_in_window(rep, -30, 30)) {
                FockProfile prof = profile_u(kt, p, q);
                if (!prof.occurs_in_fock) continue;
                if (!best || *prof.degree < *best) {
                  best = prof.degree;
                  scan = {kt};
                } else if (prof.degree == best) {
                  scan.push_back(kt);
                }
              }
              if (!best) {
                CHECK_THROWS_AS(lowest_degree_ktypes_ostar4(rep, p, q), Error);
              } else {
                CHECK(lowest_degree_ktypes_ostar4(rep, p, q) == scan);
              }
            }
  }

  TEST_CASE("O*(2) lowest-degree set") {
    CHECK(lowest_degree_ktypes_ostar2(OStar2Rep{3}, 2, 1) == std::vector<KTypeU>{KTypeU{{3}}});
    CHECK_THROWS_AS(lowest_degree_ktypes_ostar2(OStar2Rep{1}, 3, 0), Error);
  }
}

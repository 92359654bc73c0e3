#include <doctest.h>

#include "theta/verify.hpp"

using namespace theta;

TEST_SUITE("occurrence") {
  TEST_CASE("closed-form spot values") {
    CHECK(occurs(OStar2Rep{0}, 1, 1));
    CHECK(occurs(OStar2Rep{0}, 0, 0));
    CHECK(!occurs(OStar2Rep{0}, 1, 0));
    CHECK(occurs(OStar2Rep{3}, 2, 0));
    CHECK(!occurs(OStar2Rep{3}, 4, 0));
    CHECK(!occurs(OStar2Rep{-2}, 1, 0));

    for (long l2 = 0; l2 <= 3; ++l2)
      CHECK(!occurs(make_ostar4(OStar4Family::D, Scalar(l2 + 1), Scalar(l2)), 1, 1));
    CHECK(occurs(make_ostar4(OStar4Family::D, Scalar(2), Scalar(-1)), 1, 1));
    CHECK(!occurs(make_ostar4(OStar4Family::F, Scalar(2), Scalar(1)), 3, 1));
    CHECK(occurs(make_ostar4(OStar4Family::F, Scalar(2), Scalar(1)), 2, 1));
    CHECK(occurs(make_ostar4(OStar4Family::F, Scalar(1), Scalar(0)), 0, 0));
    CHECK(!occurs(make_ostar4(OStar4Family::F, Scalar(2), Scalar(-1)), 0, 0));
  }

  TEST_CASE("reflection through contragredients") {
    for (long k = -5; k <= 5; ++k)
      for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
          CHECK(occurs(OStar2Rep{k}, p, q) == occurs(OStar2Rep{-k}, q, p));
    for (const auto& rep : all_ostar4_reps(4))
      for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
          CHECK(occurs(rep, p, q) == occurs(contragredient(rep), q, p));
  }

  TEST_CASE("occurrence grows along the diagonal") {
    for (const auto& rep : all_ostar4_reps(4))
      for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
          if (occurs(rep, p, q)) CHECK(occurs(rep, p + 1, q + 1));
    for (long k = -5; k <= 5; ++k)
      for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
          if (occurs(OStar2Rep{k}, p, q)) CHECK(occurs(OStar2Rep{k}, p + 1, q + 1));
  }

  TEST_CASE("stable range") {
    for (const auto& rep : all_ostar4_reps(4))
      for (int p = 2; p <= 5; ++p)
        for (int q = 2; q <= 5; ++q) CHECK(occurs(rep, p, q));
    for (long k = -5; k <= 5; ++k) CHECK(occurs(OStar2Rep{k}, 1, 1));
  }

  TEST_CASE("first occurrences in Witt towers") {
    auto d = make_ostar4(OStar4Family::D, Scalar(4), Scalar(1));
    CHECK(first_occurrence(d, WittTower{2}, 10) == 2);
    CHECK(first_occurrence(d, WittTower{1}, 10) == 3);
    auto p = make_ostar4(OStar4Family::P, Scalar::half(3), Scalar::half(1));
    CHECK(first_occurrence(p, WittTower{0}, 10) == 2);
    CHECK(!first_occurrence(make_ostar4(OStar4Family::F, Scalar(2), Scalar(1)), WittTower{4}, 4)
               .has_value());
  }

  TEST_CASE("conservation reports") {
    auto d = make_ostar4(OStar4Family::D, Scalar(4), Scalar(1));
    ConservationReport r = conservation_report(d, 8);
    CHECK(r.all_pairs_ok);
    CHECK(r.pair_sum_5.first.delta + r.pair_sum_5.second.delta == 3);  // towers 2 and 1
    CHECK(r.n_by_delta.at(2) == 2);
    CHECK(r.n_by_delta.at(1) == 3);
    CHECK(r.sum5_pairs.size() == 1);

    // the trivial representation attains the pair (0, 5) symmetrically
    auto f = make_ostar4(OStar4Family::F, Scalar(1), Scalar(0));
    ConservationReport rf = conservation_report(f, 8);
    CHECK(rf.n_by_delta.at(0) == 0);
    int a = rf.n_by_delta.at(rf.pair_sum_5.first.delta);
    int b = rf.n_by_delta.at(rf.pair_sum_5.second.delta);
    CHECK(a + b == 5);
    CHECK(std::min(a, b) == 0);

    CHECK(conservation_report(make_ostar4(OStar4Family::Dbar, Scalar(-1), Scalar(-3)), 8)
              .all_pairs_ok);
  }

  TEST_CASE("pictures agree with the closed forms") {
    std::string pic = render_picture(OStar2Rep{0}, 5);
    CHECK(pic.find('#') != std::string::npos);
    // bottom row is q = 0: occupied exactly at the origin
    auto last_row = pic.find(" 0 |");
    REQUIRE(last_row != std::string::npos);
    CHECK(pic.substr(last_row, 20).find("# . . . . .") != std::string::npos);
  }
}

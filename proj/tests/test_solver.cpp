#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutchoose/error.hpp"
#include "cutchoose/solver.hpp"
#include "oracle.hpp"

#include <set>

using namespace cutchoose;

namespace {

using Votes = std::vector<std::int64_t>;

std::vector<Votes> as_votes(const std::vector<Districting>& ds) {
  std::vector<Votes> out;
  for (const auto& d : ds) out.emplace_back(d.chooser_votes().begin(), d.chooser_votes().end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_districtings examples") {
  CHECK(as_votes(enumerate_districtings(2, 4, 3)) == std::vector<Votes>{{3, 0}, {2, 1}});
  CHECK(as_votes(enumerate_districtings(2, 2, 4)) == std::vector<Votes>{{2, 2}});
  CHECK(as_votes(enumerate_districtings(3, 4, 6)) ==
        std::vector<Votes>{{4, 2, 0}, {4, 1, 1}, {3, 3, 0}, {3, 2, 1}, {2, 2, 2}});
  CHECK_THROWS_AS(enumerate_districtings(2, 4, 9), Error);
  CHECK_THROWS_AS(enumerate_districtings(0, 4, 0), Error);
  CHECK_THROWS_AS(enumerate_districtings(2, 4, -1), Error);
}

TEST_CASE("enumeration covers every multiset exactly once") {
  for (std::int64_t D = 1; D <= 5; ++D) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t B = 0; B <= D * n; ++B) {
        const auto listed = as_votes(enumerate_districtings(D, n, B));
        CHECK(listed.size() == count_districtings(D, n, B));
        const std::set<Votes> unique(listed.begin(), listed.end());
        CHECK(unique.size() == listed.size());
        CHECK(std::is_sorted(listed.rbegin(), listed.rend()));

        // Independent route: every ordered tuple, sorted and deduplicated.
        std::set<Votes> brute;
        Votes t(static_cast<std::size_t>(D), 0);
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
          if (i == t.size()) {
            if (left == 0) {
              auto k = t;
              std::sort(k.begin(), k.end(), std::greater<>());
              brute.insert(k);
            }
            return;
          }
          for (std::int64_t b = 0; b <= std::min(n, left); ++b) {
            t[i] = b;
            rec(i + 1, left - b);
          }
        };
        rec(0, B);
        CHECK(unique == brute);
      }
    }
  }
}

TEST_CASE("count_districtings saturates instead of overflowing") {
  CHECK(count_districtings(40, 1000, 20000) == std::numeric_limits<std::uint64_t>::max());
  CHECK(count_districtings(3, 4, 6) == 5);
}

TEST_CASE("minimax examples") {
  SUBCASE("D=2, n=4, B=3") {
    const auto r = minimax(2, 4, 3);
    CHECK(r.value == Ratio(1));
    CHECK(as_votes(r.optimal_districtings) == std::vector<Votes>{{3, 0}, {2, 1}});
    CHECK(r.prediction == Ratio(1));
    CHECK(r.matches_prediction);
    CHECK(r.responses[0].contains_half);
    CHECK_FALSE(r.responses[1].contains_half);
    CHECK(r.half_is_optimal_somewhere);
  }
  SUBCASE("D=2, n=2, B=1") {
    const auto r = minimax(2, 2, 1);
    CHECK(r.value == Ratio(1, 2));
    CHECK(as_votes(r.optimal_districtings) == std::vector<Votes>{{1, 0}});
    CHECK(r.matches_prediction);
  }
  SUBCASE("D=2, n=2, B=0") {
    const auto r = minimax(2, 2, 0);
    CHECK(r.value == Ratio(0));
    CHECK(r.cutter_value == Ratio(2));
    CHECK(r.matches_prediction);
  }
  SUBCASE("a lone chooser voter cannot be neutralised at m = 1/2") {
    const auto r = minimax(2, 4, 1);
    CHECK(r.value == Ratio(1, 2));
    CHECK(r.matches_prediction);
    CHECK_FALSE(r.half_is_optimal_somewhere);
  }
}

TEST_CASE("parallel minimax, serial reference, and brute force agree") {
  for (std::int64_t D = 1; D <= 4; ++D) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      for (std::int64_t B = 0; B <= D * n; ++B) {
        CAPTURE(D);
        CAPTURE(n);
        CAPTURE(B);
        const auto fast = minimax(D, n, B, {}, {.jobs = 3});
        const auto slow = minimax_serial(D, n, B);
        const auto brute = oracle::minimax(D, n, B);
        CHECK(fast.value == slow.value);
        CHECK(fast.value == brute.value);
        CHECK(as_votes(fast.optimal_districtings) == as_votes(slow.optimal_districtings));
        CHECK(as_votes(fast.optimal_districtings) == brute.optimal);
        CHECK(fast.responses == slow.responses);
        CHECK(fast.half_is_optimal_somewhere == brute.half_somewhere);
        CHECK(fast.value + fast.cutter_value == Ratio(D));
      }
    }
  }
}

TEST_CASE("enumeration guard") {
  try {
    minimax(8, 40, 160, {}, {.max_districtings = 1000});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("stacking cap restricts both players") {
  // With M = 3/4 and n = 4 the cutter cannot draw unanimous districts.
  const StackingCap cap{Ratio(3, 4)};
  const auto r = minimax(2, 4, 4, cap);
  for (const auto& d : r.optimal_districtings) CHECK(cap.admits(d));
  CHECK(r.districtings_searched == 2);  // {3,1} and {2,2}
  CHECK(minimax_serial(2, 4, 4, cap).value == r.value);

  CHECK_THROWS_AS(minimax(2, 4, 0, cap), Error);  // only {0,0}, which is unanimous
  CHECK_THROWS_AS(minimax(2, 4, 4, StackingCap{Ratio(1, 2)}), Error);

  const StackingCap chooser_only{Ratio(3, 4), false};
  CHECK(minimax(2, 4, 0, chooser_only).value == Ratio(0));
}

TEST_CASE("value is monotone in B_total and complementary across relabeling") {
  for (std::int64_t D = 2; D <= 4; ++D) {
    for (std::int64_t n = 2; n <= 4; n += 2) {
      Ratio previous(-1);
      for (std::int64_t B = 0; B <= D * n; ++B) {
        const auto r = minimax(D, n, B);
        const auto mirrored = minimax(D, n, D * n - B);
        CHECK(r.value >= previous);
        previous = r.value;
        // The chooser gets the rounding slack: both sides rounded up sum to
        // D, or D + 1/2 off the lattice.
        const bool on_lattice = (Ratio(B, D * n) * Ratio(2 * D)).is_integer();
        CHECK(r.value + mirrored.value == Ratio(D) + (on_lattice ? Ratio(0) : Ratio(1, 2)));
      }
    }
  }
}

TEST_CASE("verify_theorems sweep") {
  const auto report = verify_theorems({1, 2, 3}, {2, 3, 4});
  std::size_t odd_rows = 0;
  for (const auto& row : report.rows) {
    CAPTURE(row.districts);
    CAPTURE(row.n);
    CAPTURE(row.chooser_total);
    CHECK(row.districts >= 2);
    if (!row.asserted) {
      ++odd_rows;
      CHECK(row.n % 2 == 1);
      CHECK_FALSE(row.construction_value);
      continue;
    }
    CHECK(row.value_formula_holds());
    CHECK(*row.construction_value == row.value);
    // m = 1/2 is never optimal exactly for a lone chooser voter with n = 4.
    const bool lone_voter = row.n == 4 && row.chooser_total == 1;
    CHECK(row.half_optimal_holds() == !lone_voter);
    CHECK(*row.construction_contains_half == !lone_voter);
  }
  CHECK(odd_rows == 7 + 10);
  CHECK(report.failed == 2);
  CHECK_FALSE(report.ok());

  const auto odd = std::find_if(report.rows.begin(), report.rows.end(), [](const VerifyRow& r) {
    return r.districts == 3 && r.n == 3 && r.chooser_total == 4;
  });
  REQUIRE(odd != report.rows.end());
  CHECK(odd->value == Ratio(3, 2));
  CHECK_FALSE(odd->asserted);
}

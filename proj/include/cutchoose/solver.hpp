#pragma once

#include "cutchoose/districting.hpp"
#include "cutchoose/ratio.hpp"
#include "cutchoose/strategies.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cutchoose {

/// Number of nonincreasing vectors of length D over [0, n] summing to B_total.
/// Saturates at UINT64_MAX.
std::uint64_t count_districtings(std::int64_t districts, std::int64_t n, std::int64_t chooser_total);

/// Visits every canonical districting exactly once, in decreasing lexicographic
/// order. Throws InvalidArgs unless D >= 1, n >= 1, 0 <= B_total <= D n.
void for_each_districting(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                          const std::function<void(const Districting&)>& visit);

std::vector<Districting> enumerate_districtings(std::int64_t districts, std::int64_t n,
                                                std::int64_t chooser_total);

struct SolverOptions {
  std::uint64_t max_districtings = 1'000'000;
  int jobs = 0;  ///< OpenMP threads; 0 = runtime default
};

struct MinimaxResult {
  std::int64_t districts = 0;
  std::int64_t n = 0;
  std::int64_t chooser_total = 0;
  StackingCap cap;

  Ratio value;         ///< chooser's equilibrium expected seats
  Ratio cutter_value;  ///< D - value
  std::vector<Districting> optimal_districtings;  ///< decreasing lexicographic order
  std::vector<BestResponse> responses;            ///< parallel to optimal_districtings
  std::uint64_t districtings_searched = 0;

  Ratio prediction;         ///< D * roundUP(v_B, 1/(2D))
  Ratio cutter_prediction;  ///< D * roundDOWN(v_A, 1/(2D))
  bool matches_prediction = false;
  bool half_is_optimal_somewhere = false;
};

/// Exhaustive subgame-perfect solution. Every canonical districting the cap
/// admits gets a full chooser best response; the cutter minimises. Throws
/// TooLarge past options.max_districtings and EmptyStrategySpace if the cap
/// admits no districting.
MinimaxResult minimax(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                      const StackingCap& cap = {}, const SolverOptions& options = {});

/// Reference implementation: single-threaded, Ratio arithmetic throughout.
MinimaxResult minimax_serial(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                             const StackingCap& cap = {}, const SolverOptions& options = {});

struct VerifyRow {
  std::int64_t districts = 0;
  std::int64_t n = 0;
  std::int64_t chooser_total = 0;
  Ratio value;
  Ratio prediction;
  Ratio cutter_value;
  Ratio cutter_prediction;
  bool matches_prediction = false;
  bool half_is_optimal_somewhere = false;
  std::size_t optimal_count = 0;
  bool asserted = false;  ///< even n; odd-n rows are recorded only
  /// Construction check, even n only.
  std::optional<Ratio> construction_value;
  std::optional<bool> construction_contains_half;

  bool value_formula_holds() const;
  bool half_optimal_holds() const;
  bool construction_agrees() const;
  bool passes() const;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  std::size_t asserted = 0;
  std::size_t failed = 0;
  bool ok() const { return failed == 0; }
};

/// Runs minimax for every (D, n, B_total) with D in `district_counts` (D = 1 is
/// skipped), n in `district_sizes`, and every B_total in [0, D n].
VerifyReport verify_theorems(const std::vector<std::int64_t>& district_counts,
                             const std::vector<std::int64_t>& district_sizes,
                             const SolverOptions& options = {});

}  // namespace cutchoose

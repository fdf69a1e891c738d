#pragma once

#include "cutchoose/districting.hpp"
#include "cutchoose/ratio.hpp"

#include <cstdint>
#include <vector>

namespace cutchoose {

/// Half-open interval [lo, hi) of thresholds.
struct Interval {
  Ratio lo;
  Ratio hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A maximal range of m on which every district keeps its status, with the
/// chooser's expected seats there.
struct Cell {
  Interval range;
  Ratio chooser_seats;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Upper limit M on the chooser's threshold, modelling imperfect stacking: the
/// chooser picks m in [1/2, M), and when `limits_cutter` is set the cutter may
/// not stack any district beyond a max(b, n - b) / n <= M majority.
struct StackingCap {
  Ratio limit{1};
  bool limits_cutter = true;

  bool is_unbounded() const { return limit == Ratio(1); }
  /// Whether the cutter may draw `d` under this cap.
  bool admits(const Districting& d) const;
};

struct BestResponse {
  std::vector<Interval> optimal_intervals;  // merged, ascending
  Ratio value;                              // max expected chooser seats
  bool contains_half = false;
  std::vector<Cell> cells;                  // every cell of [1/2, M), ascending

  /// Left end of the lowest optimal interval.
  const Ratio& representative() const { return optimal_intervals.front().lo; }

  friend bool operator==(const BestResponse&, const BestResponse&) = default;
};

/// Constant-outcome cells covering [1/2, M). Integer mode uses the [k/n, (k+1)/n)
/// lattice; share mode cuts at every s_i and 1 - s_i.
std::vector<Interval> threshold_cells(const Districting& d, const StackingCap& cap = {});
std::vector<Interval> threshold_cells(const ShareProfile& p, const StackingCap& cap = {});

/// Exhaustive chooser best response. Throws EmptyStrategySpace if M <= 1/2.
BestResponse best_response(const Districting& d, const StackingCap& cap = {});
BestResponse best_response(const ShareProfile& p, const StackingCap& cap = {});

/// The cutter's construction behind the equilibrium proof, with the lattice
/// plan it was derived from.
struct CutPlan {
  Districting districting;         // what the cutter actually draws
  Districting pretend_plan;        // k unanimous chooser districts, an optional tie, the rest unanimous cutter
  std::int64_t pretend_voters = 0; // cutter voters counted as chooser voters in the plan
  Ratio target_share;              // v_B rounded up to the 1/(2D) lattice
};

/// Requires D > 1 and 0 <= B_total <= D n. The pretend voters are moved into a
/// unanimous chooser district of the plan. Throws InfeasibleConstruction when
/// the plan needs an exact tie but n is odd.
CutPlan plan_cut(std::int64_t districts, std::int64_t n, std::int64_t chooser_total);
Districting cut_optimal(std::int64_t districts, std::int64_t n, std::int64_t chooser_total);

/// Expected chooser seats identical on every cell of [1/2, 1).
bool is_equalizing(const Districting& d);
bool is_equalizing(const ShareProfile& p);

/// g rotationally symmetric about (1/2, v_B): g(y) + g(1 - y) = 2 v_B at every
/// cell midpoint of the grid formed by the breakpoints and their reflections.
bool check_symmetry(const DistrictingFunction& f, const Ratio& chooser_share);

struct Exploitability {
  Ratio seats_at_half;
  Ratio best_value;
  Ratio delta;
};

Exploitability exploitability(const Districting& d);
Exploitability exploitability(const ShareProfile& p);

}  // namespace cutchoose

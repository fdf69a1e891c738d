#include "cutchoose/strategies.hpp"

#include "cutchoose/election.hpp"
#include "cutchoose/error.hpp"

#include <algorithm>
#include <string>

namespace cutchoose {

namespace {

const Ratio kHalf(1, 2);

void check_cap(const StackingCap& cap) {
  if (cap.limit <= kHalf) {
    throw Error(ErrorKind::EmptyStrategySpace, "cap M = " + cap.limit.str() + " leaves [1/2, M) empty");
  }
  if (cap.limit > Ratio(1)) {
    throw Error(ErrorKind::OutOfRange, "cap M must not exceed 1, got " + cap.limit.str());
  }
}

std::vector<Interval> cells_from_cuts(std::vector<Ratio> cuts, const Ratio& limit) {
  std::vector<Ratio> points{kHalf};
  for (auto& c : cuts) {
    if (c > kHalf && c < limit) points.push_back(std::move(c));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  points.push_back(limit);

  std::vector<Interval> out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    out.push_back({points[i], points[i + 1]});
  }
  return out;
}

template <typename Profile>
BestResponse best_response_impl(const Profile& profile, const StackingCap& cap) {
  check_cap(cap);
  BestResponse br;
  for (auto& cell : threshold_cells(profile, cap)) {
    auto seats = expected_seats(profile, Threshold::share(cell.lo)).chooser;
    br.cells.push_back({std::move(cell), std::move(seats)});
  }
  br.value = br.cells.front().chooser_seats;
  for (const auto& c : br.cells) {
    br.value = std::max(br.value, c.chooser_seats);
  }
  for (const auto& c : br.cells) {
    if (c.chooser_seats != br.value) continue;
    if (!br.optimal_intervals.empty() && br.optimal_intervals.back().hi == c.range.lo) {
      br.optimal_intervals.back().hi = c.range.hi;
    } else {
      br.optimal_intervals.push_back(c.range);
    }
  }
  br.contains_half = br.cells.front().chooser_seats == br.value;
  return br;
}

template <typename Profile>
Exploitability exploitability_impl(const Profile& profile) {
  auto br = best_response(profile);
  Exploitability e;
  e.seats_at_half = br.cells.front().chooser_seats;
  e.best_value = br.value;
  e.delta = e.best_value - e.seats_at_half;
  return e;
}

template <typename Profile>
bool is_equalizing_impl(const Profile& profile) {
  const auto br = best_response(profile);
  return std::all_of(br.cells.begin(), br.cells.end(),
                     [&](const Cell& c) { return c.chooser_seats == br.value; });
}

}  // namespace

bool StackingCap::admits(const Districting& d) const {
  if (!limits_cutter) return true;
  const auto n = d.voters_per_district();
  return std::all_of(d.chooser_votes().begin(), d.chooser_votes().end(), [&](std::int64_t b) {
    return Ratio(std::max(b, n - b), n) <= limit;
  });
}

std::vector<Interval> threshold_cells(const Districting& d, const StackingCap& cap) {
  const auto n = d.voters_per_district();
  std::vector<Ratio> cuts;
  for (std::int64_t k = n / 2; k < n; ++k) {
    cuts.emplace_back(k, n);
  }
  return cells_from_cuts(std::move(cuts), cap.limit);
}

std::vector<Interval> threshold_cells(const ShareProfile& p, const StackingCap& cap) {
  std::vector<Ratio> cuts;
  for (const auto& s : p.shares()) {
    cuts.push_back(s);
    cuts.push_back(Ratio(1) - s);
  }
  return cells_from_cuts(std::move(cuts), cap.limit);
}

BestResponse best_response(const Districting& d, const StackingCap& cap) { return best_response_impl(d, cap); }
BestResponse best_response(const ShareProfile& p, const StackingCap& cap) { return best_response_impl(p, cap); }

CutPlan plan_cut(std::int64_t districts, std::int64_t n, std::int64_t chooser_total) {
  if (districts <= 1) {
    throw Error(ErrorKind::InvalidArgs, "the construction needs D > 1");
  }
  if (n <= 0 || chooser_total < 0 || chooser_total > districts * n) {
    throw Error(ErrorKind::InvalidArgs, "need n > 0 and 0 <= B_total <= D n");
  }
  const Ratio share(chooser_total, districts * n);
  const Ratio target = round_up_to(share, Ratio(1, 2 * districts));

  // target = (2k + e) / (2D)
  const std::int64_t half_units = (target * Ratio(2 * districts)).to_i64();
  const std::int64_t unanimous = half_units / 2;
  const bool tie = half_units % 2 == 1;
  if (tie && n % 2 != 0) {
    throw Error(ErrorKind::InfeasibleConstruction,
                "target share " + target.str() + " needs a tied district but n = " + std::to_string(n) +
                    " is odd");
  }

  std::vector<std::int64_t> plan(static_cast<std::size_t>(districts), 0);
  for (std::int64_t i = 0; i < unanimous; ++i) plan[static_cast<std::size_t>(i)] = n;
  if (tie) plan[static_cast<std::size_t>(unanimous)] = n / 2;

  const std::int64_t pretend = unanimous * n + (tie ? n / 2 : 0) - chooser_total;

  // pretend < n/2, so one unanimous district can absorb all of them. Without
  // one (k = 0) the tied district is the only place they can go.
  auto actual = plan;
  if (pretend > 0) {
    const auto host = static_cast<std::size_t>(unanimous > 0 ? unanimous - 1 : 0);
    actual[host] -= pretend;
  }

  return CutPlan{Districting(n, std::move(actual)), Districting(n, std::move(plan)), pretend, target};
}

Districting cut_optimal(std::int64_t districts, std::int64_t n, std::int64_t chooser_total) {
  return plan_cut(districts, n, chooser_total).districting;
}

bool is_equalizing(const Districting& d) { return is_equalizing_impl(d); }
bool is_equalizing(const ShareProfile& p) { return is_equalizing_impl(p); }

bool check_symmetry(const DistrictingFunction& f, const Ratio& chooser_share) {
  std::vector<Ratio> grid{Ratio(0), kHalf, Ratio(1)};
  for (const auto& x : f.breakpoints()) {
    grid.push_back(x);
    grid.push_back(Ratio(1) - x);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const Ratio twice = chooser_share * Ratio(2);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i] < kHalf) continue;
    const Ratio mid = (grid[i] + grid[i + 1]) / Ratio(2);
    // The grid is closed under reflection, so neither point is a jump.
    const auto right = std::get<Ratio>(eval_g(f, mid));
    const auto left = std::get<Ratio>(eval_g(f, Ratio(1) - mid));
    if (left + right != twice) return false;
  }
  return true;
}

Exploitability exploitability(const Districting& d) { return exploitability_impl(d); }
Exploitability exploitability(const ShareProfile& p) { return exploitability_impl(p); }

}  // namespace cutchoose

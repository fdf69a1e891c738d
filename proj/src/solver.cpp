#include "cutchoose/solver.hpp"

#include "cutchoose/election.hpp"
#include "cutchoose/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <omp.h>

namespace cutchoose {

namespace {

void check_instance(std::int64_t districts, std::int64_t n, std::int64_t chooser_total) {
  if (districts < 1 || n < 1) {
    throw Error(ErrorKind::InvalidArgs, "need D >= 1 and n >= 1");
  }
  if (chooser_total < 0 || chooser_total > districts * n) {
    throw Error(ErrorKind::InvalidArgs, "B_total " + std::to_string(chooser_total) + " outside [0, D n]");
  }
}

void enumerate_into(std::vector<std::int64_t>& prefix, std::size_t pos, std::int64_t remaining,
                    std::int64_t ceiling, std::int64_t n, const std::function<void(const Districting&)>& visit) {
  const auto slots = static_cast<std::int64_t>(prefix.size() - pos);
  if (slots == 0) {
    if (remaining == 0) visit(Districting(n, prefix));
    return;
  }
  // Remaining districts each take at most `ceiling`, and the rest must still fit.
  const std::int64_t hi = std::min(ceiling, remaining);
  const std::int64_t lo = (remaining + slots - 1) / slots;
  for (std::int64_t b = hi; b >= lo; --b) {
    prefix[pos] = b;
    enumerate_into(prefix, pos + 1, remaining - b, b, n, visit);
  }
}

void finish_predictions(MinimaxResult& r) {
  const Ratio D(r.districts);
  const Ratio step(1, 2 * r.districts);
  const Ratio share(r.chooser_total, r.districts * r.n);
  r.cutter_value = D - r.value;
  r.prediction = D * round_up_to(share, step);
  r.cutter_prediction = D * round_down_to(Ratio(1) - share, step);
  r.matches_prediction = r.value == r.prediction && r.cutter_value == r.cutter_prediction;
  r.half_is_optimal_somewhere = std::any_of(r.responses.begin(), r.responses.end(),
                                            [](const BestResponse& b) { return b.contains_half; });
}

std::vector<Districting> admitted_districtings(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                                               const StackingCap& cap, const SolverOptions& options) {
  check_instance(districts, n, chooser_total);
  if (cap.limit <= Ratio(1, 2) || cap.limit > Ratio(1)) {
    throw Error(ErrorKind::EmptyStrategySpace, "cap M = " + cap.limit.str() + " must lie in (1/2, 1]");
  }
  const auto total = count_districtings(districts, n, chooser_total);
  if (total > options.max_districtings) {
    throw Error(ErrorKind::TooLarge, std::to_string(total) + " districtings exceed the limit of " +
                                         std::to_string(options.max_districtings));
  }
  std::vector<Districting> all;
  all.reserve(total);
  for_each_districting(districts, n, chooser_total, [&](const Districting& d) {
    if (cap.admits(d)) all.push_back(d);
  });
  if (all.empty()) {
    throw Error(ErrorKind::EmptyStrategySpace, "the stacking cap admits no districting");
  }
  return all;
}

MinimaxResult make_result(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                          const StackingCap& cap, std::size_t searched) {
  MinimaxResult r;
  r.districts = districts;
  r.n = n;
  r.chooser_total = chooser_total;
  r.cap = cap;
  r.districtings_searched = searched;
  return r;
}

}  // namespace

std::uint64_t count_districtings(std::int64_t districts, std::int64_t n, std::int64_t chooser_total) {
  check_instance(districts, n, chooser_total);
  // Partitions of B_total into at most D parts, each at most n: ways[j][s]
  // counts nonincreasing length-j vectors with parts <= current cap summing to s.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };

  const auto S = static_cast<std::size_t>(chooser_total);
  const auto J = static_cast<std::size_t>(districts);
  // ways[j][s] over parts in [0, v], built up by v.
  std::vector<std::vector<std::uint64_t>> ways(J + 1, std::vector<std::uint64_t>(S + 1, 0));
  for (std::size_t j = 0; j <= J; ++j) ways[j][0] = 1;  // all zeros
  for (std::int64_t v = 1; v <= n; ++v) {
    const auto step = static_cast<std::size_t>(v);
    // Allow parts equal to v: ways[j][s] += ways[j-1][s-v] (with parts <= v).
    for (std::size_t j = 1; j <= J; ++j) {
      for (std::size_t s = step; s <= S; ++s) {
        ways[j][s] = add(ways[j][s], ways[j - 1][s - step]);
      }
    }
  }
  return ways[J][S];
}

void for_each_districting(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                          const std::function<void(const Districting&)>& visit) {
  check_instance(districts, n, chooser_total);
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(districts), 0);
  enumerate_into(prefix, 0, chooser_total, n, n, visit);
}

std::vector<Districting> enumerate_districtings(std::int64_t districts, std::int64_t n,
                                                std::int64_t chooser_total) {
  std::vector<Districting> out;
  for_each_districting(districts, n, chooser_total, [&](const Districting& d) { out.push_back(d); });
  return out;
}

MinimaxResult minimax_serial(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                             const StackingCap& cap, const SolverOptions& options) {
  const auto all = admitted_districtings(districts, n, chooser_total, cap, options);
  auto r = make_result(districts, n, chooser_total, cap, all.size());

  std::optional<Ratio> best;
  for (const auto& d : all) {
    auto br = best_response(d, cap);
    if (!best || br.value < *best) {
      best = br.value;
      r.optimal_districtings.clear();
      r.responses.clear();
    }
    if (br.value == *best) {
      r.optimal_districtings.push_back(d);
      r.responses.push_back(std::move(br));
    }
  }
  r.value = *best;
  finish_predictions(r);
  return r;
}

MinimaxResult minimax(std::int64_t districts, std::int64_t n, std::int64_t chooser_total,
                      const StackingCap& cap, const SolverOptions& options) {
  const auto all = admitted_districtings(districts, n, chooser_total, cap, options);
  auto r = make_result(districts, n, chooser_total, cap, all.size());

  // Effective thresholds reachable with m in [1/2, M).
  const std::int64_t first = effective_threshold(Ratio(1, 2), n);
  const std::int64_t last = (cap.limit * Ratio(n)).ceil().convert_to<std::int64_t>() - 1;

  const auto count = static_cast<std::int64_t>(all.size());
  std::vector<std::int64_t> half_values(all.size());
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel for num_threads(threads) schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto votes = all[static_cast<std::size_t>(i)].chooser_votes();
    std::int64_t best = 0;
    for (std::int64_t t = first; t <= last; ++t) {
      best = std::max(best, chooser_half_seats(votes, n, t));
    }
    half_values[static_cast<std::size_t>(i)] = best;
  }

  const auto min_half = *std::min_element(half_values.begin(), half_values.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (half_values[i] != min_half) continue;
    r.optimal_districtings.push_back(all[i]);
    r.responses.push_back(best_response(all[i], cap));
  }
  r.value = Ratio(min_half, 2);
  finish_predictions(r);
  return r;
}

bool VerifyRow::value_formula_holds() const { return matches_prediction; }
bool VerifyRow::half_optimal_holds() const { return half_is_optimal_somewhere; }
bool VerifyRow::construction_agrees() const {
  return !construction_value || (*construction_value == value && construction_contains_half.value_or(false));
}
bool VerifyRow::passes() const {
  return !asserted || (value_formula_holds() && half_optimal_holds() && construction_agrees());
}

VerifyReport verify_theorems(const std::vector<std::int64_t>& district_counts,
                             const std::vector<std::int64_t>& district_sizes, const SolverOptions& options) {
  VerifyReport report;
  for (auto D : district_counts) {
    if (D < 2) continue;
    for (auto n : district_sizes) {
      for (std::int64_t B = 0; B <= D * n; ++B) {
        const auto result = minimax(D, n, B, {}, options);
        VerifyRow row;
        row.districts = D;
        row.n = n;
        row.chooser_total = B;
        row.value = result.value;
        row.prediction = result.prediction;
        row.cutter_value = result.cutter_value;
        row.cutter_prediction = result.cutter_prediction;
        row.matches_prediction = result.matches_prediction;
        row.half_is_optimal_somewhere = result.half_is_optimal_somewhere;
        row.optimal_count = result.optimal_districtings.size();
        row.asserted = n % 2 == 0;
        if (row.asserted) {
          const auto br = best_response(cut_optimal(D, n, B));
          row.construction_value = br.value;
          row.construction_contains_half = br.contains_half;
          ++report.asserted;
        }
        if (!row.passes()) ++report.failed;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace cutchoose

#include "cutchoose/simulate.hpp"

#include "cutchoose/error.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace cutchoose {

Ratio SeatSample::mean() const {
  if (count == 0) {
    throw Error(ErrorKind::InvalidArgs, "empty sample");
  }
  return Ratio(sum, static_cast<std::int64_t>(count));
}

Ratio SeatSample::variance() const {
  const Ratio mu = mean();
  return Ratio(sum_sq, static_cast<std::int64_t>(count)) - mu * mu;
}

SeatSample simulate_seats_serial(std::span<const DistrictStatus> statuses, AllocationMode mode,
                                 std::uint64_t seed_begin, std::uint64_t count) {
  SeatSample s;
  s.count = count;
  s.min = std::numeric_limits<std::int64_t>::max();
  s.max = std::numeric_limits<std::int64_t>::min();
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto seats = realize(statuses, mode, seed_begin + k).chooser_seats;
    s.sum += seats;
    s.sum_sq += seats * seats;
    s.min = std::min(s.min, seats);
    s.max = std::max(s.max, seats);
  }
  if (count == 0) {
    s.min = s.max = 0;
  }
  return s;
}

SeatSample simulate_seats(std::span<const DistrictStatus> statuses, AllocationMode mode,
                          std::uint64_t seed_begin, std::uint64_t count, int jobs) {
  if (count == 0) {
    return simulate_seats_serial(statuses, mode, seed_begin, count);
  }
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto total = static_cast<std::int64_t>(count);

  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();

#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : sum, sum_sq) \
    reduction(min : lo) reduction(max : hi)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto seats = realize(statuses, mode, seed_begin + static_cast<std::uint64_t>(k)).chooser_seats;
    sum += seats;
    sum_sq += seats * seats;
    lo = std::min(lo, seats);
    hi = std::max(hi, seats);
  }

  SeatSample s;
  s.count = count;
  s.sum = sum;
  s.sum_sq = sum_sq;
  s.min = lo;
  s.max = hi;
  return s;
}

Ratio realized_seat_variance(std::span<const DistrictStatus> statuses, AllocationMode mode) {
  const auto randomized = count_statuses(statuses).randomized;
  const auto coins = mode == AllocationMode::PairedSplit ? randomized % 2 : randomized;
  return Ratio(coins, 4);
}

}  // namespace cutchoose

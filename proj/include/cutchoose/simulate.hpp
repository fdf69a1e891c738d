#pragma once

#include "cutchoose/election.hpp"
#include "cutchoose/ratio.hpp"

#include <cstdint>
#include <span>

namespace cutchoose {

/// Aggregate of realized chooser seats over a contiguous seed range.
struct SeatSample {
  std::uint64_t count = 0;
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;

  Ratio mean() const;
  /// Population variance, exact.
  Ratio variance() const;

  friend bool operator==(const SeatSample&, const SeatSample&) = default;
};

/// Seeds seed_begin, seed_begin + 1, ..., seed_begin + count - 1, one election each.
SeatSample simulate_seats_serial(std::span<const DistrictStatus> statuses, AllocationMode mode,
                                 std::uint64_t seed_begin, std::uint64_t count);

/// OpenMP version of simulate_seats_serial. The seed range is split across
/// threads; integer reductions make the result identical for any `jobs`
/// (0 = OpenMP default).
SeatSample simulate_seats(std::span<const DistrictStatus> statuses, AllocationMode mode,
                          std::uint64_t seed_begin, std::uint64_t count, int jobs = 0);

/// Exact variance of realized chooser seats: count/4 for coin flips,
/// (count mod 2)/4 for paired split.
Ratio realized_seat_variance(std::span<const DistrictStatus> statuses, AllocationMode mode);

}  // namespace cutchoose

#pragma once

#include "cutchoose/districting.hpp"
#include "cutchoose/ratio.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cutchoose {

enum class DistrictStatus { CutterWin, ChooserWin, Randomized };

std::string_view to_string(DistrictStatus s);

/// The chooser's threshold m in [1/2, 1). In integer mode it also carries the
/// effective threshold T = floor(m n): a district is won outright with T + 1
/// or more votes, so every m in [T/n, (T+1)/n) behaves identically.
class Threshold {
 public:
  /// Share-mode threshold (no district size attached).
  static Threshold share(const Ratio& m);

  const Ratio& m() const { return m_; }
  std::optional<std::int64_t> effective() const { return effective_; }
  std::optional<std::int64_t> voters_per_district() const { return n_; }

 private:
  friend Threshold canonicalize_threshold(const Ratio& m, std::int64_t n);
  Threshold(Ratio m, std::optional<std::int64_t> effective, std::optional<std::int64_t> n)
      : m_(std::move(m)), effective_(effective), n_(n) {}

  Ratio m_;
  std::optional<std::int64_t> effective_;
  std::optional<std::int64_t> n_;
};

/// Throws OutOfRange unless 1/2 <= m < 1.
Threshold canonicalize_threshold(const Ratio& m, std::int64_t n);

/// floor(m n) without the range check; used by the cell enumerations.
std::int64_t effective_threshold(const Ratio& m, std::int64_t n);

/// Strict-majority rule: ChooserWin iff b > T, CutterWin iff n - b > T.
inline DistrictStatus classify_votes(std::int64_t chooser_votes, std::int64_t n, std::int64_t effective) {
  if (chooser_votes > effective) return DistrictStatus::ChooserWin;
  if (n - chooser_votes > effective) return DistrictStatus::CutterWin;
  return DistrictStatus::Randomized;
}

/// Share-mode rule: ChooserWin iff s > m, CutterWin iff 1 - s > m.
DistrictStatus classify_share(const Ratio& share, const Ratio& m);

std::vector<DistrictStatus> classify(const Districting& d, const Threshold& t);
std::vector<DistrictStatus> classify(const ShareProfile& p, const Threshold& t);

struct StatusCounts {
  std::int64_t chooser = 0;
  std::int64_t cutter = 0;
  std::int64_t randomized = 0;
};

StatusCounts count_statuses(std::span<const DistrictStatus> statuses);

/// Expected seats for each side; chooser + cutter = D.
struct SeatSplit {
  Ratio chooser;
  Ratio cutter;
  friend bool operator==(const SeatSplit&, const SeatSplit&) = default;
};

SeatSplit expected_seats(std::span<const DistrictStatus> statuses);
SeatSplit expected_seats(const Districting& d, const Threshold& t);
SeatSplit expected_seats(const ShareProfile& p, const Threshold& t);

/// Twice the chooser's expected seats, 2|ChooserWin| + |Randomized|, for a
/// given effective threshold. Integer-only hot path for the solver.
std::int64_t chooser_half_seats(std::span<const std::int64_t> chooser_votes, std::int64_t n,
                                std::int64_t effective);

enum class AllocationMode {
  IndependentCoinFlips,  ///< every randomized district is its own fair coin
  PairedSplit,           ///< split randomized districts evenly; coin only for an odd leftover
};

std::string_view to_string(AllocationMode mode);
AllocationMode parse_allocation_mode(std::string_view text);

enum class Winner { Cutter, Chooser };

struct Realization {
  std::int64_t chooser_seats = 0;
  std::vector<Winner> winners;
};

/// Realizes one election from fixed statuses. The generator is mt19937_64
/// seeded with `seed`; each coin is the top bit of one draw, so results are
/// identical on every platform.
Realization realize(std::span<const DistrictStatus> statuses, AllocationMode mode, std::uint64_t seed);

struct ElectionOutcome {
  std::vector<DistrictStatus> statuses;
  Ratio expected_chooser_seats;
  Ratio expected_cutter_seats;
  std::optional<std::int64_t> realized_chooser_seats;
  std::optional<std::vector<Winner>> winners;
  std::optional<std::uint64_t> seed;
  AllocationMode mode = AllocationMode::IndependentCoinFlips;
};

ElectionOutcome run_election(const Districting& d, const Threshold& t, AllocationMode mode,
                             std::optional<std::uint64_t> seed);
ElectionOutcome run_election(const ShareProfile& p, const Threshold& t, AllocationMode mode,
                             std::optional<std::uint64_t> seed);

/// 1/2 [g(m) + g(1 - m)], the chooser's expected fraction of districts.
/// Throws BreakpointAmbiguity if m or 1 - m is a jump of g; expected_seats is
/// authoritative there.
Ratio u_b_from_g(const DistrictingFunction& f, const Ratio& m);

}  // namespace cutchoose

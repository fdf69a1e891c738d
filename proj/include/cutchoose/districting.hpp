#pragma once

#include "cutchoose/ratio.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace cutchoose {

/// Integer-mode cutter strategy: D districts of n voters each, storing the
/// chooser-party (B) vote count per district. Districts are exchangeable, so
/// the counts are kept sorted nonincreasing.
class Districting {
 public:
  Districting(std::int64_t voters_per_district, std::vector<std::int64_t> chooser_votes);

  std::int64_t voters_per_district() const { return n_; }
  std::size_t size() const { return votes_.size(); }
  std::span<const std::int64_t> chooser_votes() const { return votes_; }

  std::int64_t chooser_total() const;
  /// v_B = B_total / (D n).
  Ratio chooser_share() const;
  /// v_A = 1 - v_B.
  Ratio cutter_share() const;
  /// b_i / n for every district, in canonical order.
  std::vector<Ratio> district_shares() const;

  friend bool operator==(const Districting&, const Districting&) = default;
  friend auto operator<=>(const Districting&, const Districting&) = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> votes_;
};

/// Share-mode profile for real data: per-district chooser vote fractions in
/// [0, 1], canonically sorted nonincreasing. Each district counts as one of D
/// equal units regardless of turnout.
class ShareProfile {
 public:
  explicit ShareProfile(std::vector<Ratio> shares);
  static ShareProfile from(const Districting& d);

  std::size_t size() const { return shares_.size(); }
  std::span<const Ratio> shares() const { return shares_; }

  friend bool operator==(const ShareProfile&, const ShareProfile&) = default;

 private:
  std::vector<Ratio> shares_;
};

/// Returned by eval_g when m sits on a jump of g.
struct JumpDiscontinuity {
  Ratio at;
  Ratio left;   // limit from below
  Ratio right;  // limit from above
  friend bool operator==(const JumpDiscontinuity&, const JumpDiscontinuity&) = default;
};

using GValue = std::variant<Ratio, JumpDiscontinuity>;

/// The nonincreasing staircase g(m) = |{i : s_i >= m}| / D, stored as its
/// distinct breakpoints (the district shares) and the levels on the open
/// intervals between them. levels()[j] holds on (breakpoints[j-1], breakpoints[j]);
/// levels()[0] = 1 lies left of the first breakpoint and levels().back() = 0
/// right of the last.
class DistrictingFunction {
 public:
  std::size_t district_count() const { return district_count_; }
  std::span<const Ratio> breakpoints() const { return breakpoints_; }
  std::span<const Ratio> levels() const { return levels_; }
  bool is_breakpoint(const Ratio& m) const;

 private:
  friend DistrictingFunction districting_function(const ShareProfile&);
  DistrictingFunction() = default;

  std::size_t district_count_ = 0;
  std::vector<Ratio> breakpoints_;
  std::vector<Ratio> levels_;
};

DistrictingFunction districting_function(const ShareProfile& profile);
DistrictingFunction districting_function(const Districting& d);

/// Level of g at m in [0, 1], or the two one-sided limits when m is a breakpoint.
GValue eval_g(const DistrictingFunction& f, const Ratio& m);

/// Exact area under g on [0, 1], summed interval by interval.
Ratio integral_g(const DistrictingFunction& f);

}  // namespace cutchoose

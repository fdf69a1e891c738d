#include "cutchoose/districting.hpp"

#include "cutchoose/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cutchoose {

Districting::Districting(std::int64_t voters_per_district, std::vector<std::int64_t> chooser_votes)
    : n_(voters_per_district), votes_(std::move(chooser_votes)) {
  if (n_ <= 0) {
    throw Error(ErrorKind::InvalidArgs, "voters per district must be positive");
  }
  if (votes_.empty()) {
    throw Error(ErrorKind::InvalidArgs, "a districting needs at least one district");
  }
  for (auto b : votes_) {
    if (b < 0 || b > n_) {
      throw Error(ErrorKind::InvalidArgs,
                  "district vote count " + std::to_string(b) + " outside [0, " + std::to_string(n_) + "]");
    }
  }
  std::sort(votes_.begin(), votes_.end(), std::greater<>());
}

std::int64_t Districting::chooser_total() const {
  return std::accumulate(votes_.begin(), votes_.end(), std::int64_t{0});
}

Ratio Districting::chooser_share() const {
  return Ratio(chooser_total(), static_cast<std::int64_t>(votes_.size()) * n_);
}

Ratio Districting::cutter_share() const { return Ratio(1) - chooser_share(); }

std::vector<Ratio> Districting::district_shares() const {
  std::vector<Ratio> out;
  out.reserve(votes_.size());
  for (auto b : votes_) {
    out.emplace_back(b, n_);
  }
  return out;
}

ShareProfile::ShareProfile(std::vector<Ratio> shares) : shares_(std::move(shares)) {
  if (shares_.empty()) {
    throw Error(ErrorKind::InvalidArgs, "a share profile needs at least one district");
  }
  for (const auto& s : shares_) {
    if (s < Ratio(0) || s > Ratio(1)) {
      throw Error(ErrorKind::InvalidArgs, "district share " + s.str() + " outside [0, 1]");
    }
  }
  std::sort(shares_.begin(), shares_.end(), std::greater<>());
}

ShareProfile ShareProfile::from(const Districting& d) { return ShareProfile(d.district_shares()); }

bool DistrictingFunction::is_breakpoint(const Ratio& m) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), m);
}

DistrictingFunction districting_function(const ShareProfile& profile) {
  DistrictingFunction f;
  const auto shares = profile.shares();
  const auto D = static_cast<std::int64_t>(shares.size());
  f.district_count_ = shares.size();

  // Shares are nonincreasing; walk them from smallest to largest.
  f.levels_.emplace_back(1);
  std::int64_t at_or_above = D;
  for (auto it = shares.rbegin(); it != shares.rend();) {
    const Ratio x = *it;
    while (it != shares.rend() && *it == x) {
      --at_or_above;
      ++it;
    }
    f.breakpoints_.push_back(x);
    f.levels_.emplace_back(at_or_above, D);
  }
  return f;
}

DistrictingFunction districting_function(const Districting& d) {
  return districting_function(ShareProfile::from(d));
}

GValue eval_g(const DistrictingFunction& f, const Ratio& m) {
  if (m < Ratio(0) || m > Ratio(1)) {
    throw Error(ErrorKind::OutOfRange, "g is defined on [0, 1], got " + m.str());
  }
  const auto bps = f.breakpoints();
  const auto idx = static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), m) - bps.begin());
  if (idx < bps.size() && bps[idx] == m) {
    return JumpDiscontinuity{m, f.levels()[idx], f.levels()[idx + 1]};
  }
  return f.levels()[idx];
}

Ratio integral_g(const DistrictingFunction& f) {
  const auto bps = f.breakpoints();
  const auto levels = f.levels();
  Ratio area(0);
  Ratio left(0);
  for (std::size_t j = 0; j <= bps.size(); ++j) {
    Ratio right = j < bps.size() ? bps[j] : Ratio(1);
    if (right > left) {
      area += levels[j] * (right - left);
      left = right;
    }
  }
  return area;
}

}  // namespace cutchoose

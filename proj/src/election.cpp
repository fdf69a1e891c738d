#include "cutchoose/election.hpp"

#include "cutchoose/error.hpp"

#include <random>
#include <string>

namespace cutchoose {

std::string_view to_string(DistrictStatus s) {
  switch (s) {
    case DistrictStatus::CutterWin: return "CutterWin";
    case DistrictStatus::ChooserWin: return "ChooserWin";
    case DistrictStatus::Randomized: return "Randomized";
  }
  return "?";
}

std::string_view to_string(AllocationMode mode) {
  return mode == AllocationMode::PairedSplit ? "paired" : "independent";
}

AllocationMode parse_allocation_mode(std::string_view text) {
  if (text == "independent" || text == "coin") return AllocationMode::IndependentCoinFlips;
  if (text == "paired" || text == "paired-split") return AllocationMode::PairedSplit;
  throw Error(ErrorKind::InvalidArgs, "unknown allocation mode '" + std::string(text) + "'");
}

namespace {

void check_threshold_range(const Ratio& m) {
  if (m < Ratio(1, 2) || m >= Ratio(1)) {
    throw Error(ErrorKind::OutOfRange, "threshold must lie in [1/2, 1), got " + m.str());
  }
}

}  // namespace

Threshold Threshold::share(const Ratio& m) {
  check_threshold_range(m);
  return Threshold(m, std::nullopt, std::nullopt);
}

std::int64_t effective_threshold(const Ratio& m, std::int64_t n) { return (m * Ratio(n)).floor_i64(); }

Threshold canonicalize_threshold(const Ratio& m, std::int64_t n) {
  check_threshold_range(m);
  if (n <= 0) {
    throw Error(ErrorKind::InvalidArgs, "voters per district must be positive");
  }
  return Threshold(m, effective_threshold(m, n), n);
}

DistrictStatus classify_share(const Ratio& share, const Ratio& m) {
  if (share > m) return DistrictStatus::ChooserWin;
  if (Ratio(1) - share > m) return DistrictStatus::CutterWin;
  return DistrictStatus::Randomized;
}

std::vector<DistrictStatus> classify(const Districting& d, const Threshold& t) {
  const auto n = d.voters_per_district();
  const auto T = effective_threshold(t.m(), n);
  std::vector<DistrictStatus> out;
  out.reserve(d.size());
  for (auto b : d.chooser_votes()) {
    out.push_back(classify_votes(b, n, T));
  }
  return out;
}

std::vector<DistrictStatus> classify(const ShareProfile& p, const Threshold& t) {
  std::vector<DistrictStatus> out;
  out.reserve(p.size());
  for (const auto& s : p.shares()) {
    out.push_back(classify_share(s, t.m()));
  }
  return out;
}

StatusCounts count_statuses(std::span<const DistrictStatus> statuses) {
  StatusCounts c;
  for (auto s : statuses) {
    switch (s) {
      case DistrictStatus::ChooserWin: ++c.chooser; break;
      case DistrictStatus::CutterWin: ++c.cutter; break;
      case DistrictStatus::Randomized: ++c.randomized; break;
    }
  }
  return c;
}

SeatSplit expected_seats(std::span<const DistrictStatus> statuses) {
  const auto c = count_statuses(statuses);
  const auto D = static_cast<std::int64_t>(statuses.size());
  Ratio chooser(2 * c.chooser + c.randomized, 2);
  return {chooser, Ratio(D) - chooser};
}

SeatSplit expected_seats(const Districting& d, const Threshold& t) { return expected_seats(classify(d, t)); }

SeatSplit expected_seats(const ShareProfile& p, const Threshold& t) { return expected_seats(classify(p, t)); }

std::int64_t chooser_half_seats(std::span<const std::int64_t> chooser_votes, std::int64_t n,
                                std::int64_t effective) {
  std::int64_t half_seats = 0;
  for (auto b : chooser_votes) {
    if (b > effective) {
      half_seats += 2;
    } else if (n - b <= effective) {
      half_seats += 1;
    }
  }
  return half_seats;
}

Realization realize(std::span<const DistrictStatus> statuses, AllocationMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coin = [&rng] { return (rng() >> 63) != 0; };

  Realization r;
  r.winners.resize(statuses.size(), Winner::Cutter);

  const auto randomized = count_statuses(statuses).randomized;
  const std::int64_t paired = randomized / 2;
  std::int64_t seen = 0;

  for (std::size_t i = 0; i < statuses.size(); ++i) {
    bool chooser = false;
    switch (statuses[i]) {
      case DistrictStatus::ChooserWin: chooser = true; break;
      case DistrictStatus::CutterWin: chooser = false; break;
      case DistrictStatus::Randomized:
        if (mode == AllocationMode::IndependentCoinFlips) {
          chooser = coin();
        } else if (seen < paired) {
          chooser = true;
        } else if (seen < 2 * paired) {
          chooser = false;
        } else {
          chooser = coin();
        }
        ++seen;
        break;
    }
    if (chooser) {
      r.winners[i] = Winner::Chooser;
      ++r.chooser_seats;
    }
  }
  return r;
}

namespace {

ElectionOutcome finish(std::vector<DistrictStatus> statuses, AllocationMode mode,
                       std::optional<std::uint64_t> seed) {
  ElectionOutcome out;
  auto split = expected_seats(statuses);
  out.expected_chooser_seats = split.chooser;
  out.expected_cutter_seats = split.cutter;
  out.mode = mode;
  if (seed) {
    auto r = realize(statuses, mode, *seed);
    out.realized_chooser_seats = r.chooser_seats;
    out.winners = std::move(r.winners);
    out.seed = seed;
  }
  out.statuses = std::move(statuses);
  return out;
}

}  // namespace

ElectionOutcome run_election(const Districting& d, const Threshold& t, AllocationMode mode,
                             std::optional<std::uint64_t> seed) {
  return finish(classify(d, t), mode, seed);
}

ElectionOutcome run_election(const ShareProfile& p, const Threshold& t, AllocationMode mode,
                             std::optional<std::uint64_t> seed) {
  return finish(classify(p, t), mode, seed);
}

Ratio u_b_from_g(const DistrictingFunction& f, const Ratio& m) {
  const Ratio reflected = Ratio(1) - m;
  const auto at_m = eval_g(f, m);
  const auto at_reflected = eval_g(f, reflected);
  if (!std::holds_alternative<Ratio>(at_m) || !std::holds_alternative<Ratio>(at_reflected)) {
    throw Error(ErrorKind::BreakpointAmbiguity,
                "m = " + m.str() + " or 1 - m is a jump of g; use expected_seats instead");
  }
  return (std::get<Ratio>(at_m) + std::get<Ratio>(at_reflected)) / Ratio(2);
}

}  // namespace cutchoose

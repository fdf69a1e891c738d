#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// cell enumeration, effective thresholds, or multiset enumeration under test.

#include "cutchoose/ratio.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using cutchoose::Ratio;

/// Chooser's expected seats straight from the step-3 rule, with real m.
inline Ratio seats(const std::vector<std::int64_t>& votes, std::int64_t n, const Ratio& m) {
  Ratio total(0);
  const Ratio bar = m * Ratio(n);
  for (auto b : votes) {
    if (Ratio(b) > bar) {
      total += Ratio(1);
    } else if (!(Ratio(n - b) > bar)) {
      total += Ratio(1, 2);
    }
  }
  return total;
}

/// Scans m = 1/2 + j/(4n) below `cap`: every cell boundary is a multiple of
/// 1/(2n), so each cell contains a scanned point.
inline std::vector<Ratio> scan_points(std::int64_t n, const Ratio& cap = Ratio(1)) {
  std::vector<Ratio> out;
  for (std::int64_t j = 0;; ++j) {
    Ratio m = Ratio(1, 2) + Ratio(j, 4 * n);
    if (m >= cap) break;
    out.push_back(m);
  }
  return out;
}

struct Response {
  Ratio value;
  bool half_optimal = false;
};

inline Response best(const std::vector<std::int64_t>& votes, std::int64_t n, const Ratio& cap = Ratio(1)) {
  Response r;
  std::optional<Ratio> best;
  for (const auto& m : scan_points(n, cap)) {
    auto v = seats(votes, n, m);
    if (!best || v > *best) best = v;
  }
  r.value = *best;
  r.half_optimal = seats(votes, n, Ratio(1, 2)) == *best;
  return r;
}

struct Minimax {
  Ratio value;
  std::vector<std::vector<std::int64_t>> optimal;  // sorted nonincreasing, deduplicated
  bool half_somewhere = false;
};

/// All ordered D-tuples over [0, n] with the given sum.
inline Minimax minimax(std::int64_t D, std::int64_t n, std::int64_t total) {
  Minimax out;
  std::optional<Ratio> best;
  std::vector<std::int64_t> t(static_cast<std::size_t>(D), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == t.size()) {
      if (left != 0) return;
      auto r = oracle::best(t, n);
      auto key = t;
      std::sort(key.begin(), key.end(), std::greater<>());
      if (!best || r.value < *best) {
        best = r.value;
        out.optimal.clear();
        out.half_somewhere = false;
      }
      if (r.value == *best) {
        if (std::find(out.optimal.begin(), out.optimal.end(), key) == out.optimal.end()) out.optimal.push_back(key);
        out.half_somewhere = out.half_somewhere || r.half_optimal;
      }
      return;
    }
    for (std::int64_t b = 0; b <= std::min(n, left); ++b) {
      t[i] = b;
      rec(i + 1, left - b);
    }
  };
  rec(0, total);
  out.value = *best;
  std::sort(out.optimal.begin(), out.optimal.end(), std::greater<>());
  return out;
}

/// |{i : s_i >= m}| / D.
inline Ratio g_count(const std::vector<Ratio>& shares, const Ratio& m) {
  std::int64_t c = 0;
  for (const auto& s : shares) c += s >= m ? 1 : 0;
  return Ratio(c, static_cast<std::int64_t>(shares.size()));
}

struct RandomDistricting {
  std::int64_t n;
  std::vector<std::int64_t> votes;
};

inline RandomDistricting random_districting(std::mt19937_64& rng, std::int64_t max_d, std::int64_t max_n) {
  std::uniform_int_distribution<std::int64_t> pick_d(1, max_d);
  std::uniform_int_distribution<std::int64_t> pick_n(1, max_n);
  RandomDistricting r{pick_n(rng), {}};
  const auto D = pick_d(rng);
  std::uniform_int_distribution<std::int64_t> pick_b(0, r.n);
  for (std::int64_t i = 0; i < D; ++i) r.votes.push_back(pick_b(rng));
  return r;
}

}  // namespace oracle

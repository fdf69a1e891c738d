#pragma once

#include "cutchoose/districting.hpp"
#include "cutchoose/ratio.hpp"
#include "cutchoose/strategies.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cutchoose {

/// One row of `district,votes_a,votes_b`. Party A is the cutter, B the chooser.
struct ElectionRecord {
  std::string district_id;
  std::int64_t votes_cutter = 0;
  std::int64_t votes_chooser = 0;
  friend bool operator==(const ElectionRecord&, const ElectionRecord&) = default;
};

/// Throws ParseError (with the 1-based line number) or EmptyFile.
std::vector<ElectionRecord> parse_csv(std::istream& in);
std::vector<ElectionRecord> load_csv(const std::filesystem::path& path);

/// Per-district chooser fraction votes_b / (votes_a + votes_b).
ShareProfile to_share_profile(const std::vector<ElectionRecord>& records);

/// Total chooser votes over total votes. Equals the mean district share only
/// when turnout is equal across districts.
Ratio statewide_chooser_share(const std::vector<ElectionRecord>& records);

struct AnalysisOptions {
  /// Flag turnout divergence when |vote share - mean district share| exceeds this.
  Ratio divergence_threshold{1, 100};
};

struct AnalysisReport {
  std::size_t district_count = 0;
  std::vector<Ratio> shares;  // canonical order
  std::optional<std::int64_t> voters_per_district;
  std::vector<std::int64_t> chooser_votes;  // integer mode only

  Ratio vote_share;           // statewide chooser share
  Ratio district_mean_share;  // area under g; the model's v_B
  bool turnout_divergence = false;
  Ratio divergence_threshold;

  std::vector<Ratio> breakpoints;
  std::vector<Ratio> levels;

  Ratio seats_at_half;
  BestResponse best_response;
  Ratio delta;
  bool symmetric = false;
  bool equalizing = false;

  Ratio prediction_chooser;  // D * roundUP(v_B, 1/(2D))
  Ratio prediction_cutter;   // D * roundDOWN(v_A, 1/(2D))

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// `vote_share` defaults to the mean district share when not given.
AnalysisReport analyze(const ShareProfile& profile, std::optional<Ratio> vote_share = std::nullopt,
                       const AnalysisOptions& options = {});
AnalysisReport analyze(const Districting& d, const AnalysisOptions& options = {});
AnalysisReport analyze(const std::vector<ElectionRecord>& records, const AnalysisOptions& options = {});

std::string report_to_json(const AnalysisReport& report);
/// Throws ParseError on malformed input.
AnalysisReport report_from_json(std::string_view text);

/// Recomputes the report from its own profile and compares every field.
bool reverify(const AnalysisReport& report);

enum class DiagramFormat { Json, Svg };
DiagramFormat parse_diagram_format(std::string_view text);

struct DiagramOptions {
  int pixels = 480;
  /// Threshold whose win regions are shaded; defaults to the best response.
  std::optional<Ratio> threshold;
};

/// JSON: the report itself. SVG: the staircase g on [0, 1]^2 with the v_B
/// level and the districts shaded by who wins at the chosen threshold.
std::string emit_diagram(const AnalysisReport& report, DiagramFormat format, const DiagramOptions& options = {});

}  // namespace cutchoose

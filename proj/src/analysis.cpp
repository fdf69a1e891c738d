#include "cutchoose/analysis.hpp"

#include "cutchoose/election.hpp"
#include "cutchoose/error.hpp"
#include "cutchoose/json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace cutchoose {

namespace {

constexpr std::string_view kHeader = "district,votes_a,votes_b";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::int64_t parse_votes(std::string_view field, std::size_t line) {
  field = trim(field);
  std::int64_t v = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::ParseError, at_line(line) + "'" + std::string(field) + "' is not an integer");
  }
  if (v < 0) {
    throw Error(ErrorKind::ParseError, at_line(line) + "negative vote count");
  }
  return v;
}

}  // namespace

std::vector<ElectionRecord> parse_csv(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  std::vector<ElectionRecord> out;

  while (std::getline(in, raw)) {
    ++line;
    auto text = trim(raw);
    if (line == 1 && text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != kHeader) {
        throw Error(ErrorKind::ParseError, at_line(line) + "expected header '" + std::string(kHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      auto comma = text.find(',', start);
      fields.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) {
      throw Error(ErrorKind::ParseError, at_line(line) + "expected 3 fields, got " + std::to_string(fields.size()));
    }
    ElectionRecord r{std::string(trim(fields[0])), parse_votes(fields[1], line), parse_votes(fields[2], line)};
    if (r.district_id.empty()) {
      throw Error(ErrorKind::ParseError, at_line(line) + "empty district id");
    }
    if (r.votes_cutter + r.votes_chooser == 0) {
      throw Error(ErrorKind::ParseError, at_line(line) + "district '" + r.district_id + "' has no votes");
    }
    out.push_back(std::move(r));
  }
  if (out.empty()) {
    throw Error(ErrorKind::EmptyFile, header_seen ? "no district rows" : "empty input");
  }
  return out;
}

std::vector<ElectionRecord> load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::InvalidArgs, "cannot open '" + path.string() + "'");
  }
  return parse_csv(in);
}

ShareProfile to_share_profile(const std::vector<ElectionRecord>& records) {
  std::vector<Ratio> shares;
  shares.reserve(records.size());
  for (const auto& r : records) {
    shares.emplace_back(r.votes_chooser, r.votes_cutter + r.votes_chooser);
  }
  return ShareProfile(std::move(shares));
}

Ratio statewide_chooser_share(const std::vector<ElectionRecord>& records) {
  BigInt chooser = 0;
  BigInt total = 0;
  for (const auto& r : records) {
    chooser += r.votes_chooser;
    total += r.votes_chooser + r.votes_cutter;
  }
  return Ratio(chooser, total);
}

namespace {

template <typename Profile>
AnalysisReport analyze_impl(const Profile& profile, const ShareProfile& shares, std::optional<Ratio> vote_share,
                            const AnalysisOptions& options) {
  AnalysisReport r;
  const auto g = districting_function(shares);
  const auto D = static_cast<std::int64_t>(shares.size());

  r.district_count = shares.size();
  r.shares.assign(shares.shares().begin(), shares.shares().end());
  r.district_mean_share = integral_g(g);
  r.vote_share = vote_share.value_or(r.district_mean_share);
  r.divergence_threshold = options.divergence_threshold;
  const Ratio gap = r.vote_share - r.district_mean_share;
  r.turnout_divergence = (gap < Ratio(0) ? -gap : gap) > options.divergence_threshold;

  r.breakpoints.assign(g.breakpoints().begin(), g.breakpoints().end());
  r.levels.assign(g.levels().begin(), g.levels().end());

  r.best_response = best_response(profile);
  r.seats_at_half = r.best_response.cells.front().chooser_seats;
  r.delta = r.best_response.value - r.seats_at_half;
  r.equalizing = std::all_of(r.best_response.cells.begin(), r.best_response.cells.end(),
                             [&](const Cell& c) { return c.chooser_seats == r.best_response.value; });
  r.symmetric = check_symmetry(g, r.district_mean_share);

  const Ratio step(1, 2 * D);
  r.prediction_chooser = Ratio(D) * round_up_to(r.district_mean_share, step);
  r.prediction_cutter = Ratio(D) * round_down_to(Ratio(1) - r.district_mean_share, step);
  return r;
}

}  // namespace

AnalysisReport analyze(const ShareProfile& profile, std::optional<Ratio> vote_share, const AnalysisOptions& options) {
  return analyze_impl(profile, profile, std::move(vote_share), options);
}

AnalysisReport analyze(const Districting& d, const AnalysisOptions& options) {
  auto r = analyze_impl(d, ShareProfile::from(d), d.chooser_share(), options);
  r.voters_per_district = d.voters_per_district();
  r.chooser_votes.assign(d.chooser_votes().begin(), d.chooser_votes().end());
  return r;
}

AnalysisReport analyze(const std::vector<ElectionRecord>& records, const AnalysisOptions& options) {
  return analyze(to_share_profile(records), statewide_chooser_share(records), options);
}

std::string report_to_json(const AnalysisReport& report) { return nlohmann::json(report).dump(2) + "\n"; }

AnalysisReport report_from_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text).get<AnalysisReport>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
}

bool reverify(const AnalysisReport& report) {
  const AnalysisOptions options{report.divergence_threshold};
  AnalysisReport fresh = report.voters_per_district
                             ? analyze(Districting(*report.voters_per_district, report.chooser_votes), options)
                             : analyze(ShareProfile(report.shares), report.vote_share, options);
  return fresh == report;
}

DiagramFormat parse_diagram_format(std::string_view text) {
  if (text == "json") return DiagramFormat::Json;
  if (text == "svg") return DiagramFormat::Svg;
  throw Error(ErrorKind::UnsupportedFormat, "'" + std::string(text) + "' (expected json or svg)");
}

}  // namespace cutchoose

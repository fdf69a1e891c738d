#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutchoose/analysis.hpp"
#include "cutchoose/election.hpp"
#include "cutchoose/error.hpp"
#include "cutchoose/strategies.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

using namespace cutchoose;

namespace {

const std::string kWisconsin = std::string(CUTCHOOSE_DATA_DIR) + "/wisconsin_2012_reconstruction.csv";

std::vector<ElectionRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

ErrorKind kind_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgs;
}

}  // namespace

TEST_CASE("load_csv on the Wisconsin reconstruction") {
  const auto records = load_csv(kWisconsin);
  REQUIRE(records.size() == 8);
  CHECK(records.front().district_id == "WI-1");
  const double share = statewide_chooser_share(records).to_double();
  CHECK(std::abs(share - 0.5042) < 0.00005);

  const auto profile = to_share_profile(records);
  const auto shares = profile.shares();
  // Second most cutter-leaning district: just above 0.37.
  CHECK(shares[6] > Ratio(37, 100));
  CHECK(shares[6] < Ratio(38, 100));
  CHECK(shares[7] < Ratio(37, 100));
}

TEST_CASE("csv errors") {
  CHECK(kind_of("") == ErrorKind::EmptyFile);
  CHECK(kind_of("district,votes_a,votes_b\n") == ErrorKind::EmptyFile);
  CHECK(kind_of("district,votes_a,votes_b\nX,0,0\n") == ErrorKind::ParseError);
  CHECK(kind_of("district,a,b\nX,1,1\n") == ErrorKind::ParseError);
  CHECK(kind_of("district,votes_a,votes_b\nX,1\n") == ErrorKind::ParseError);
  CHECK(kind_of("district,votes_a,votes_b\nX,1,two\n") == ErrorKind::ParseError);
  CHECK(kind_of("district,votes_a,votes_b\nX,-1,3\n") == ErrorKind::ParseError);
  try {
    parse("district,votes_a,votes_b\nX,1,1\nY,0,0\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), Error);
}

TEST_CASE("csv tolerates CRLF and blank lines") {
  const auto r = parse("district,votes_a,votes_b\r\n\r\nA,10,0\r\nB,0,10\r\n");
  REQUIRE(r.size() == 2);
  CHECK(statewide_chooser_share(r) == Ratio(1, 2));
  CHECK(integral_g(districting_function(to_share_profile(r))) == Ratio(1, 2));
}

TEST_CASE("unequal turnout is flagged") {
  // 100 voters split 50/50, 300 voters all cutter: district mean 1/4, true share 1/8.
  const auto records = parse("district,votes_a,votes_b\nsmall,50,50\nbig,300,0\n");
  const auto report = analyze(records);
  CHECK(report.district_mean_share == Ratio(1, 4));
  CHECK(report.vote_share == Ratio(1, 8));
  CHECK(report.turnout_divergence);

  const auto equal = analyze(parse("district,votes_a,votes_b\na,10,0\nb,0,10\n"));
  CHECK(equal.vote_share == equal.district_mean_share);
  CHECK_FALSE(equal.turnout_divergence);
}

TEST_CASE("share profile is permutation invariant over rows") {
  auto records = load_csv(kWisconsin);
  const auto reference = to_share_profile(records);
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    CHECK(to_share_profile(records) == reference);
    CHECK(analyze(records) == analyze(load_csv(kWisconsin)));
  }
}

TEST_CASE("Wisconsin narrative") {
  const auto records = load_csv(kWisconsin);
  const auto report = analyze(records);
  CHECK(report.district_count == 8);
  CHECK(report.seats_at_half == Ratio(3));
  CHECK(report.best_response.value == Ratio(5));
  CHECK(report.delta == Ratio(2));
  CHECK_FALSE(report.symmetric);
  CHECK_FALSE(report.equalizing);

  const auto profile = to_share_profile(records);
  const auto g = districting_function(profile);
  CHECK(std::get<Ratio>(eval_g(g, Ratio(1, 2))) == Ratio(3, 8));
  CHECK(std::get<Ratio>(eval_g(g, Ratio(63, 100))) == Ratio(3, 8));
  CHECK(Ratio(1) - std::get<Ratio>(eval_g(g, Ratio(37, 100))) == Ratio(1, 8));

  const auto at_63 = expected_seats(profile, Threshold::share(Ratio(63, 100)));
  CHECK(at_63.chooser == Ratio(5));
  CHECK(at_63.cutter == Ratio(3));
  const bool covers_63 = std::any_of(report.best_response.optimal_intervals.begin(),
                                     report.best_response.optimal_intervals.end(), [](const Interval& iv) {
                                       return iv.lo <= Ratio(63, 100) && Ratio(63, 100) < iv.hi;
                                     });
  CHECK(covers_63);
}

TEST_CASE("analyze an equilibrium districting") {
  const auto report = analyze(cut_optimal(4, 8, 12));
  CHECK(report.symmetric);
  CHECK(report.equalizing);
  CHECK(report.delta == Ratio(0));
  CHECK(report.best_response.value == Ratio(3, 2));
  CHECK(report.prediction_chooser == Ratio(3, 2));
  CHECK(report.prediction_cutter == Ratio(5, 2));
  CHECK(report.voters_per_district == 8);
}

TEST_CASE("single unanimous chooser district") {
  const auto report = analyze(ShareProfile({Ratio(1)}));
  CHECK(report.levels == std::vector<Ratio>{Ratio(1), Ratio(0)});
  for (const auto& c : report.best_response.cells) CHECK(c.chooser_seats == Ratio(1));
  CHECK(report.seats_at_half == Ratio(1));
}

TEST_CASE("report JSON round trip re-verifies") {
  for (const auto& report : {analyze(load_csv(kWisconsin)), analyze(cut_optimal(4, 8, 12)),
                             analyze(Districting(4, {4, 1, 1}))}) {
    const auto text = report_to_json(report);
    CHECK(text.find('.') == std::string::npos);  // exact rationals only, no decimals
    const auto back = report_from_json(text);
    CHECK(back == report);
    CHECK(reverify(back));
  }
  auto tampered = analyze(Districting(4, {4, 1, 1}));
  tampered.delta = Ratio(0);
  CHECK_FALSE(reverify(tampered));

  CHECK_THROWS_AS(report_from_json("{}"), Error);
  CHECK_THROWS_AS(report_from_json("not json"), Error);
  auto j = nlohmann::json::parse(report_to_json(analyze(Districting(4, {2, 2}))));
  j["vote_share"] = 0.5;
  CHECK_THROWS_AS(report_from_json(j.dump()), Error);
}

TEST_CASE("svg staircase matches the districting function") {
  const auto report = analyze(load_csv(kWisconsin));
  const auto svg = emit_diagram(report, DiagramFormat::Svg, {.pixels = 320});
  CHECK(svg == emit_diagram(report, DiagramFormat::Svg, {.pixels = 320}));
  CHECK(svg.find("width=\"320\"") != std::string::npos);
  CHECK(svg.find("viewBox=\"0 0 1 1\"") != std::string::npos);

  const std::regex points_re("id=\"staircase\"[^>]*points=\"([^\"]*)\"");
  std::smatch match;
  REQUIRE(std::regex_search(svg, match, points_re));
  std::istringstream pts(match[1].str());
  std::string pair;
  std::size_t vertices = 0;
  while (pts >> pair) {
    const auto comma = pair.find(',');
    const double x = std::stod(pair.substr(0, comma));
    const double y = std::stod(pair.substr(comma + 1));
    const bool on_break = std::any_of(report.breakpoints.begin(), report.breakpoints.end(),
                                      [&](const Ratio& b) { return std::abs(b.to_double() - x) < 1e-6; });
    const bool on_level = std::any_of(report.levels.begin(), report.levels.end(),
                                      [&](const Ratio& l) { return std::abs(l.to_double() - y) < 1e-6; });
    CHECK((on_break || x == 0.0 || x == 1.0));
    CHECK(on_level);
    ++vertices;
  }
  CHECK(vertices == 2 * report.breakpoints.size() + 2);

  // Shading at m = best response: 3 chooser, 4 randomized, 1 cutter.
  auto count = [&](const std::string& s) {
    std::size_t c = 0;
    for (auto pos = svg.find(s); pos != std::string::npos; pos = svg.find(s, pos + 1)) ++c;
    return c;
  };
  CHECK(count("data-status=\"ChooserWin\"") == 3);
  CHECK(count("data-status=\"Randomized\"") == 4);
  CHECK(count("data-status=\"CutterWin\"") == 1);

  CHECK(emit_diagram(report, DiagramFormat::Json) == report_to_json(report));
  CHECK(parse_diagram_format("svg") == DiagramFormat::Svg);
  CHECK_THROWS_AS(parse_diagram_format("png"), Error);
}

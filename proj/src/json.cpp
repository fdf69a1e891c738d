#include "cutchoose/json.hpp"

#include "cutchoose/error.hpp"

namespace cutchoose {

using nlohmann::json;

void to_json(json& j, const Ratio& r) { j = r.str(); }

void from_json(const json& j, Ratio& r) {
  if (!j.is_string()) {
    throw Error(ErrorKind::ParseError, "rationals are encoded as \"p/q\" strings");
  }
  r = Ratio::parse(j.get<std::string>());
}

void to_json(json& j, const Interval& i) { j = json{{"lo", i.lo}, {"hi", i.hi}}; }

void from_json(const json& j, Interval& i) {
  j.at("lo").get_to(i.lo);
  j.at("hi").get_to(i.hi);
}

void to_json(json& j, const Cell& c) {
  j = json{{"lo", c.range.lo}, {"hi", c.range.hi}, {"chooser_seats", c.chooser_seats}};
}

void from_json(const json& j, Cell& c) {
  j.at("lo").get_to(c.range.lo);
  j.at("hi").get_to(c.range.hi);
  j.at("chooser_seats").get_to(c.chooser_seats);
}

void to_json(json& j, const BestResponse& b) {
  j = json{{"value", b.value},
           {"representative", b.representative()},
           {"contains_half", b.contains_half},
           {"optimal_intervals", b.optimal_intervals},
           {"cells", b.cells}};
}

void from_json(const json& j, BestResponse& b) {
  j.at("value").get_to(b.value);
  j.at("contains_half").get_to(b.contains_half);
  j.at("optimal_intervals").get_to(b.optimal_intervals);
  j.at("cells").get_to(b.cells);
  if (b.optimal_intervals.empty() || b.cells.empty()) {
    throw Error(ErrorKind::ParseError, "best response without cells");
  }
}

void to_json(json& j, const Districting& d) {
  j = json{{"n", d.voters_per_district()},
           {"districts", std::vector<std::int64_t>(d.chooser_votes().begin(), d.chooser_votes().end())},
           {"chooser_share", d.chooser_share()}};
}

void to_json(json& j, const DistrictingFunction& f) {
  j = json{{"breakpoints", std::vector<Ratio>(f.breakpoints().begin(), f.breakpoints().end())},
           {"levels", std::vector<Ratio>(f.levels().begin(), f.levels().end())}};
}

void to_json(json& j, const ElectionOutcome& o) {
  std::vector<std::string> statuses;
  for (auto s : o.statuses) statuses.emplace_back(to_string(s));
  j = json{{"statuses", statuses},
           {"expected_chooser_seats", o.expected_chooser_seats},
           {"expected_cutter_seats", o.expected_cutter_seats},
           {"mode", to_string(o.mode)}};
  if (o.seed) {
    j["seed"] = *o.seed;
    j["realized_chooser_seats"] = *o.realized_chooser_seats;
    j["realized_cutter_seats"] = static_cast<std::int64_t>(o.statuses.size()) - *o.realized_chooser_seats;
    std::vector<std::string> winners;
    for (auto w : *o.winners) winners.emplace_back(w == Winner::Chooser ? "chooser" : "cutter");
    j["winners"] = winners;
  } else {
    j["seed"] = nullptr;
  }
}

void to_json(json& j, const MinimaxResult& r) {
  json optimal = json::array();
  for (std::size_t i = 0; i < r.optimal_districtings.size(); ++i) {
    const auto votes = r.optimal_districtings[i].chooser_votes();
    optimal.push_back(json{{"districts", std::vector<std::int64_t>(votes.begin(), votes.end())},
                           {"best_response", r.responses[i]}});
  }
  j = json{{"D", r.districts},
           {"n", r.n},
           {"b_total", r.chooser_total},
           {"cap", r.cap.limit},
           {"value", r.value},
           {"cutter_value", r.cutter_value},
           {"prediction", r.prediction},
           {"cutter_prediction", r.cutter_prediction},
           {"matches", r.matches_prediction},
           {"half_is_optimal_somewhere", r.half_is_optimal_somewhere},
           {"districtings_searched", r.districtings_searched},
           {"optimal_districtings", optimal}};
}

void to_json(json& j, const VerifyRow& r) {
  j = json{{"D", r.districts},
           {"n", r.n},
           {"b_total", r.chooser_total},
           {"value", r.value},
           {"prediction", r.prediction},
           {"cutter_value", r.cutter_value},
           {"cutter_prediction", r.cutter_prediction},
           {"matches", r.matches_prediction},
           {"half_is_optimal_somewhere", r.half_is_optimal_somewhere},
           {"optimal_count", r.optimal_count},
           {"asserted", r.asserted},
           {"passes", r.passes()}};
  if (r.construction_value) {
    j["construction_value"] = *r.construction_value;
    j["construction_contains_half"] = *r.construction_contains_half;
  } else {
    j["construction_value"] = nullptr;
    j["construction_contains_half"] = nullptr;
  }
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"asserted", r.asserted}, {"failed", r.failed}, {"ok", r.ok()}, {"rows", r.rows}};
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"district_count", r.district_count},
           {"shares", r.shares},
           {"voters_per_district", r.voters_per_district ? json(*r.voters_per_district) : json(nullptr)},
           {"chooser_votes", r.chooser_votes},
           {"vote_share", r.vote_share},
           {"district_mean_share", r.district_mean_share},
           {"turnout_divergence", r.turnout_divergence},
           {"divergence_threshold", r.divergence_threshold},
           {"districting_function", json{{"breakpoints", r.breakpoints}, {"levels", r.levels}}},
           {"seats_at_half", r.seats_at_half},
           {"best_response", r.best_response},
           {"exploitability_delta", r.delta},
           {"symmetric", r.symmetric},
           {"equalizing", r.equalizing},
           {"prediction", json{{"chooser", r.prediction_chooser}, {"cutter", r.prediction_cutter}}}};
}

void from_json(const json& j, AnalysisReport& r) {
  j.at("district_count").get_to(r.district_count);
  j.at("shares").get_to(r.shares);
  const auto& n = j.at("voters_per_district");
  r.voters_per_district = n.is_null() ? std::nullopt : std::optional<std::int64_t>(n.get<std::int64_t>());
  j.at("chooser_votes").get_to(r.chooser_votes);
  j.at("vote_share").get_to(r.vote_share);
  j.at("district_mean_share").get_to(r.district_mean_share);
  j.at("turnout_divergence").get_to(r.turnout_divergence);
  j.at("divergence_threshold").get_to(r.divergence_threshold);
  j.at("districting_function").at("breakpoints").get_to(r.breakpoints);
  j.at("districting_function").at("levels").get_to(r.levels);
  j.at("seats_at_half").get_to(r.seats_at_half);
  j.at("best_response").get_to(r.best_response);
  j.at("exploitability_delta").get_to(r.delta);
  j.at("symmetric").get_to(r.symmetric);
  j.at("equalizing").get_to(r.equalizing);
  j.at("prediction").at("chooser").get_to(r.prediction_chooser);
  j.at("prediction").at("cutter").get_to(r.prediction_cutter);
}

}  // namespace cutchoose

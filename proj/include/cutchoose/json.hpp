#pragma once

// nlohmann::json bindings. Ratios are always written as "p/q" strings.

#include "cutchoose/analysis.hpp"
#include "cutchoose/districting.hpp"
#include "cutchoose/election.hpp"
#include "cutchoose/ratio.hpp"
#include "cutchoose/solver.hpp"
#include "cutchoose/strategies.hpp"

#include <json.hpp>

namespace cutchoose {

void to_json(nlohmann::json& j, const Ratio& r);
void from_json(const nlohmann::json& j, Ratio& r);

void to_json(nlohmann::json& j, const Interval& i);
void from_json(const nlohmann::json& j, Interval& i);

void to_json(nlohmann::json& j, const Cell& c);
void from_json(const nlohmann::json& j, Cell& c);

void to_json(nlohmann::json& j, const BestResponse& b);
void from_json(const nlohmann::json& j, BestResponse& b);

void to_json(nlohmann::json& j, const Districting& d);
void to_json(nlohmann::json& j, const DistrictingFunction& f);
void to_json(nlohmann::json& j, const ElectionOutcome& o);
void to_json(nlohmann::json& j, const MinimaxResult& r);
void to_json(nlohmann::json& j, const VerifyRow& r);
void to_json(nlohmann::json& j, const VerifyReport& r);

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

}  // namespace cutchoose

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "subsums/analysis.hpp"
#include "subsums/classify.hpp"
#include "subsums/cover.hpp"
#include "subsums/sumset.hpp"

namespace subsums {

// JSON reports use ordered_json so field order is stable for golden tests.
using Json = nlohmann::ordered_json;

Json to_json(const Classification& c);
Json to_json(const SumsetInfo& s);
Json to_json(const CoverResult& c);
Json to_json(const KakeyaScanSummary& s);
Json to_json(const std::vector<MeasurePoint>& m);
Json to_json(const DimensionEstimate& d);
Json to_json(const SandwichReport& r);

std::string to_csv(const CoverResult& c);              // lo,hi rows
std::string to_csv(const std::vector<MeasurePoint>&);  // depth,upper_bound
std::string to_csv(const DimensionEstimate& d);        // depth,eps,boxes + slope line
std::string to_csv(const SandwichReport& r);           // n,chain

}  // namespace subsums

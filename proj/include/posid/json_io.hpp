// Copyright 2026 The POSID Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON encodings of results, gold annotations and metrics.

#ifndef POSID_JSON_IO_HPP_
#define POSID_JSON_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posid/eval.hpp"
#include "posid/posid.hpp"

namespace posid {

// {"id", "properties": [{"name", "values"}], "candidates", "provider_used"}
nlohmann::ordered_json result_to_json(const std::string& id, const PosidResult& result);

nlohmann::ordered_json records_to_json(const std::vector<PropertyRecord>& records);
// Throws ParseError naming `where` and the offending field.
std::vector<PropertyRecord> records_from_json(const nlohmann::json& j, const std::string& where);

// One line of extract output; only "id" and "properties" are read.
Prediction parse_prediction_line(std::string_view line, const std::string& where);
GoldAnnotation parse_gold_line(std::string_view line, const std::string& where);

// {"overall": {...}, "per_property": {name: {...}}}, each with precision,
// recall, f1, tp, fp, fn.
nlohmann::ordered_json metrics_to_json(const MetricsReport& report);

nlohmann::ordered_json tagged_to_json(const std::vector<TaggedToken>& tokens);

}  // namespace posid

#endif  // POSID_JSON_IO_HPP_

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


// Attr-only and Attr-value scoring of extracted properties.

#ifndef POSID_EVAL_HPP_
#define POSID_EVAL_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "posid/posid.hpp"

namespace posid {

struct GoldAnnotation {
  std::string document_id;
  std::vector<PropertyRecord> properties;
};

enum class MatchMode { kAttrOnly, kAttrValue };

struct Counts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // Zero whenever the denominator is zero.
  double precision() const;
  double recall() const;
  double f1() const;

  Counts& operator+=(const Counts& o);
  bool operator==(const Counts&) const = default;
};

struct MetricsReport {
  Counts overall;
  // Keyed by "gender", "race", "height" or "clothes".
  std::map<std::string, Counts> per_property;

  MetricsReport& operator+=(const MetricsReport& o);
};

// Lowercase, whitespace collapsed, one trailing "s" dropped.
std::string normalize_name(std::string_view name);
// Lowercase, whitespace collapsed.
std::string normalize_value(std::string_view value);
// "gender", "race", "height" stay; every other name is "clothes".
std::string property_group(std::string_view name);

// Greedy one-to-one alignment in prediction order: each prediction takes the
// first unmatched gold record that it matches.
MetricsReport attr_only(const std::vector<PropertyRecord>& pred,
                        const std::vector<PropertyRecord>& gold);
MetricsReport attr_value(const std::vector<PropertyRecord>& pred,
                         const std::vector<PropertyRecord>& gold);
MetricsReport score_document(const std::vector<PropertyRecord>& pred,
                             const std::vector<PropertyRecord>& gold, MatchMode mode);

struct Prediction {
  std::string document_id;
  std::vector<PropertyRecord> properties;
};

// Micro-average over documents. A prediction without gold throws
// InvalidArgument; gold documents without a prediction count as all-FN.
MetricsReport evaluate_corpus(const std::vector<Prediction>& preds,
                              const std::vector<GoldAnnotation>& golds, MatchMode mode);

// JSON lines {"document_id", "properties": [{"name", "values"}]}.
std::vector<GoldAnnotation> load_gold(const std::filesystem::path& path);

}  // namespace posid

#endif  // POSID_EVAL_HPP_

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


// Property extraction: finite-valued properties by lexicon and pattern, and
// clothes names with their descriptors by a single left-to-right scan over
// part-of-speech tags.

#ifndef POSID_POSID_HPP_
#define POSID_POSID_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "posid/candidates.hpp"
#include "posid/tagger.hpp"
#include "posid/text.hpp"
#include "posid/wordnet.hpp"

namespace posid {

struct PropertyRecord {
  std::string name;
  std::vector<std::string> values;

  bool operator==(const PropertyRecord&) const = default;
};

enum class FiniteProperty { kGender, kRace, kHeight };

// "gender", "race", "height".
std::string_view finite_property_name(FiniteProperty p);

struct Lexicons {
  std::vector<std::string> gender_terms;
  std::vector<std::string> race_terms;
  // Race terms that are also colors: they count as race only before a
  // gender or person word, or when capitalized past the first token.
  std::vector<std::string> color_race_terms;
  std::vector<std::string> person_terms;
  // ECMAScript, case-insensitive. The value is the first non-empty capture
  // group, or the whole match when there is none.
  std::string height_pattern;
  // Matched as colors regardless of WordNet.
  std::vector<std::string> color_overrides;
  // Clothes descriptions follow these words...
  std::vector<std::string> wear_keywords;
  // ...or, failing that and any finite-valued match, these.
  std::vector<std::string> possession_keywords;

  static Lexicons Defaults();
  // Throws ConfigError for a pattern that does not compile.
  void validate() const;
};

// A matched value and its byte span in the sentence text.
struct FiniteMatch {
  std::string value;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Case-insensitive whole-word matches in text order, longest term first.
std::vector<FiniteMatch> find_finite(std::string_view text, FiniteProperty p,
                                     const Lexicons& lex);
std::vector<std::string> re_prop_values(const Sentence& s, FiniteProperty p,
                                        const Lexicons& lex);

// Token index where the clothes description starts: after the first wear
// keyword; else after the last finite-valued match; else after the first
// possession keyword; else 0.
std::size_t clothes_span_start(const Sentence& s, const std::vector<FiniteMatch>& finite,
                               const Lexicons& lex);
// The same span as text.
std::string clothes_span(const Sentence& s, const std::vector<FiniteMatch>& finite,
                         const Lexicons& lex);

struct ColorRef {
  SynsetIndex synset = 0;
  double threshold = 0.75;
  std::set<std::string> overrides;

  // First noun synset of "color".
  static ColorRef Defaults(const WordnetGraph& g, const Lexicons& lex);
};

bool match_color(const WordnetGraph& g, const ColorRef& cref, std::string_view word);

struct ScanState {
  std::vector<std::size_t> name_indices;
  std::vector<std::string> descriptors;
  std::vector<PropertyRecord> results;
};

// Name for the noun at `head`: the participle/adverb/verb tokens recorded in
// name_indices that run contiguously up to the head, then the head itself.
std::string prop_name(const ScanState& state, const std::vector<TaggedToken>& tags,
                      std::size_t head, const TagSets& sets);

// Scans tagged span tokens. `prev_tag` is the tag just before the span, if
// the span does not start the sentence.
std::vector<PropertyRecord> scan_clothes(const std::vector<TaggedToken>& tags,
                                         std::optional<PosTag> prev_tag,
                                         const WordnetGraph& g, const ColorRef& cref,
                                         const TagSets& sets);

struct PosidDeps {
  const Tagger* tagger = nullptr;
  const WordnetGraph* wordnet = nullptr;
  const ProviderSet* providers = nullptr;
  Lexicons lexicons = Lexicons::Defaults();
  ColorRef color;
  TagSets tag_sets = TagSets::Defaults();
  ExtractorConfig extractor = ExtractorConfig::Defaults();
};

// Records for one candidate sentence: gender, race, height, then clothes.
std::vector<PropertyRecord> posid_sentence(const Sentence& s, const PosidDeps& deps);

struct PosidResult {
  std::vector<PropertyRecord> records;
  CandidateSet candidates;
};

PosidResult posid(const Document& doc, const PosidDeps& deps);

}  // namespace posid

#endif  // POSID_POSID_HPP_

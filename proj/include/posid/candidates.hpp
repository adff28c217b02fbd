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


// Candidate sentence retrieval: sentences whose similarity to any key-phrase
// clears a threshold, with a stacked regex-first fallback chain.

#ifndef POSID_CANDIDATES_HPP_
#define POSID_CANDIDATES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "posid/similarity.hpp"
#include "posid/text.hpp"

namespace posid {

struct ChainElement {
  ProviderKind provider = ProviderKind::kRegex;
  // Ignored for the regex provider.
  double threshold = 0.5;
  // Overrides ExtractorConfig::key_phrases for this element only.
  std::optional<std::vector<KeyPhrase>> key_phrases;
};

// Default threshold for each provider kind: 0.5, 0.9 and 0.85 for the
// embedding, WordNet and NLI providers.
double default_threshold(ProviderKind kind);

struct ExtractorConfig {
  std::vector<KeyPhrase> key_phrases;
  std::vector<ChainElement> chain;

  // {clothes, wear, shirts, pants}; regex, then WordNet at 0.9.
  static ExtractorConfig Defaults();
  // Throws ConfigError for an empty chain or a threshold outside (0, 1].
  void validate() const;
};

struct CandidateSet {
  std::vector<Sentence> sentences;  // document order
  ProviderKind provider_used = ProviderKind::kRegex;

  std::vector<std::size_t> indices() const;
};

// Providers looked up by kind while running a chain.
class ProviderSet {
 public:
  void add(std::shared_ptr<const SimilarityProvider> provider);
  // Throws ConfigError when no provider of that kind was added.
  const SimilarityProvider& get(ProviderKind kind) const;
  bool has(ProviderKind kind) const { return providers_.count(kind) > 0; }

 private:
  std::map<ProviderKind, std::shared_ptr<const SimilarityProvider>> providers_;
};

CandidateSet extract_re(const Document& doc, const std::vector<KeyPhrase>& q_set);

// Sentences whose best score over `q_set` is strictly above `theta`.
CandidateSet extract_semantic(const Document& doc, const std::vector<KeyPhrase>& q_set,
                              const SimilarityProvider& provider, double theta);

// First non-empty result along the chain; an all-empty run reports the last
// element's provider.
CandidateSet extract_stacked(const Document& doc, const ExtractorConfig& config,
                             const ProviderSet& providers);

}  // namespace posid

#endif  // POSID_CANDIDATES_HPP_

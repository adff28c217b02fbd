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


// SIM(q, s) backends: substring regex, embedding cosine, WordNet Wu-Palmer
// and an external NLI classifier, all behind SimilarityProvider.

#ifndef POSID_SIMILARITY_HPP_
#define POSID_SIMILARITY_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posid/embedding.hpp"
#include "posid/text.hpp"
#include "posid/wordnet.hpp"

namespace posid {

class NliProviderHandle;

// A probe phrase such as "clothes" or "wear". Never blank.
class KeyPhrase {
 public:
  // Throws InvalidArgument when `text` is empty after trimming.
  explicit KeyPhrase(std::string_view text);

  const std::string& text() const { return text_; }
  bool operator==(const KeyPhrase&) const = default;

 private:
  std::string text_;
};

std::vector<KeyPhrase> make_key_phrases(const std::vector<std::string>& texts);

enum class ProviderKind { kRegex, kEmbedding, kWordnet, kNli };

// "re", "embedding", "wordnet", "nli".
std::string_view provider_kind_name(ProviderKind kind);
std::optional<ProviderKind> parse_provider_kind(std::string_view name);

// 1 iff the lowercased key-phrase is a substring of the lowercased text.
double regex_sim(const KeyPhrase& q, std::string_view sentence_text);
double regex_sim(const KeyPhrase& q, const Sentence& s);

// Max over in-vocabulary tokens of cos(mean(q), w), clamped to [0, 1].
double embedding_sim(const EmbeddingTable& table, const KeyPhrase& q,
                     std::span<const std::string> tokens);
double embedding_sim(const EmbeddingTable& table, const KeyPhrase& q, const Sentence& s);

// Noun synsets for a key-phrase: the whole phrase first, else the union over
// its tokens. Throws InvalidArgument("key-phrase has no noun synset").
std::vector<SynsetIndex> key_phrase_synsets(const WordnetGraph& g, const KeyPhrase& q);

// Max Wu-Palmer score over (key-phrase synset, token synset) pairs.
double wordnet_sim(const WordnetGraph& g, const KeyPhrase& q,
                   std::span<const std::string> tokens);
double wordnet_sim(const WordnetGraph& g, const KeyPhrase& q, const Sentence& s);

double nli_sim(NliProviderHandle& h, const KeyPhrase& q, const Sentence& s);

class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;
  virtual ProviderKind kind() const = 0;
  // Score in [0, 1].
  virtual double score(const KeyPhrase& q, const Sentence& s) const = 0;
};

class RegexProvider : public SimilarityProvider {
 public:
  ProviderKind kind() const override { return ProviderKind::kRegex; }
  double score(const KeyPhrase& q, const Sentence& s) const override;
};

class EmbeddingProvider : public SimilarityProvider {
 public:
  explicit EmbeddingProvider(std::shared_ptr<const EmbeddingTable> table);
  ProviderKind kind() const override { return ProviderKind::kEmbedding; }
  double score(const KeyPhrase& q, const Sentence& s) const override;

 private:
  std::shared_ptr<const EmbeddingTable> table_;
};

class WordnetProvider : public SimilarityProvider {
 public:
  explicit WordnetProvider(std::shared_ptr<const WordnetGraph> graph);
  ProviderKind kind() const override { return ProviderKind::kWordnet; }
  double score(const KeyPhrase& q, const Sentence& s) const override;

 private:
  std::shared_ptr<const WordnetGraph> graph_;
};

class NliProvider : public SimilarityProvider {
 public:
  explicit NliProvider(std::shared_ptr<NliProviderHandle> handle);
  ProviderKind kind() const override { return ProviderKind::kNli; }
  double score(const KeyPhrase& q, const Sentence& s) const override;

 private:
  std::shared_ptr<NliProviderHandle> handle_;
};

}  // namespace posid

#endif  // POSID_SIMILARITY_HPP_

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

// Averaged perceptron part-of-speech tagger.

#ifndef POSID_TAGGER_HPP_
#define POSID_TAGGER_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posid/text.hpp"

namespace posid {

struct TaggedCorpus {
  std::vector<std::vector<std::pair<std::string, PosTag>>> sentences;

  std::size_t token_count() const;
};

// One sentence per line, "word/TAG" items separated by spaces. The tag is
// everything after the last '/'; for ambiguous "A|B" tags the first wins.
TaggedCorpus read_tagged_corpus(const std::filesystem::path& path);

// Anything that assigns one tag per token.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TaggedToken> tag(std::span<const std::string> tokens) const = 0;
};

struct TrainOptions {
  int epochs = 5;
  std::uint64_t seed = 0;
  // Words need this many occurrences, all with one tag, to enter seen_tags.
  int min_seen_count = 3;
};

class PerceptronModel : public Tagger {
 public:
  static constexpr int kFormatVersion = 1;

  PerceptronModel() = default;

  // Sentence order is reshuffled every epoch from `seed`. Final weights are
  // the mean of the weight vectors captured after each update.
  static PerceptronModel train(const TaggedCorpus& corpus, const TrainOptions& options);

  std::vector<TaggedToken> tag(std::span<const std::string> tokens) const override;

  void save(const std::filesystem::path& path) const;
  std::string to_json() const;
  static PerceptronModel load(const std::filesystem::path& path);
  static PerceptronModel from_json(std::string_view text);

  // Sorted by tag name; the order doubles as the tie-break.
  const std::vector<PosTag>& classes() const { return classes_; }
  const std::map<std::string, PosTag>& seen_tags() const { return seen_tags_; }
  // Weight of one (feature, tag) entry, 0 when absent.
  double weight(const std::string& feature, PosTag tag) const;
  std::size_t feature_count() const { return weights_.size(); }

 private:
  using ClassWeights = std::vector<std::pair<std::uint8_t, double>>;

  PosTag predict(const std::vector<std::string>& features) const;
  bool knows_word(const std::string& lower) const;

  std::vector<PosTag> classes_;
  std::map<std::string, PosTag> seen_tags_;
  std::unordered_map<std::string, ClassWeights> weights_;
};

// The fixed feature template: bias, suffix-3, suffix-2, lowercased word,
// previous two tags, neighbouring words and capital/digit/hyphen flags.
std::vector<std::string> tagger_features(std::span<const std::string> words, std::size_t i,
                                         std::string_view prev_tag, std::string_view prev2_tag);

// Fraction of tokens whose predicted tag equals the gold tag.
double tagging_accuracy(const Tagger& tagger, const TaggedCorpus& corpus);

}  // namespace posid

#endif  // POSID_TAGGER_HPP_

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

// WordNet noun hypernym graph and Wu-Palmer similarity.
//
// Synset ids follow the "<first lemma>.n.<sense>" convention, where the sense
// number is the synset's position in the index entry of its first lemma.
// Wu-Palmer scores reproduce the widely used NLTK formulation:
//
//   lcs    = common hypernym with the greatest shortest-path depth
//            (ties: smallest id, or `a` itself when it qualifies)
//   depth  = longest hypernym path from the root to lcs, counted in nodes
//   score  = 2*depth / ((dist(a, lcs) + depth) + (dist(b, lcs) + depth))
//
// where dist is the shortest up-then-down path length. Instance hypernyms
// (@i) count as hypernyms.

#ifndef POSID_WORDNET_HPP_
#define POSID_WORDNET_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace posid {

using SynsetIndex = std::size_t;

struct Synset {
  std::string id;
  std::uint32_t offset = 0;
  char pos = 'n';
  std::vector<std::string> lemmas;
  std::vector<SynsetIndex> hypernyms;
};

// Input for building small graphs by hand.
struct SynsetSpec {
  std::string id;
  std::vector<std::string> lemmas;
  std::vector<std::string> hypernyms;
};

class WordnetGraph {
 public:
  // Reads data.noun and index.noun (and noun.exc when present) from `dir`.
  static WordnetGraph load(const std::filesystem::path& dir);

  // Lemma senses follow the order of `specs`.
  static WordnetGraph from_specs(const std::vector<SynsetSpec>& specs);

  std::size_t size() const { return synsets_.size(); }
  const Synset& synset(SynsetIndex i) const { return synsets_[i]; }
  std::optional<SynsetIndex> find(std::string_view id) const;
  // Throws InvalidArgument for unknown ids.
  SynsetIndex require(std::string_view id) const;

  // Noun base forms of `word` that exist in the index: the word itself, then
  // exception-list or suffix-rule forms.
  std::vector<std::string> morphy(std::string_view word) const;
  // Noun synsets of `word` in sense order, after morphological reduction.
  std::vector<SynsetIndex> synsets(std::string_view word) const;

  double wup_similarity(SynsetIndex a, SynsetIndex b) const;
  double wup_similarity(std::string_view a, std::string_view b) const;

  // Longest / shortest number of hypernym edges up to a root.
  int max_depth(SynsetIndex i) const { return max_depth_[i]; }
  int min_depth(SynsetIndex i) const { return min_depth_[i]; }
  // True when several roots exist and a virtual root joins them.
  bool has_virtual_root() const { return root_count_ > 1; }

 private:
  using Distances = std::vector<std::pair<SynsetIndex, int>>;

  void finalize();
  Distances hypernym_distances(SynsetIndex start) const;
  int path_distance(SynsetIndex a, const Distances& da, SynsetIndex b) const;

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, SynsetIndex> by_id_;
  std::unordered_map<std::string, std::vector<SynsetIndex>> lemma_index_;
  std::unordered_map<std::string, std::vector<std::string>> exceptions_;
  std::vector<int> max_depth_;
  std::vector<int> min_depth_;
  std::size_t root_count_ = 0;
};

}  // namespace posid

#endif  // POSID_WORDNET_HPP_

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


// Word-vector tables in the plain text "word v1 ... vd" format.

#ifndef POSID_EMBEDDING_HPP_
#define POSID_EMBEDDING_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace posid {

struct EmbeddingTable {
  std::size_t dimension = 0;
  std::unordered_map<std::string, std::vector<double>> vectors;

  // nullptr when `word` (lowercased) is not in the table.
  const std::vector<double>* find(std::string_view word) const;
};

// Header line "<vocab_size> <dimension>", then one row per word. With
// `max_vocab`, only the first N rows are kept (files are frequency-ordered).
// Words are lowercased; a later duplicate never replaces an earlier row.
EmbeddingTable load_embeddings(const std::filesystem::path& path,
                               std::optional<std::size_t> max_vocab = std::nullopt);
EmbeddingTable parse_embeddings(std::string_view text,
                                std::optional<std::size_t> max_vocab = std::nullopt);

// Throws InvalidArgument on a dimension mismatch or a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

}  // namespace posid

#endif  // POSID_EMBEDDING_HPP_

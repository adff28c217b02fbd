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


// Run configuration and the resources it names.
//
//   {
//     "resources": {"wordnet": DIR, "embeddings": FILE, "tagger_model": FILE,
//                   "embedding_max_vocab": N},
//     "key_phrases": ["clothes", "wear", "shirts", "pants"],
//     "chain": [{"provider": "re"}, {"provider": "wordnet", "threshold": 0.9}],
//     "nli": {"transport": "subprocess", "endpoint": "...",
//             "hypothesis_template": "This text is about {}.", "timeout_ms": 10000},
//     "lexicons": {...}, "color": {"threshold": 0.75},
//     "output": FILE, "workers": 1
//   }
//
// Relative paths resolve against the config file's directory.

#ifndef POSID_CONFIG_HPP_
#define POSID_CONFIG_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posid/candidates.hpp"
#include "posid/embedding.hpp"
#include "posid/nli.hpp"
#include "posid/posid.hpp"
#include "posid/tagger.hpp"
#include "posid/wordnet.hpp"

namespace posid {

struct ResourcePaths {
  std::filesystem::path wordnet;
  std::filesystem::path embeddings;
  std::filesystem::path tagger_model;
  std::optional<std::size_t> embedding_max_vocab;
};

struct RunConfig {
  ResourcePaths resources;
  ExtractorConfig extractor = ExtractorConfig::Defaults();
  std::optional<NliOptions> nli;
  Lexicons lexicons = Lexicons::Defaults();
  double color_threshold = 0.75;
  std::optional<std::filesystem::path> output;
  int workers = 1;
};

// Throws ConfigError naming the offending field.
RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

// "re,wordnet:0.9,embedding" -> chain; a missing threshold takes the
// provider's default.
std::vector<ChainElement> parse_provider_chain(std::string_view spec);

// Loaded resources plus providers for every kind the chain uses.
struct Runtime {
  std::shared_ptr<const WordnetGraph> wordnet;
  std::shared_ptr<const EmbeddingTable> embeddings;
  std::shared_ptr<const PerceptronModel> tagger;
  std::shared_ptr<NliProviderHandle> nli;
  ProviderSet providers;
  PosidDeps deps;

  // Throws ConfigError when a needed resource is missing or unreadable.
  // Embeddings and NLI are only set up when the chain uses them, unless
  // `all_providers` asks for every configured one.
  static std::unique_ptr<Runtime> load(const RunConfig& config, bool all_providers = false);
};

}  // namespace posid

#endif  // POSID_CONFIG_HPP_

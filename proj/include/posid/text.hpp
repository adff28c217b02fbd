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

// Text ingestion: sentence segmentation, tokenization and the part-of-speech
// vocabulary shared by the tagger and the property scanner.

#ifndef POSID_TEXT_HPP_
#define POSID_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace posid {

// Penn Treebank tags plus kNone for tokens the tagger cannot label.
enum class PosTag : std::uint8_t {
  kCC, kCD, kDT, kEX, kFW, kIN, kJJ, kJJR, kJJS, kLS, kMD,
  kNN, kNNS, kNNP, kNNPS, kPDT, kPOS, kPRP, kPRPS, kRB, kRBR, kRBS, kRP,
  kSYM, kTO, kUH, kVB, kVBD, kVBG, kVBN, kVBP, kVBZ, kWDT, kWP, kWPS, kWRB,
  kOpenQuote, kCloseQuote, kComma, kPeriod, kColon, kLeftParen, kRightParen,
  kDollar, kHash,
  kNone,
};

inline constexpr std::size_t kNumPosTags = static_cast<std::size_t>(PosTag::kNone) + 1;

// Canonical PTB spelling ("NN", "PRP$", "``", ...); kNone is "NONE".
std::string_view tag_name(PosTag tag);

// Inverse of tag_name. Also accepts the bracket forms -LRB-/-RRB- and a bare
// double quote (read as a closing quote).
std::optional<PosTag> parse_tag(std::string_view name);

// Coarse families used by the scanner.
bool is_noun(PosTag tag);       // NN NNS NNP NNPS
bool is_adjective(PosTag tag);  // JJ JJR JJS
bool is_verb(PosTag tag);       // VB VBD VBG VBN VBP VBZ

struct TaggedToken {
  std::string token;
  PosTag tag = PosTag::kNone;

  bool operator==(const TaggedToken&) const = default;
};

// Tag classes that drive the property-name scan.
struct TagSets {
  std::set<PosTag> dcp;  // determiners, conjunctions, prepositions
  std::set<PosTag> pav;  // participles, adverbs, verbs
  std::set<PosTag> pe;   // pronouns and untagged tokens
  std::set<PosTag> vdg;  // leading verbs skipped before a description

  static TagSets Defaults();
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  // Byte offset of `text` inside the owning document's raw text.
  std::size_t offset = 0;
  std::vector<std::string> tokens;
  // Byte offset of each token inside `text`.
  std::vector<std::size_t> token_begins;
};

struct Document {
  std::string id;
  std::string raw;
  std::vector<Sentence> sentences;
};

// Splits on . ! ? followed by whitespace or end of text, except after a
// short list of abbreviations (St., Ave., Mr., Mrs., Ms., Dr., Jr., Sr.).
// Sentence text is trimmed; the whitespace between sentences stays in `raw`.
std::vector<Sentence> split_sentences(std::string_view raw);

// Whitespace split, then leading/trailing punctuation (commas, terminal
// punctuation, quotes, brackets, semicolons, colons) peeled into separate
// tokens. Hyphenated words and possessive 's stay whole; the period of a
// known abbreviation stays attached.
std::vector<std::string> tokenize(std::string_view sentence_text);

// As tokenize, also reporting each token's byte offset in the input.
std::vector<std::string> tokenize(std::string_view sentence_text,
                                  std::vector<std::size_t>* begins);

Document make_document(std::string id, std::string raw);

// Plain text file -> one document named after the file stem. A .jsonl file
// -> one document per non-empty line, {"id": ..., "text": ...}.
std::vector<Document> load_documents(const std::filesystem::path& path);

// ASCII lowercase; other bytes pass through.
std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace posid

#endif  // POSID_TEXT_HPP_

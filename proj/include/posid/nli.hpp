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


// Client for an external zero-shot NLI scorer.
//
// Wire protocol, one JSON object per request and per response:
//   request  {"premise": "...", "hypothesis": "..."}
//   response {"score": 0.93}
// The subprocess transport exchanges newline-terminated objects over the
// child's stdin/stdout; the HTTP transport POSTs the request to the endpoint.

#ifndef POSID_NLI_HPP_
#define POSID_NLI_HPP_

#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

namespace posid {

enum class NliTransport { kSubprocess, kHttp };

struct NliOptions {
  NliTransport transport = NliTransport::kSubprocess;
  // Shell command line (subprocess) or URL such as http://127.0.0.1:8080/score.
  std::string endpoint;
  // Must contain exactly one "{}".
  std::string hypothesis_template = "This text is about {}.";
  std::chrono::milliseconds timeout{10000};
};

// Parses a response body; throws ProtocolError unless it is an object with a
// numeric "score" in [0, 1].
double parse_nli_response(std::string_view body);

// Requests through one handle are serialized. A subprocess that times out is
// killed and restarted on the next request.
class NliProviderHandle {
 public:
  // Throws InvalidArgument for a bad template, empty endpoint or timeout.
  explicit NliProviderHandle(NliOptions options);
  ~NliProviderHandle();
  NliProviderHandle(const NliProviderHandle&) = delete;
  NliProviderHandle& operator=(const NliProviderHandle&) = delete;

  const NliOptions& options() const { return options_; }
  std::string hypothesis_for(std::string_view key_phrase) const;

  // Throws TransportError (unreachable, timeout, child exit) or ProtocolError.
  double score(std::string_view premise, std::string_view hypothesis);

 private:
  struct Child;

  double score_subprocess(const std::string& request);
  double score_http(const std::string& request);
  void stop_child();

  NliOptions options_;
  std::mutex mu_;
  std::unique_ptr<Child> child_;
};

}  // namespace posid

#endif  // POSID_NLI_HPP_

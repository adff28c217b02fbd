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

#ifndef POSID_ERROR_HPP_
#define POSID_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace posid {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition on an argument (empty corpus, zero vector, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A resource file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Embedding row width disagrees with the header dimension.
class DimensionMismatchError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A hypernym pointer names a synset that does not exist.
class DanglingReferenceError : public ParseError {
 public:
  using ParseError::ParseError;
};

// The noun hypernym graph contains a cycle.
class CycleError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Invalid run or extractor configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// NLI provider could not be reached or timed out.
class TransportError : public Error {
 public:
  using Error::Error;
};

// NLI provider answered with something that is not a valid score.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace posid

#endif  // POSID_ERROR_HPP_

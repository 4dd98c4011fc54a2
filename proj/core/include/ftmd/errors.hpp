// Copyright 2026 The ftmd Authors
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

#ifndef FTMD_ERRORS_HPP
#define FTMD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ftmd {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph construction errors. Each message names the offending element.
class SelfLoopError : public Error {
 public:
  using Error::Error;
};
class DuplicateEdgeError : public Error {
 public:
  using Error::Error;
};
class VertexOutOfRangeError : public Error {
 public:
  using Error::Error;
};
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Exhaustive-search errors.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Cactus analysis errors.
class NotALeaflessCactusError : public Error {
 public:
  using Error::Error;
};
class SingleCycleError : public Error {
 public:
  using Error::Error;
};
class VertexNotOnCycleError : public Error {
 public:
  using Error::Error;
};
class NotAnalyzedError : public Error {
 public:
  using Error::Error;
};

// Constructive-basis errors.
class ParityMismatchError : public Error {
 public:
  using Error::Error;
};
class ConstructionInapplicableError : public Error {
 public:
  using Error::Error;
};
class ConstructionFailedError : public Error {
 public:
  using Error::Error;
};

// Instance-generation errors.
class ParameterTooSmallError : public Error {
 public:
  using Error::Error;
};
class InvalidAttachmentError : public Error {
 public:
  using Error::Error;
};

// File-format errors.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ftmd

#endif  // FTMD_ERRORS_HPP

// Copyright 2026 The zxdiff Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace zxdiff {

// Base class of every error raised by the library. `kind()` is the stable
// name used by the CLI when reporting failures.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ArityMismatch : public Error {
 public:
  explicit ArityMismatch(const std::string& what)
      : Error("ArityMismatch", what) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& reason)
      : Error("SyntaxError", "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& var)
      : Error("UnboundVariable", "unbound variable '" + var + "'"),
        var_(var) {}
  const std::string& var() const { return var_; }

 private:
  std::string var_;
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error("TooLarge", what) {}
};

class WrongArity : public Error {
 public:
  explicit WrongArity(const std::string& what) : Error("WrongArity", what) {}
};

class NotLinear : public Error {
 public:
  explicit NotLinear(const std::string& what) : Error("NotLinear", what) {}
};

class InvalidArity : public Error {
 public:
  explicit InvalidArity(const std::string& what)
      : Error("InvalidArity", what) {}
};

class NotControlledState : public Error {
 public:
  explicit NotControlledState(const std::string& what)
      : Error("NotControlledState", what) {}
};

}  // namespace zxdiff

/* Copyright 2026 The encat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ENCAT_ERRORS_HPP
#define ENCAT_ERRORS_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace encat {

struct CheckReport;

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table mentions an id that was never declared.
class MalformedReference : public Error {
 public:
  explicit MalformedReference(const std::string& what) : Error(what) {}
};

/// Two consecutive morphisms of a path do not compose.
class NonComposable : public Error {
 public:
  NonComposable(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  /// Position of the first morphism of the offending adjacent pair.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A structure table lacks an entry it is required to have.
class MissingComponent : public Error {
 public:
  explicit MissingComponent(const std::string& what) : Error(what) {}
};

/// The same id was declared twice.
class DuplicateId : public Error {
 public:
  explicit DuplicateId(const std::string& what) : Error(what) {}
};

/// Search for a unique morphism found zero or several candidates.
class WitnessError : public Error {
 public:
  WitnessError(std::size_t count, const std::string& what)
      : Error(what), count_(count) {}
  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

/// Two distinct two-sided inverses: the composition table is corrupt.
class AmbiguityError : public Error {
 public:
  explicit AmbiguityError(const std::string& what) : Error(what) {}
};

/// The operation needs closed or symmetric structure that was not supplied.
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error(what) {}
};

/// Bad builtin parameters (e.g. TROP(1), a poset without top).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// A document could not be read. `line` and `column` are 1-based positions
/// of `token` in the input text (0 when the position is unknown).
class DocumentError : public Error {
 public:
  enum class Code { kSyntax, kUnresolved, kDuplicate, kVersion, kSchema };

  DocumentError(Code code, const std::string& what, std::size_t line,
                std::size_t column, std::string token)
      : Error(what),
        code_(code),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  Code code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

/// A derived property failed on input that satisfies all axioms. This is
/// never an input defect; it means the evaluator disagrees with a theorem.
class EngineBug : public Error {
 public:
  EngineBug(const std::string& what, std::vector<CheckReport> reports);
  const std::vector<CheckReport>& reports() const noexcept { return *reports_; }

 private:
  std::shared_ptr<const std::vector<CheckReport>> reports_;
};

}  // namespace encat

#endif  // ENCAT_ERRORS_HPP

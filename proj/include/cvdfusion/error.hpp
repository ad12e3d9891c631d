#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cvdfusion {

enum class ErrorKind {
  // cvd-core
  NonFinite,
  LengthMismatch,
  NegativeRealPart,
  ModulusExceedsOne,
  SumNotUnity,
  EmptySpace,
  EmptyLabel,
  DuplicateLabel,
  EmptySourceSet,
  DuplicateName,
  SpaceMismatch,
  // fusion
  WeightLengthMismatch,
  InvalidWeights,
  TooManySourcesForExhaustive,
  BadMinSize,
  // io
  MalformedSyntax,
  SchemaViolation,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `source()` names the offending source
/// when the error was raised while building a SourceSet; `line()` is set by the
/// parsers when the position of the problem is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& source() const noexcept { return source_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  Error& with_source(std::string name) {
    source_ = std::move(name);
    return *this;
  }
  Error& with_line(std::size_t line) {
    line_ = line;
    return *this;
  }

 private:
  ErrorKind kind_;
  std::optional<std::string> source_;
  std::optional<std::size_t> line_;
};

}  // namespace cvdfusion

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cverdict {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or record. Carries the failing record index and,
/// for syntax errors, the byte offset reported by the JSON parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::optional<std::size_t> record,
             std::optional<std::size_t> byte_offset = std::nullopt)
      : Error(what), record_(record), byte_offset_(byte_offset) {}

  std::optional<std::size_t> record() const { return record_; }
  std::optional<std::size_t> byte_offset() const { return byte_offset_; }

 private:
  std::optional<std::size_t> record_;
  std::optional<std::size_t> byte_offset_;
};

enum class ProviderErrorKind { Transport, Timeout, Schema, OutOfRange, Unavailable };

const char* to_string(ProviderErrorKind kind);

/// A similarity/polarity/relation backend failed. Never swallowed by callers.
class ProviderError : public Error {
 public:
  ProviderError(ProviderErrorKind kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ProviderErrorKind kind() const { return kind_; }

 private:
  ProviderErrorKind kind_;
};

}  // namespace cverdict

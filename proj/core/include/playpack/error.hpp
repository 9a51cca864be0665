/*
 * Error types shared across the playpack library.
 *
 * Copyright 2026 Playpack Authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace playpack {

// A caller broke a documented precondition or invariant.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data; carries the file and 1-based line it came from.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, int line, const std::string& message)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
        path_(std::move(path)),
        line_(line) {}

  const std::string& path() const noexcept { return path_; }
  int line() const noexcept { return line_; }

 private:
  std::string path_;
  int line_;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace playpack

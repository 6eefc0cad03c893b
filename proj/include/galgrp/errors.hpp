#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galgrp {

/// Thrown when a group enumeration would exceed its element cap.
class CapExceededError : public std::runtime_error {
public:
  explicit CapExceededError(const std::string &what) : std::runtime_error(what) {}
};

/// Positional error from the presentation / permutation parsers.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace galgrp

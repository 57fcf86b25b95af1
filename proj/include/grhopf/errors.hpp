#pragma once

#include <stdexcept>
#include <string>

namespace grhopf {

/// Raised for malformed or inconsistent caller input: bad graph text, unknown
/// labels, invalid key literals, mismatched module contexts.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
  InputError(const std::string& what, int line, int column)
      : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

}  // namespace grhopf

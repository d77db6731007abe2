#pragma once

#include <stdexcept>
#include <string>

namespace cospanlim {

// Input text that cannot be read: malformed JSON, bad expression syntax.
// Maps to exit code 2 at the CLI boundary.
struct parse_error : std::runtime_error {
  int line = 0;
  int col = 0;

  explicit parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(line_ > 0 ? "parse error at line " + std::to_string(line_) + ", col " +
                                           std::to_string(col_) + ": " + msg
                                     : "parse error: " + msg),
        line(line_),
        col(col_) {}
};

// Well-formed input that violates a boundary or labeling contract.
// Maps to exit code 3 at the CLI boundary.
struct type_error : std::runtime_error {
  explicit type_error(const std::string& msg) : std::runtime_error("type error: " + msg) {}
};

}  // namespace cospanlim

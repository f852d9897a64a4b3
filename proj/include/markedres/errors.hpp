#pragma once

#include <stdexcept>
#include <string>

namespace markedres {

struct NotQuasiStable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct HeadNotInPommaretBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TailTermInU : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegreeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingHead : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotABasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DirectSumFails : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

}  // namespace markedres

#ifndef GRAPHVEIL_ERRORS_H_
#define GRAPHVEIL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphveil {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised while reading edge-list or kinds files. `line_no` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line_no)
      : Error(what + " at line " + std::to_string(line_no)),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class MalformedLine : public ParseError {
 public:
  explicit MalformedLine(std::size_t line_no)
      : ParseError("malformed line", line_no) {}
};

class SelfLoop : public ParseError {
 public:
  explicit SelfLoop(std::size_t line_no) : ParseError("self-loop", line_no) {}
};

class UnknownKindToken : public ParseError {
 public:
  explicit UnknownKindToken(std::size_t line_no)
      : ParseError("unknown node kind token", line_no) {}
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

// An exact search or enumeration was asked to run beyond its configured
// bound.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

// Degree-equalize target whose attachment probabilities leave [0, 1].
class InfeasibleTarget : public Error {
 public:
  using Error::Error;
};

// Degree-equalize target with n*a <= 2|E|, which leaves no room for fake
// nodes.
class DegenerateTarget : public Error {
 public:
  using Error::Error;
};

// Sidecar or seed data that contradicts the graph it is paired with.
class InconsistentData : public Error {
 public:
  using Error::Error;
};

}  // namespace graphveil

#endif  // GRAPHVEIL_ERRORS_H_

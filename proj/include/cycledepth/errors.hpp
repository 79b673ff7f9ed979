#ifndef CYCLEDEPTH_ERRORS_HPP
#define CYCLEDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cycledepth {

// Malformed input text (edge list or graph6). Carries the byte offset of the
// offending character where known; offset < 0 means "not applicable".
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long offset = -1)
      : std::runtime_error(offset >= 0 ? what + " (byte offset " + std::to_string(offset) + ")"
                                       : what),
        offset_(offset) {}
  long offset() const { return offset_; }

 private:
  long offset_;
};

// Structurally invalid data: self-loops, duplicate edges, highlights that do
// not exist in the host graph, malformed certificates.
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's documented precondition.
class precondition_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a configured exact-solver limit.
class size_limit_error : public std::runtime_error {
 public:
  size_limit_error(const std::string& solver, int n, int limit)
      : std::runtime_error(solver + ": graph has " + std::to_string(n) +
                           " vertices, exceeding the exact-solver limit " + std::to_string(limit) +
                           "; raise the limit or run bounds-only checks"),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

}  // namespace cycledepth

#endif

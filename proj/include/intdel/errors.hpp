#ifndef INTDEL_ERRORS_HPP
#define INTDEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intdel {

// Caller violated an operation's contract (bad vertex id, wrong graph class,
// missing precondition). CLI exit code 2.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input file. CLI exit code 3.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  int line_number;
};

// A guarantee the algorithm relies on failed to hold; indicates a bug or a
// corrupted upstream precondition. CLI exit code 4.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace intdel

#endif

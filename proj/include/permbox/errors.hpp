#ifndef PERMBOX_ERRORS_HPP
#define PERMBOX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permbox {

// A configured resource limit (degree, order, search budget) was exceeded.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string &what) : std::runtime_error(what) {}
};

// An operation's mathematical hypothesis fails on the supplied input.
// The message names the failing condition.
class HypothesisViolation : public std::runtime_error {
public:
  explicit HypothesisViolation(const std::string &what)
      : std::runtime_error(what) {}
};

// Expression syntax error, with a 0-based offset into the input string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) +
                           ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace permbox

#endif

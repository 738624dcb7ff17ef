#ifndef CODISC_ERRORS_HPP
#define CODISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace codisc {

// Malformed input text (code files, generator files, distance matrices,
// weight vectors). `line` is 1-based, 0 when not line-oriented.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid input that violates a required property (metric axioms,
// distance-invariance, distance-regularity, ...). The message names a witness.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a configured enumeration limit.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace codisc

#endif

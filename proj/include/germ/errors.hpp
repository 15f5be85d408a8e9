// Error taxonomy and resource guards. Exceeding a guard is a distinct,
// reportable condition -- never a wrong answer.
#ifndef GERM_ERRORS_HPP
#define GERM_ERRORS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace germ {

// Malformed textual input (polynomial grammar, weight lists, corpus lines).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Precondition violation on an otherwise well-formed value (zero germ where a
// singularity is required, variable-set mismatch, non-convenient support...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured limit was hit; the input is too large for desk scale.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematically impossible state was reached. Always a bug.
class InternalInconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Documented defaults: 10^5 pairs, 10^6 reduction steps, total degree 64.
// timeout_seconds == 0 disables the wall-clock check.
struct Limits {
  std::uint64_t max_pairs = 100'000;
  std::uint64_t max_reduction_steps = 1'000'000;
  unsigned max_degree = 64;
  unsigned timeout_seconds = 0;
};

// Per-invocation counters against a Limits. Never shared between threads.
class Guard {
 public:
  explicit Guard(const Limits& limits) : limits_(limits) {
    if (limits_.timeout_seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::seconds(limits_.timeout_seconds);
    }
  }

  const Limits& limits() const { return limits_; }

  void on_pair() {
    if (++pairs_ > limits_.max_pairs)
      throw ResourceLimitError("pair limit exceeded (" +
                               std::to_string(limits_.max_pairs) + ")");
    check_deadline();
  }

  void on_reduction_step() {
    if (++steps_ > limits_.max_reduction_steps)
      throw ResourceLimitError("reduction step limit exceeded (" +
                               std::to_string(limits_.max_reduction_steps) +
                               ")");
    // Steps can be individually expensive on degenerate inputs, so the
    // wall-clock check runs every step.
    check_deadline();
  }

  void check_degree(unsigned degree) {
    if (degree > limits_.max_degree)
      throw ResourceLimitError("total degree limit exceeded (" +
                               std::to_string(limits_.max_degree) + ")");
  }

 private:
  void check_deadline() {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw ResourceLimitError("timeout exceeded (" +
                               std::to_string(limits_.timeout_seconds) + "s)");
  }

  Limits limits_;
  std::uint64_t pairs_ = 0;
  std::uint64_t steps_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace germ

#endif

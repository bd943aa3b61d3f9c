#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

enum class ErrorKind {
  structural,        // malformed input, bad config, unknown keys
  domain,            // query outside the object's domain of validity
  indeterminate,     // classifier cannot decide for this combination
  empty_grid,        // no interior nodes
  degenerate_band,   // boundary distance below representable floor
  no_convergence,    // Newton stagnated or hit the iteration cap
  singular_system,   // linear solve failed
  out_of_hull,       // interpolation query outside the solved node set
  invariant_violation,
  exhausted,         // erosion removed every interior node
  unsupported_oracle,
  spec_violation     // input violates a stated precondition
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace poincare

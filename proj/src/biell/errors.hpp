#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace biell {

/// Thrown when an operation's stated precondition fails. `check()` names the
/// violated condition with a short stable token (e.g. "not isotropic") so
/// callers can report exactly which requirement was missed.
class precondition_error : public std::domain_error {
 public:
  precondition_error(std::string check, const std::string& what)
      : std::domain_error(what), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

/// A condition the library guarantees by construction turned out false.
/// Reaching this is a defect in the library, never a user error.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace biell

#pragma once

#include <stdexcept>
#include <string>

namespace cellres {

/// A named precondition of an operation was violated by its input.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string precondition, const std::string& detail)
      : std::invalid_argument(precondition + ": " + detail),
        precondition_(std::move(precondition)) {}

  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

}  // namespace cellres

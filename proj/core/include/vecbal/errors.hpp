#pragma once

#include <stdexcept>
#include <string>

namespace vecbal {

// Raised when a computed quantity violates an internal invariant that input
// validation cannot explain, e.g. a probability landing far outside [0, 1].
// Kept distinct from std::domain_error so callers can tell bad inputs from
// logic bugs.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vecbal

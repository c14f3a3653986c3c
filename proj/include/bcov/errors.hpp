#pragma once

#include <stdexcept>
#include <string>

namespace bcov {

/// Invalid input: out-of-range argument, unsorted data, dimension mismatch,
/// malformed rational string.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A hard work cap was hit (subset enumeration size, polynomial degree,
/// rejection-sampling budget, step cap of a simulation).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace bcov

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibstat {

/// A brute-force enumeration was asked for a size beyond its configured
/// bound. Callers should switch to a structural generator.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::size_t requested, std::size_t bound)
      : std::runtime_error(what + ": n = " + std::to_string(requested) + " exceeds bound " +
                           std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  std::size_t requested() const { return requested_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

/// Default bound for n! and Bell-number filter scans.
inline constexpr std::size_t kFilterBound = 9;

}  // namespace fibstat

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullkit {

/// A precondition of an operation does not hold for the given input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive oracle disagrees with the property a theorem guarantees.
/// Never expected in practice; the CLI maps it to exit code 3.
class TheoremViolated : public std::logic_error {
 public:
  explicit TheoremViolated(const std::string& what)
      : std::logic_error("theorem violated: " + what) {}
};

/// Bounds on exhaustive work. Scans above `max_scan_points` are refused
/// unless `force` is set; grids above `max_grid_points` are refused always.
struct ScanLimits {
  std::uint64_t max_grid_points = std::uint64_t{1} << 20;
  std::uint64_t max_scan_points = std::uint64_t{1} << 24;
  bool force = false;
  unsigned jobs = 1;

  void require_scan(long double points, const std::string& what) const;
};

}  // namespace nullkit

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace grlab {

struct ResourceLimits {
  std::size_t max_basis = 20000;
  /// Cap on the total (unweighted) degree of any basis element.
  std::uint64_t max_degree = 64;
  double time_budget_secs = 60.0;

  /// Defaults overridden by GRLAB_MAX_DEGREE, GRLAB_MAX_BASIS and
  /// GRLAB_TIME_BUDGET_SECS when set.
  static ResourceLimits from_environment();
};

/// Resource caps plus a wall-clock deadline fixed at construction. One Budget
/// covers one top-level operation.
class Budget {
 public:
  explicit Budget(ResourceLimits limits = {})
      : limits_(limits),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(limits.time_budget_secs))) {}

  const ResourceLimits& limits() const { return limits_; }

  /// Each throws ResourceCapError when its cap is exceeded.
  void check_time() const;
  void check_basis_size(std::size_t size) const;
  void check_degree(std::uint64_t degree) const;

 private:
  ResourceLimits limits_;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace grlab

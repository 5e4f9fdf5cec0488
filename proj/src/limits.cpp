#include "grlab/limits.hpp"

#include <cstdlib>
#include <string>

#include "grlab/errors.hpp"

namespace grlab {

namespace {

template <class T>
void read_env(const char* name, T& out) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  try {
    std::size_t used = 0;
    if constexpr (std::is_floating_point_v<T>) {
      out = static_cast<T>(std::stod(value, &used));
    } else {
      out = static_cast<T>(std::stoull(value, &used));
    }
    if (value[used] != '\0') throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw InvalidInputError(std::string("malformed value for ") + name + ": '" + value + "'");
  }
}

}  // namespace

ResourceLimits ResourceLimits::from_environment() {
  ResourceLimits limits;
  read_env("GRLAB_MAX_DEGREE", limits.max_degree);
  read_env("GRLAB_MAX_BASIS", limits.max_basis);
  read_env("GRLAB_TIME_BUDGET_SECS", limits.time_budget_secs);
  return limits;
}

void Budget::check_time() const {
  if (std::chrono::steady_clock::now() > deadline_)
    throw ResourceCapError("time budget of " + std::to_string(limits_.time_budget_secs) + " s exceeded");
}

void Budget::check_basis_size(std::size_t size) const {
  if (size > limits_.max_basis)
    throw ResourceCapError("basis size cap " + std::to_string(limits_.max_basis) + " exceeded");
}

void Budget::check_degree(std::uint64_t degree) const {
  if (degree > limits_.max_degree)
    throw ResourceCapError("element degree cap " + std::to_string(limits_.max_degree) + " exceeded");
}

}  // namespace grlab

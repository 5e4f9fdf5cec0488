#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grlab/polyring.hpp"

namespace grlab {

/// Monomial ideal kept by its minimal generators (sorted, duplicate free).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  /// True iff 1 is a generator.
  bool is_unit() const;

  bool contains(const Monomial& m) const;
  MonomialIdeal plus(const Monomial& m) const;
  /// M : m
  MonomialIdeal quotient(const Monomial& m) const;
  bool is_squarefree() const;

  /// Variable sets of the generators as bit masks (requires nvars <= 64).
  std::vector<std::uint64_t> supports() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  void minimalize();

  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// Maximum size of a variable set containing the support of no generator
/// (an independent set); equals dim R/M. Unit ideal gives -1.
int independent_set_dimension(const MonomialIdeal& ideal);

/// All maximal independent sets, as bit masks in ascending order.
std::vector<std::uint64_t> maximal_independent_sets(const MonomialIdeal& ideal);

}  // namespace grlab

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grlab/limits.hpp"
#include "grlab/polyring.hpp"

namespace grlab {

struct VectorTerm {
  Rational coeff;
  Monomial mono;
  std::uint32_t comp = 0;

  friend bool operator==(const VectorTerm&, const VectorTerm&) = default;
};

/// Element of a free module, terms strictly descending in the module order.
struct ModuleVector {
  std::vector<VectorTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VectorTerm& leading_term() const { return terms.front(); }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
};

/// Graded free module R^r, basis vector e_i of degree shifts[i].
///
/// Order on terms m*e_i: first the block of i (lower block is larger, which
/// gives elimination orders), then the ring order on m where a weighted
/// grevlex ring compares weighted degree + shift first, then the component
/// index (lower index is larger).
class FreeModule {
 public:
  FreeModule(PolyRing ring, std::vector<std::uint64_t> shifts, std::vector<std::uint32_t> blocks = {});

  /// R^1 with no shift: polynomials viewed as vectors.
  static FreeModule rank_one(const PolyRing& ring) { return FreeModule(ring, {0}); }

  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<std::uint64_t>& shifts() const { return shifts_; }
  const std::vector<std::uint32_t>& blocks() const { return blocks_; }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const VectorTerm& a, const VectorTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

  std::uint64_t degree(const Monomial& m, std::uint32_t comp) const {
    return ring_.weighted_degree(m) + shifts_[comp];
  }

  ModuleVector from_terms(std::vector<VectorTerm> terms) const;
  ModuleVector from_polynomial(const Polynomial& f, std::uint32_t comp) const;
  /// Builds a vector from one polynomial per component.
  ModuleVector from_components(std::span<const Polynomial> entries) const;
  /// Polynomial in one component.
  Polynomial component(const ModuleVector& v, std::uint32_t comp) const;
  std::vector<Polynomial> components(const ModuleVector& v) const;

  ModuleVector add(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector sub(const ModuleVector& a, const ModuleVector& b) const;
  ModuleVector scale(const ModuleVector& a, const Rational& c) const;
  ModuleVector mul_term(const ModuleVector& a, const Rational& c, const Monomial& m) const;
  ModuleVector mul_poly(const ModuleVector& a, const Polynomial& f) const;
  ModuleVector make_monic(const ModuleVector& a) const;

  /// Degree when all terms share one (zero vector: 0).
  std::optional<std::uint64_t> homogeneous_degree(const ModuleVector& v) const;

  std::string format(const ModuleVector& v) const;

 private:
  PolyRing ring_;
  std::vector<std::uint64_t> shifts_;
  std::vector<std::uint32_t> blocks_;
};

/// Reduced Groebner basis of the submodule generated by gens: monic,
/// auto-reduced, sorted by ascending leading term. Pairs are chosen by least
/// sugar degree (the lcm degree for homogeneous input) and pruned with the
/// Gebauer-Moeller chain criterion plus, in rank one, Buchberger's coprime
/// criterion. In rank one the computation stops as soon as a constant appears.
std::vector<ModuleVector> module_groebner(const FreeModule& module, std::span<const ModuleVector> gens,
                                          const Budget& budget = Budget());

/// Full remainder of v modulo a Groebner basis.
ModuleVector module_normal_form(const FreeModule& module, const ModuleVector& v,
                                std::span<const ModuleVector> basis);

}  // namespace grlab

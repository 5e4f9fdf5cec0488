#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grlab/limits.hpp"
#include "grlab/module.hpp"
#include "grlab/polyring.hpp"

namespace grlab {

/// Reduced Groebner basis: monic, auto-reduced, ascending leading monomials.
struct GroebnerBasis {
  TermOrder order = TermOrder::WeightedGrevlex;
  std::vector<Polynomial> basis;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
  bool is_zero() const { return basis.empty(); }
  std::vector<Monomial> leading_monomials() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

GroebnerBasis buchberger(const PolyRing& ring, std::span<const Polynomial> gens, const Budget& budget = Budget());

/// Unique remainder of f modulo G; zero iff f lies in the ideal.
Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& basis);

/// Ideal of a polynomial ring with a lazily computed reduced basis.
class Ideal {
 public:
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal unit(const PolyRing& ring) { return Ideal(ring, {ring.one()}); }
  static Ideal zero(const PolyRing& ring) { return Ideal(ring, {}); }
  /// (x1, ..., xn)
  static Ideal maximal(const PolyRing& ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const GroebnerBasis& basis(const Budget& budget = Budget()) const;

  bool contains(const Polynomial& f, const Budget& budget = Budget()) const;
  bool is_unit(const Budget& budget = Budget()) const { return basis(budget).is_unit(); }
  /// Equality of ideals via their reduced bases.
  bool same_as(const Ideal& other, const Budget& budget = Budget()) const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(std::span<const Polynomial> extra) const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> generators_;
  mutable std::optional<GroebnerBasis> basis_;
};

/// All n-fold products of generators, I^0 = (1). Duplicates up to scalars are
/// dropped.
Ideal ideal_power(const Ideal& ideal, unsigned n);

/// I : f = {g : g f in I}, computed from the rank-two module generated by
/// (f, 1) and (g_j, 0) for generators g_j of I under a position-over-term
/// elimination order: the vectors (0, a) of its basis generate I : f.
/// Throws InvalidInputError for f = 0.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const Budget& budget = Budget());

/// f in sqrt(I), decided by 1 in I + (1 - y f) over R[y] (y fresh, weight 1).
bool radical_membership(const Polynomial& f, const Ideal& ideal, const Budget& budget = Budget());

/// Syzygies over A = R/modulo of columns v_1..v_m in the free module `target`:
/// generators of {a in A^m : sum a_i v_i = 0}. The source module has shifts
/// deg(v_i). Entries are reduced modulo the relations and zero vectors are
/// dropped; the set is not minimalized.
struct SyzygyModule {
  FreeModule source;
  std::vector<ModuleVector> generators;
};

SyzygyModule syzygies(const FreeModule& target, std::span<const ModuleVector> columns,
                      const GroebnerBasis& modulo, const Budget& budget = Budget());

/// Polynomial case: columns are elements of A = R/modulo.
SyzygyModule syzygies(std::span<const Polynomial> fs, const Ideal& modulo, const Budget& budget = Budget());

/// A minimal homogeneous generating subset of the A-submodule spanned by the
/// candidates, A = R/modulo. Candidates are scanned by ascending degree and
/// kept only when outside the span of those already kept.
std::vector<ModuleVector> minimal_generators(const FreeModule& module, std::vector<ModuleVector> candidates,
                                             const GroebnerBasis& modulo, const Budget& budget = Budget());

/// Reduces every component modulo an ideal basis.
ModuleVector reduce_components(const FreeModule& module, const ModuleVector& v, const GroebnerBasis& modulo);

}  // namespace grlab

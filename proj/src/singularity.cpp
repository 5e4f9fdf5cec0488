#include "grlab/singularity.hpp"

#include <bit>

#include "grlab/invariants.hpp"

namespace grlab {

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
    if (b > cap) return cap + 1;
  }
  return b;
}

// Determinant by expansion along successive rows, memoized on the set of
// columns already used: D(S) = sum over j in S of +-D(S \ j) * M[|S|-1][j].
Polynomial determinant(const PolyRing& ring, const std::vector<std::vector<Polynomial>>& m, const Budget& budget) {
  const std::size_t c = m.size();
  if (c == 0) return ring.one();
  std::vector<Polynomial> d(std::size_t{1} << c);
  d[0] = ring.one();
  for (std::uint32_t s = 1; s < d.size(); ++s) {
    const auto row = static_cast<std::size_t>(std::popcount(s)) - 1;
    Polynomial acc;
    int above = 0;
    for (std::size_t j = c; j-- > 0;) {
      if (!(s >> j & 1)) continue;
      const Polynomial& entry = m[row][j];
      const Polynomial& rest = d[s & ~(std::uint32_t{1} << j)];
      if (!entry.is_zero() && !rest.is_zero()) {
        Polynomial term = ring.mul(rest, entry);
        acc = above % 2 == 0 ? ring.add(acc, term) : ring.sub(acc, term);
      }
      ++above;
    }
    d[s] = std::move(acc);
    budget.check_time();
  }
  return d.back();
}

// Calls f on every increasing k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

JacobianData jacobian_matrix(const GradedRingPresentation& a) {
  JacobianData out;
  const PolyRing& ring = a.ring();
  for (const auto& g : a.generators()) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < ring.nvars(); ++j) row.push_back(ring.derivative(g, j));
    out.matrix.push_back(std::move(row));
  }
  out.codim = a.nvars() - static_cast<std::size_t>(krull_dim(a));
  return out;
}

Ideal singular_locus_ideal(const GradedRingPresentation& a, const Budget& budget) {
  const PolyRing& ring = a.ring();
  JacobianData jac = jacobian_matrix(a);
  const std::size_t c = jac.codim, s = jac.matrix.size(), n = a.nvars();
  if (c == 0) return Ideal::unit(ring);
  if (c > 20) throw ResourceCapError("codimension too large for the Jacobian minors");
  std::uint64_t rows = binomial_capped(s, c, kMaxMinors), cols = binomial_capped(n, c, kMaxMinors);
  if (rows * cols > kMaxMinors) throw ResourceCapError("too many Jacobian minors");

  std::vector<Polynomial> gens = a.generators();
  for_each_subset(s, c, [&](const std::vector<std::size_t>& r) {
    for_each_subset(n, c, [&](const std::vector<std::size_t>& k) {
      std::vector<std::vector<Polynomial>> sub(c, std::vector<Polynomial>(c));
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) sub[i][j] = jac.matrix[r[i]][k[j]];
      Polynomial det = a.reduce(determinant(ring, sub, budget));
      if (!det.is_zero()) gens.push_back(ring.make_monic(det));
    });
  });
  return Ideal(ring, std::move(gens));
}

SingularityReport is_graded_isolated_singularity(const GradedRingPresentation& a, const RegularityReport& regularity,
                                                 bool assume_equidimensional, const Budget& budget) {
  SingularityReport out;
  out.regular = regularity.regular;
  const int d = regularity.grKdim;

  Ideal jac = singular_locus_ideal(a, budget);
  out.singular_locus_dim = krull_dim(jac, budget);
  out.isolated = out.singular_locus_dim <= 0;

  bool by_radical = true;
  for (std::size_t i = 0; i < a.nvars() && by_radical; ++i)
    by_radical = radical_membership(a.ring().variable(i), jac, budget);
  if (by_radical != out.isolated)
    throw InconsistencyError("singular locus dimension and radical membership disagree on isolatedness");
  if (out.regular && !out.isolated) throw InconsistencyError("regular ring with a nonempty singular locus");

  if (assume_equidimensional)
    out.assumptions.push_back("I is equidimensional (declared, not verified)");
  else
    out.assumptions.push_back("I was not declared equidimensional; the Jacobian verdict is only valid if it is");
  if (out.isolated && d >= 1) {
    out.qgr_gldim = d - 1;
    out.assumptions.push_back("qgr_gldim = grKdim - 1 follows from isolatedness; it is not computed directly");
  } else if (d == 0) {
    out.assumptions.push_back("A is artinian: qgr A is zero and qgr_gldim is not asserted");
  }
  if (!a.ring().field().is_rational()) out.field_caveat = "valid for geometrically reduced A over perfect k";
  return out;
}

SingularityReport is_graded_isolated_singularity(const GradedRingPresentation& a, bool assume_equidimensional,
                                                 const Budget& budget) {
  return is_graded_isolated_singularity(a, regularity_report(a, budget), assume_equidimensional, budget);
}

}  // namespace grlab

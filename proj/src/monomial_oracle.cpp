#include "grlab/monomial_oracle.hpp"

#include <algorithm>

namespace grlab {

namespace {

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

bool by_size_then_lex(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<CoordinatePrime> coordinate_primes_containing(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (n > kMaxOracleVariables) throw ResourceCapError("coordinate prime enumeration is limited to 16 variables");
  if (ideal.is_unit()) throw InvalidInputError("the monomial ideal is not proper");
  auto supports = ideal.supports();
  std::vector<std::vector<std::size_t>> sets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (std::all_of(supports.begin(), supports.end(), [&](auto sup) { return (sup & s) != 0; }))
      sets.push_back(members(s, n));
  std::sort(sets.begin(), sets.end(), by_size_then_lex);
  std::vector<CoordinatePrime> out;
  for (auto& s : sets) out.push_back({std::move(s)});
  return out;
}

MonomialIdeal localize_monomial(const MonomialIdeal& ideal, const CoordinatePrime& prime) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    Monomial h(ideal.nvars());
    for (auto i : prime.variables) h[i] = g[i];
    gens.push_back(std::move(h));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool is_localization_regular(const MonomialIdeal& ideal, const CoordinatePrime& prime) {
  MonomialIdeal local = localize_monomial(ideal, prime);
  for (const auto& g : local.generators())
    if (g.total_degree() != 1) return false;
  return true;
}

FacetComplex facets(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw InvalidInputError("Stanley-Reisner complex of a non-squarefree ideal");
  if (ideal.is_unit()) throw InvalidInputError("the monomial ideal is not proper");
  FacetComplex out;
  for (auto s : maximal_independent_sets(ideal)) out.facets.push_back(members(s, ideal.nvars()));
  std::sort(out.facets.begin(), out.facets.end(), by_size_then_lex);
  return out;
}

bool sr_isolated(const FacetComplex& complex) {
  const auto& f = complex.facets;
  for (const auto& face : f)
    if (face.size() != f.front().size()) throw InvalidInputError("the simplicial complex is not pure");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      for (auto v : f[i])
        if (std::find(f[j].begin(), f[j].end(), v) != f[j].end()) return false;
  return true;
}

}  // namespace grlab

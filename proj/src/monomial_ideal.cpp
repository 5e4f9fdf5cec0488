#include "grlab/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace grlab {

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != nvars_) throw InvalidInputError("monomial has the wrong number of variables");
  minimalize();
}

void MonomialIdeal::minimalize() {
  std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                        a.exponents().end());
  });
  std::vector<Monomial> kept;
  for (auto& g : gens_) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  gens_ = std::move(kept);
}

bool MonomialIdeal::is_unit() const {
  return !gens_.empty() && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  auto gens = gens_;
  gens.push_back(m);
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g / gcd(g, m));
  return MonomialIdeal(nvars_, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (Exponent e : g.exponents())
      if (e > 1) return false;
  return true;
}

std::vector<std::uint64_t> MonomialIdeal::supports() const {
  if (nvars_ > 64) throw InvalidInputError("more than 64 variables");
  std::vector<std::uint64_t> out;
  for (const auto& g : gens_) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (g[i] > 0) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
  }
  return out;
}

namespace {

// Supports with supersets removed; a set is independent iff it contains none.
std::vector<std::uint64_t> minimal_supports(const MonomialIdeal& ideal) {
  auto s = ideal.supports();
  std::sort(s.begin(), s.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> out;
  for (auto m : s)
    if (std::none_of(out.begin(), out.end(), [&](auto k) { return (k & m) == k; })) out.push_back(m);
  return out;
}

}  // namespace

int independent_set_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return -1;
  auto sets = minimal_supports(ideal);
  const int n = static_cast<int>(ideal.nvars());
  // Minimum vertex cover by branching on the smallest uncovered set.
  int best = n;
  std::function<void(std::uint64_t, int)> search = [&](std::uint64_t chosen, int count) {
    if (count >= best) return;
    const std::uint64_t* open = nullptr;
    for (const auto& s : sets)
      if ((s & chosen) == 0 && (!open || std::popcount(s) < std::popcount(*open))) open = &s;
    if (!open) {
      best = count;
      return;
    }
    for (std::uint64_t bits = *open; bits; bits &= bits - 1) search(chosen | (bits & -bits), count + 1);
  };
  search(0, 0);
  return n - best;
}

std::vector<std::uint64_t> maximal_independent_sets(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (n > 24) throw InvalidInputError("too many variables to enumerate independent sets");
  std::vector<std::uint64_t> out;
  if (ideal.is_unit()) return out;
  auto sets = minimal_supports(ideal);
  auto independent = [&](std::uint64_t s) {
    return std::none_of(sets.begin(), sets.end(), [&](auto k) { return (k & s) == k; });
  };
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!independent(s)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(s >> i & 1) && independent(s | std::uint64_t{1} << i)) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace grlab

#include "grlab/groebner.hpp"

#include <algorithm>

namespace grlab {

namespace {

std::vector<ModuleVector> to_vectors(const FreeModule& m, std::span<const Polynomial> fs) {
  std::vector<ModuleVector> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(m.from_polynomial(f, 0));
  return out;
}

std::uint64_t max_degree(const PolyRing& ring, const Polynomial& f) {
  std::uint64_t d = 0;
  for (const Term& t : f.terms()) d = std::max(d, ring.weighted_degree(t.mono));
  return d;
}

// Module relations g*e_k for every basis element g and component k.
std::vector<ModuleVector> relation_vectors(const FreeModule& module, const GroebnerBasis& modulo,
                                           std::uint32_t first_comp, std::uint32_t ncomps) {
  std::vector<ModuleVector> out;
  for (std::uint32_t k = first_comp; k < first_comp + ncomps; ++k)
    for (const auto& g : modulo.basis) out.push_back(module.from_polynomial(g, k));
  return out;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const PolyRing& ring, std::span<const Polynomial> gens, const Budget& budget) {
  FreeModule m = FreeModule::rank_one(ring);
  auto vecs = to_vectors(m, gens);
  auto gb = module_groebner(m, vecs, budget);
  GroebnerBasis out{ring.order(), {}};
  out.basis.reserve(gb.size());
  for (const auto& v : gb) out.basis.push_back(m.component(v, 0));
  return out;
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& basis) {
  FreeModule m = FreeModule::rank_one(ring);
  auto vecs = to_vectors(m, basis.basis);
  return m.component(module_normal_form(m, m.from_polynomial(f, 0), vecs), 0);
}

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  std::erase_if(generators_, [](const Polynomial& f) { return f.is_zero(); });
}

Ideal Ideal::maximal(const PolyRing& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.variable(i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::basis(const Budget& budget) const {
  if (!basis_) basis_ = buchberger(ring_, generators_, budget);
  return *basis_;
}

bool Ideal::contains(const Polynomial& f, const Budget& budget) const {
  return normal_form(ring_, f, basis(budget)).is_zero();
}

bool Ideal::same_as(const Ideal& other, const Budget& budget) const {
  return basis(budget).basis == other.basis(budget).basis;
}

Ideal Ideal::operator+(const Ideal& other) const { return with(other.generators_); }

Ideal Ideal::with(std::span<const Polynomial> extra) const {
  auto gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
  const PolyRing& ring = ideal.ring();
  std::vector<Polynomial> current{ring.one()};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<Polynomial> next;
    for (const auto& a : current)
      for (const auto& g : ideal.generators()) next.push_back(ring.make_monic(ring.mul(a, g)));
    std::sort(next.begin(), next.end(), [&](const Polynomial& a, const Polynomial& b) {
      // Any strict total order works for deduplication: compare term by term.
      std::size_t k = 0;
      for (; k < a.size() && k < b.size(); ++k) {
        int c = ring.compare(a.terms()[k].mono, b.terms()[k].mono);
        if (c != 0) return c < 0;
        if (a.terms()[k].coeff != b.terms()[k].coeff) return a.terms()[k].coeff < b.terms()[k].coeff;
      }
      return a.size() < b.size();
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return Ideal(ring, std::move(current));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) throw InvalidInputError("ideal quotient by the zero polynomial");
  const PolyRing& ring = ideal.ring();
  FreeModule m(ring, {0, max_degree(ring, f)}, {0, 1});
  std::vector<ModuleVector> gens;
  gens.push_back(m.add(m.from_polynomial(f, 0), m.from_polynomial(ring.one(), 1)));
  for (const auto& g : ideal.basis(budget).basis) gens.push_back(m.from_polynomial(g, 0));
  auto gb = module_groebner(m, gens, budget);
  std::vector<Polynomial> quotient;
  for (const auto& v : gb)
    if (v.leading_term().comp == 1) quotient.push_back(m.component(v, 1));
  return Ideal(ring, std::move(quotient));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const Budget& budget) {
  if (f.is_zero()) return true;
  const PolyRing& ring = ideal.ring();
  std::string fresh = "rabinowitsch";
  while (ring.index_of(fresh)) fresh += "_";
  PolyRing ext = ring.extended(fresh, 1).with_order(TermOrder::WeightedGrevlex);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(ring.embed(g, 1));
  Polynomial yf = ext.mul(ext.variable(ring.nvars()), ring.embed(f, 1));
  gens.push_back(ext.sub(ext.one(), yf));
  return buchberger(ext, gens, budget).is_unit();
}

ModuleVector reduce_components(const FreeModule& module, const ModuleVector& v, const GroebnerBasis& modulo) {
  if (modulo.basis.empty()) return v;
  auto parts = module.components(v);
  for (auto& p : parts) p = normal_form(module.ring(), p, modulo);
  return module.from_components(parts);
}

SyzygyModule syzygies(const FreeModule& target, std::span<const ModuleVector> columns, const GroebnerBasis& modulo,
                      const Budget& budget) {
  const auto r = static_cast<std::uint32_t>(target.rank());
  const auto ncols = static_cast<std::uint32_t>(columns.size());
  std::vector<std::uint64_t> source_shifts;
  for (const auto& v : columns) {
    auto d = target.homogeneous_degree(v);
    if (!d) throw InvalidInputError("syzygies of a non-homogeneous vector");
    source_shifts.push_back(*d);
  }
  FreeModule source(target.ring(), source_shifts);

  std::vector<std::uint64_t> shifts = target.shifts();
  shifts.insert(shifts.end(), source_shifts.begin(), source_shifts.end());
  std::vector<std::uint32_t> blocks(r, 0);
  blocks.resize(r + ncols, 1);
  FreeModule big(target.ring(), shifts, blocks);

  std::vector<ModuleVector> gens;
  for (std::uint32_t i = 0; i < ncols; ++i) {
    std::vector<VectorTerm> terms = columns[i].terms;
    terms.push_back({Rational(1), Monomial(target.ring().nvars()), r + i});
    gens.push_back(big.from_terms(std::move(terms)));
  }
  auto rel = relation_vectors(big, modulo, 0, r);
  gens.insert(gens.end(), rel.begin(), rel.end());

  auto gb = module_groebner(big, gens, budget);
  SyzygyModule out{source, {}};
  for (const auto& v : gb) {
    if (v.leading_term().comp < r) continue;
    std::vector<VectorTerm> terms;
    for (const auto& t : v.terms) terms.push_back({t.coeff, t.mono, t.comp - r});
    ModuleVector s = reduce_components(source, source.from_terms(std::move(terms)), modulo);
    if (!s.is_zero()) out.generators.push_back(source.make_monic(s));
  }
  return out;
}

SyzygyModule syzygies(std::span<const Polynomial> fs, const Ideal& modulo, const Budget& budget) {
  FreeModule target = FreeModule::rank_one(modulo.ring());
  return syzygies(target, to_vectors(target, fs), modulo.basis(budget), budget);
}

std::vector<ModuleVector> minimal_generators(const FreeModule& module, std::vector<ModuleVector> candidates,
                                             const GroebnerBasis& modulo, const Budget& budget) {
  std::vector<std::pair<std::uint64_t, ModuleVector>> pending;
  for (auto& c : candidates) {
    ModuleVector v = reduce_components(module, c, modulo);
    if (v.is_zero()) continue;
    auto d = module.homogeneous_degree(v);
    if (!d) throw InvalidInputError("minimal generators of a non-homogeneous vector");
    pending.emplace_back(*d, module.make_monic(v));
  }
  std::stable_sort(pending.begin(), pending.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return module.compare(a.second.leading_term(), b.second.leading_term()) < 0;
  });

  std::vector<ModuleVector> kept;
  std::vector<ModuleVector> span_basis =
      module_groebner(module, relation_vectors(module, modulo, 0, static_cast<std::uint32_t>(module.rank())), budget);
  for (auto& [degree, v] : pending) {
    if (module_normal_form(module, v, span_basis).is_zero()) continue;
    kept.push_back(v);
    span_basis.push_back(v);
    span_basis = module_groebner(module, span_basis, budget);
  }
  return kept;
}

}  // namespace grlab

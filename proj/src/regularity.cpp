#include "grlab/regularity.hpp"

namespace grlab {

bool is_regular_dimension_count(const GradedRingPresentation& a) {
  return static_cast<int>(min_gens_rank(a)) == krull_dim(a);
}

ResidueFieldResolution pdim_residue_field_capped(const GradedRingPresentation& a, const Budget& budget) {
  const PolyRing& ring = a.ring();
  const GroebnerBasis& rel = a.basis();
  const std::size_t cap = static_cast<std::size_t>(krull_dim(a)) + 1;

  ResidueFieldResolution out;
  out.betti.push_back({0, 1, {0}});

  // F_1 -> F_0 = A maps onto m.
  FreeModule target = FreeModule::rank_one(ring);
  std::vector<ModuleVector> candidates;
  for (std::size_t i = 0; i < ring.nvars(); ++i) candidates.push_back(target.from_polynomial(ring.variable(i), 0));
  std::vector<ModuleVector> columns = minimal_generators(target, std::move(candidates), rel, budget);

  for (std::size_t step = 1;; ++step) {
    if (columns.empty()) {
      out.pdim = step - 1;
      return out;
    }
    BettiStep b{step, columns.size(), {}};
    for (const auto& c : columns) b.shifts.push_back(*target.homogeneous_degree(c));
    out.betti.push_back(std::move(b));
    if (step == cap) return out;

    SyzygyModule syz = syzygies(target, columns, rel, budget);
    columns = minimal_generators(syz.source, std::move(syz.generators), rel, budget);
    target = syz.source;
  }
}

bool is_regular_sequence(const GradedRingPresentation& a, const std::vector<Polynomial>& seq, const Budget& budget) {
  const PolyRing& ring = a.ring();
  for (const auto& t : seq) {
    auto d = ring.homogeneous_degree(t);
    if (t.is_zero() || !d || *d == 0)
      throw InvalidInputError("sequence element is not homogeneous of positive degree: " + ring.format(t));
  }
  Ideal j = a.ideal();
  for (const auto& t : seq) {
    if (!ideal_quotient(j, t, budget).same_as(j, budget)) return false;
    j = j.with(std::vector<Polynomial>{t});
  }
  return !j.is_unit(budget);
}

std::vector<Polynomial> minimal_generators_of_maximal_ideal(const GradedRingPresentation& a) {
  std::vector<Polynomial> out;
  LinearPart lp = linear_part(a);
  for (auto i : lp.free_variables) out.push_back(a.ring().variable(i));
  return out;
}

std::optional<std::vector<Polynomial>> regular_sequence_extract(const GradedRingPresentation& a,
                                                                const Budget& budget) {
  if (!is_regular_dimension_count(a)) return std::nullopt;
  auto seq = minimal_generators_of_maximal_ideal(a);
  if (!is_regular_sequence(a, seq, budget))
    throw InconsistencyError("rank m/m^2 = grKdim but the minimal generators of m are not a regular sequence");
  return seq;
}

RegularityReport regularity_report(const GradedRingPresentation& a, const Budget& budget) {
  RegularityReport r;
  r.grKdim = krull_dim(a);
  r.emb_rank = min_gens_rank(a);
  r.verdicts.dimension_count = static_cast<int>(r.emb_rank) == r.grKdim;

  r.resolution = pdim_residue_field_capped(a, budget);
  r.verdicts.capped_resolution = r.resolution.pdim.has_value();
  if (r.resolution.pdim && static_cast<int>(*r.resolution.pdim) != r.grKdim)
    throw InconsistencyError("finite projective dimension " + std::to_string(*r.resolution.pdim) +
                             " of k differs from grKdim " + std::to_string(r.grKdim));

  // Run independently of the dimension count: minimal generators of m form a
  // regular sequence exactly when A is regular.
  auto seq = minimal_generators_of_maximal_ideal(a);
  r.verdicts.regular_sequence = is_regular_sequence(a, seq, budget);

  const auto& v = r.verdicts;
  if (v.dimension_count != v.capped_resolution || v.dimension_count != v.regular_sequence) {
    auto s = [](bool b) { return b ? std::string("true") : std::string("false"); };
    throw InconsistencyError("regularity criteria disagree: dimension_count=" + s(v.dimension_count) +
                             " capped_resolution=" + s(v.capped_resolution) +
                             " regular_sequence=" + s(v.regular_sequence));
  }
  r.regular = v.dimension_count;
  if (r.regular) r.regular_sequence = std::move(seq);
  return r;
}

}  // namespace grlab

#pragma once

#include <optional>
#include <vector>

#include "grlab/invariants.hpp"
#include "grlab/presentation.hpp"

namespace grlab {

/// Free module F_step of a graded resolution: rank and degree shifts.
struct BettiStep {
  std::size_t step = 0;
  std::size_t rank = 0;
  std::vector<std::uint64_t> shifts;
};

/// Minimal graded free resolution of k = A/m, truncated after step grKdim + 1.
struct ResidueFieldResolution {
  /// Projective dimension; nullopt when F_{d+1} != 0, i.e. infinite.
  std::optional<std::size_t> pdim;
  std::vector<BettiStep> betti;
};

/// rank m/m^2 == grKdim A
bool is_regular_dimension_count(const GradedRingPresentation& a);

ResidueFieldResolution pdim_residue_field_capped(const GradedRingPresentation& a, const Budget& budget = Budget());

/// (I + (t_1..t_{i-1})) : t_i == I + (t_1..t_{i-1}) for every i, and
/// I + (t_1..t_r) is proper. Throws InvalidInputError on an element that is not
/// homogeneous of positive degree.
bool is_regular_sequence(const GradedRingPresentation& a, const std::vector<Polynomial>& seq,
                         const Budget& budget = Budget());

/// Minimal homogeneous generators of m: the variables left free by the linear
/// parts of I.
std::vector<Polynomial> minimal_generators_of_maximal_ideal(const GradedRingPresentation& a);

/// The certified regular sequence when rank m/m^2 = grKdim, nullopt otherwise.
/// Throws InconsistencyError when certification fails.
std::optional<std::vector<Polynomial>> regular_sequence_extract(const GradedRingPresentation& a,
                                                                const Budget& budget = Budget());

struct RegularityVerdicts {
  bool dimension_count = false;
  bool capped_resolution = false;
  bool regular_sequence = false;
};

struct RegularityReport {
  int grKdim = 0;
  std::size_t emb_rank = 0;
  RegularityVerdicts verdicts;
  bool regular = false;
  std::optional<std::vector<Polynomial>> regular_sequence;
  ResidueFieldResolution resolution;
};

/// Runs the three criteria. Throws InconsistencyError when they disagree or a
/// finite projective dimension differs from grKdim.
RegularityReport regularity_report(const GradedRingPresentation& a, const Budget& budget = Budget());

}  // namespace grlab

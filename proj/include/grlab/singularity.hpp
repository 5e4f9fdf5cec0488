#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlab/presentation.hpp"
#include "grlab/regularity.hpp"

namespace grlab {

struct JacobianData {
  /// matrix[i][j] = d g_i / d x_j for the given generators g_i.
  std::vector<std::vector<Polynomial>> matrix;
  /// c = n - grKdim A
  std::size_t codim = 0;
};

JacobianData jacobian_matrix(const GradedRingPresentation& a);

/// Cap on the number of c x c minors generated.
inline constexpr std::size_t kMaxMinors = 20000;

/// I + (c x c minors of the Jacobian matrix); the 0 x 0 minor is 1.
/// Correct for equidimensional I only. Throws ResourceCapError past kMaxMinors.
Ideal singular_locus_ideal(const GradedRingPresentation& a, const Budget& budget = Budget());

struct SingularityReport {
  bool isolated = false;
  bool regular = false;
  /// Krull dimension of R/Jac, -1 when the locus is empty.
  int singular_locus_dim = -1;
  /// nullopt stands for "unknown".
  std::optional<int> qgr_gldim;
  std::vector<std::string> assumptions;
  std::optional<std::string> field_caveat;
};

/// Decides isolatedness from the singular locus; `regularity` supplies the
/// regular verdict. Throws InconsistencyError when the dimension test and the
/// radical-membership test disagree, or when a regular ring is reported
/// singular.
SingularityReport is_graded_isolated_singularity(const GradedRingPresentation& a, const RegularityReport& regularity,
                                                 bool assume_equidimensional = true,
                                                 const Budget& budget = Budget());

SingularityReport is_graded_isolated_singularity(const GradedRingPresentation& a,
                                                 bool assume_equidimensional = true,
                                                 const Budget& budget = Budget());

}  // namespace grlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grlab/invariants.hpp"
#include "grlab/polyparse.hpp"
#include "grlab/regularity.hpp"
#include "grlab/singularity.hpp"

namespace grlab {

struct PhaseTiming {
  std::string phase;
  double ms = 0;
};

/// Everything `grlab analyze` reports. Timings are kept out of the JSON body.
struct AnalysisReport {
  std::vector<std::string> variables;
  std::vector<std::uint32_t> weights;
  std::string field;
  std::string order;

  int grKdim = 0;
  std::size_t emb_rank = 0;
  bool regular = false;
  RegularityVerdicts verdicts;
  std::optional<std::vector<std::string>> regular_sequence;
  std::optional<std::size_t> pdim_k;
  std::vector<BettiStep> betti;
  HilbertSeries hilbert;
  std::optional<CharPoly> char_poly;
  bool isolated = false;
  int singular_locus_dim = -1;
  std::optional<int> qgr_gldim;
  std::vector<std::string> assumptions;
  std::optional<std::string> field_caveat;

  std::vector<PhaseTiming> timings;
};

struct AnalysisOptions {
  bool assume_equidimensional = true;
  /// Ideal for the characteristic polynomial; the maximal ideal when unset.
  std::optional<std::vector<Polynomial>> char_poly_ideal;
  ResourceLimits limits;
};

AnalysisReport analyze(const GradedRingPresentation& a, const AnalysisOptions& options = {});

/// Parses, validates and analyzes a ring document.
AnalysisReport analyze(const RingDefinitionDocument& doc, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::ordered_json to_json(const HilbertSeries& h);
nlohmann::ordered_json to_json(const CharPoly& chi);

/// Builds the presentation described by a ring document.
GradedRingPresentation present(const RingDefinitionDocument& doc, const Budget& budget = Budget());

}  // namespace grlab

#include "grlab/report.hpp"

#include <chrono>
#include <sstream>

namespace grlab {

namespace {

class PhaseClock {
 public:
  explicit PhaseClock(std::vector<PhaseTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}

  void lap(const char* phase) {
    auto now = std::chrono::steady_clock::now();
    out_.push_back({phase, std::chrono::duration<double, std::milli>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<PhaseTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

GradedRingPresentation present(const RingDefinitionDocument& doc, const Budget& budget) {
  PolyRing ring = doc.make_ring();
  return GradedRingPresentation::create(ring, doc.parse_ideal(ring), budget);
}

AnalysisReport analyze(const GradedRingPresentation& a, const AnalysisOptions& options) {
  Budget budget(options.limits);
  AnalysisReport r;
  PhaseClock clock(r.timings);
  const PolyRing& ring = a.ring();
  r.variables = ring.names();
  r.weights = ring.weights();
  r.field = ring.field().spec().name();
  r.order = to_string(ring.order());

  a.ideal().basis(budget);
  clock.lap("groebner");

  r.hilbert = hilbert_series(a, budget);
  auto q = options.char_poly_ideal ? *options.char_poly_ideal : Ideal::maximal(ring).generators();
  r.char_poly = char_poly(a, q, budget);
  clock.lap("invariants");

  RegularityReport reg = regularity_report(a, budget);
  r.grKdim = reg.grKdim;
  r.emb_rank = reg.emb_rank;
  r.regular = reg.regular;
  r.verdicts = reg.verdicts;
  r.pdim_k = reg.resolution.pdim;
  r.betti = reg.resolution.betti;
  if (reg.regular_sequence) {
    r.regular_sequence.emplace();
    for (const auto& t : *reg.regular_sequence) r.regular_sequence->push_back(ring.format(t));
  }
  clock.lap("regularity");

  SingularityReport sing = is_graded_isolated_singularity(a, reg, options.assume_equidimensional, budget);
  r.isolated = sing.isolated;
  r.singular_locus_dim = sing.singular_locus_dim;
  r.qgr_gldim = sing.qgr_gldim;
  r.assumptions = sing.assumptions;
  r.field_caveat = sing.field_caveat;
  clock.lap("singularity");

  if (r.regular && !r.isolated) throw InconsistencyError("report: regular but not isolated");
  if (r.isolated && r.grKdim >= 1 && r.qgr_gldim != r.grKdim - 1)
    throw InconsistencyError("report: isolated but qgr_gldim differs from grKdim - 1");
  return r;
}

AnalysisReport analyze(const RingDefinitionDocument& doc, const AnalysisOptions& options) {
  std::vector<PhaseTiming> setup;
  PhaseClock clock(setup);
  auto a = present(doc, Budget(options.limits));
  clock.lap("parse");
  AnalysisOptions opts = options;
  opts.assume_equidimensional = doc.options.assume_equidimensional && options.assume_equidimensional;
  AnalysisReport r = analyze(a, opts);
  r.timings.insert(r.timings.begin(), setup.begin(), setup.end());
  return r;
}

nlohmann::ordered_json to_json(const HilbertSeries& h) {
  nlohmann::ordered_json j;
  j["numerator"] = h.numerator_string();
  j["denominator"] = h.denominator_string();
  j["numerator_coefficients"] = h.numerator;
  j["denominator_weights"] = h.denominator_weights;
  return j;
}

nlohmann::ordered_json to_json(const CharPoly& chi) {
  nlohmann::ordered_json j;
  j["polynomial"] = chi.to_string();
  j["degree"] = chi.degree();
  j["threshold"] = chi.threshold;
  std::vector<std::string> coeffs;
  for (const auto& c : chi.coefficients) coeffs.push_back(c.to_string());
  j["coefficients"] = coeffs;
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["ring"] = {{"variables", r.variables}, {"weights", r.weights}, {"field", r.field}, {"order", r.order}};
  j["grKdim"] = r.grKdim;
  j["emb_rank"] = r.emb_rank;
  j["regular"] = r.regular;
  j["verdicts"] = {{"dimension_count", r.verdicts.dimension_count},
                   {"capped_resolution", r.verdicts.capped_resolution},
                   {"regular_sequence", r.verdicts.regular_sequence}};
  j["regular_sequence"] = r.regular_sequence ? nlohmann::ordered_json(*r.regular_sequence) : nullptr;
  j["pdim_k"] = r.pdim_k ? nlohmann::ordered_json(*r.pdim_k) : nlohmann::ordered_json("infinite");
  auto betti = nlohmann::ordered_json::array();
  for (const auto& b : r.betti) betti.push_back({{"step", b.step}, {"rank", b.rank}, {"shifts", b.shifts}});
  j["betti"] = betti;
  j["hilbert"] = to_json(r.hilbert);
  j["char_poly"] = r.char_poly ? to_json(*r.char_poly) : nlohmann::ordered_json(nullptr);
  j["isolated"] = r.isolated;
  j["singular_locus_dim"] = r.singular_locus_dim;
  j["qgr_gldim"] = r.qgr_gldim ? nlohmann::ordered_json(*r.qgr_gldim) : nlohmann::ordered_json("unknown");
  j["assumptions"] = r.assumptions;
  j["field_caveat"] = r.field_caveat ? nlohmann::ordered_json(*r.field_caveat) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  std::vector<std::string> w;
  for (auto x : r.weights) w.push_back(std::to_string(x));
  auto yes = [](bool b) { return b ? "true" : "false"; };
  out << "ring: " << r.field << "[" << join(r.variables, ", ") << "], weights (" << join(w, ", ") << "), order "
      << r.order << "\n";
  out << "grKdim: " << r.grKdim << "\n";
  out << "emb_rank: " << r.emb_rank << "\n";
  out << "regular: " << yes(r.regular) << " (dimension_count=" << yes(r.verdicts.dimension_count)
      << ", capped_resolution=" << yes(r.verdicts.capped_resolution)
      << ", regular_sequence=" << yes(r.verdicts.regular_sequence) << ")\n";
  out << "regular_sequence: " << (r.regular_sequence ? "(" + join(*r.regular_sequence, ", ") + ")" : "none") << "\n";
  out << "pdim_k: " << (r.pdim_k ? std::to_string(*r.pdim_k) : "infinite") << "\n";
  std::vector<std::string> ranks;
  for (const auto& b : r.betti) ranks.push_back(std::to_string(b.rank));
  out << "betti: " << join(ranks, ", ") << (r.pdim_k ? "" : ", ...") << "\n";
  out << "hilbert: (" << r.hilbert.numerator_string() << ") / " << r.hilbert.denominator_string() << "\n";
  if (r.char_poly)
    out << "char_poly: " << r.char_poly->to_string() << " for n >= " << r.char_poly->threshold << "\n";
  out << "isolated: " << yes(r.isolated) << "\n";
  out << "singular_locus_dim: " << r.singular_locus_dim << "\n";
  out << "qgr_gldim: " << (r.qgr_gldim ? std::to_string(*r.qgr_gldim) : "unknown") << "\n";
  if (r.field_caveat) out << "field_caveat: " << *r.field_caveat << "\n";
  out << "assumptions:\n";
  for (const auto& s : r.assumptions) out << "  - " << s << "\n";
  return out.str();
}

}  // namespace grlab

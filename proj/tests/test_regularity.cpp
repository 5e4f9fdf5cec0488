#include <doctest.h>

#include "grlab/regularity.hpp"
#include "support/helpers.hpp"

using namespace grlab;
using namespace grlab::testing;

namespace {

GradedRingPresentation present(const PolyRing& r, const std::vector<std::string>& gens) {
  return GradedRingPresentation::create(r, polys(r, gens));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Products of variables of total degree <= 2, as zero-divisor witness candidates.
std::vector<Polynomial> small_monomials(const PolyRing& r) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    out.push_back(r.variable(i));
    for (std::size_t j = i; j < r.nvars(); ++j) out.push_back(r.mul(r.variable(i), r.variable(j)));
  }
  return out;
}

bool has_zero_divisor_witness(const GradedRingPresentation& a) {
  auto ms = small_monomials(a.ring());
  for (const auto& u : ms)
    for (const auto& v : ms)
      if (!a.reduce(u).is_zero() && !a.reduce(v).is_zero() && a.reduce(a.ring().mul(u, v)).is_zero()) return true;
  return false;
}

struct Case {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  std::vector<std::string> ideal;
  bool regular;
  int dim;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {{"x", "y", "z"}, {1, 1, 1}, {}, true, 3},
      {{"x", "y", "z"}, {1, 1, 1}, {"x*y - z^2"}, false, 2},
      {{"x", "y"}, {1, 2}, {"y - x^2"}, true, 1},
      {{"x"}, {1}, {"x^2"}, false, 0},
      {{"x", "y"}, {1, 1}, {"x*y"}, false, 1},
      {{"x", "y", "z"}, {1, 1, 1}, {"x*y"}, false, 2},
      {{"x", "y", "z"}, {15, 10, 6}, {"x^2 + y^3 + z^5"}, false, 2},
      {{"x", "y", "z", "w"}, {1, 1, 1, 1}, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}, false, 2},
      {{"x", "y", "z", "w"}, {1, 1, 1, 1}, {"x*z", "x*w", "y*z", "y*w"}, false, 2},
      {{"x", "y", "z"}, {1, 1, 2}, {"z - x*y"}, true, 2},
      {{"x", "y"}, {3, 2}, {"x^2 - y^3"}, false, 1},
      {{"x", "y"}, {1, 1}, {"x^2", "y^2"}, false, 0},
      {{"x", "y", "z", "w"}, {1, 1, 1, 1}, {"x - y", "z*w"}, false, 2},
      {{"x", "y", "z", "w"}, {1, 1, 1, 1}, {"x - y", "z - w"}, true, 2},
  };
  return all;
}

}  // namespace

TEST_CASE("is_regular_dimension_count examples") {
  CHECK(is_regular_dimension_count(GradedRingPresentation::create(qq_ring({"x", "y", "z"}), {})));
  CHECK_FALSE(is_regular_dimension_count(present(qq_ring({"x", "y", "z"}), {"x*y - z^2"})));
  CHECK(is_regular_dimension_count(present(qq_ring({"x", "y"}, {1, 2}), {"y - x^2"})));
}

TEST_CASE("pdim_residue_field_capped examples") {
  PolyRing r = qq_ring({"x", "y"});
  auto res = pdim_residue_field_capped(GradedRingPresentation::create(r, {}));
  REQUIRE(res.pdim.has_value());
  CHECK(*res.pdim == 2);
  REQUIRE(res.betti.size() == 3);
  CHECK(res.betti[1].shifts == std::vector<std::uint64_t>{1, 1});
  CHECK(res.betti[2].shifts == std::vector<std::uint64_t>{2});

  CHECK_FALSE(pdim_residue_field_capped(present(qq_ring({"x"}), {"x^2"})).pdim.has_value());
  CHECK_FALSE(pdim_residue_field_capped(present(r, {"x*y"})).pdim.has_value());
}

TEST_CASE("regular_sequence_extract examples") {
  PolyRing r = qq_ring({"x", "y", "z"});
  auto s = regular_sequence_extract(GradedRingPresentation::create(r, {}));
  REQUIRE(s.has_value());
  CHECK(formatted(r, *s) == std::vector<std::string>{"x", "y", "z"});

  PolyRing w = qq_ring({"x", "y"}, {1, 2});
  auto s2 = regular_sequence_extract(present(w, {"y - x^2"}));
  REQUIRE(s2.has_value());
  CHECK(formatted(w, *s2) == std::vector<std::string>{"x"});

  CHECK_FALSE(regular_sequence_extract(present(qq_ring({"x", "y"}), {"x*y"})).has_value());
}

TEST_CASE("is_regular_sequence examples") {
  PolyRing r = qq_ring({"x", "y"});
  auto a = GradedRingPresentation::create(r, {});
  CHECK(is_regular_sequence(a, polys(r, {"x", "y"})));
  CHECK_FALSE(is_regular_sequence(a, polys(r, {"x", "x"})));
  PolyRing r3 = qq_ring({"x", "y", "z"});
  CHECK(is_regular_sequence(GradedRingPresentation::create(r3, {}), polys(r3, {"x*y", "z"})));
  CHECK_THROWS_AS(is_regular_sequence(a, polys(r, {"x + y^2"})), InvalidInputError);
  // A zero divisor modulo I.
  CHECK_FALSE(is_regular_sequence(present(r, {"x*y"}), polys(r, {"x"})));
  CHECK(is_regular_sequence(present(r, {"x*y"}), polys(r, {"x + y"})));
}

TEST_CASE("regularity_report: criteria agree and match known verdicts") {
  for (const auto& c : cases()) {
    PolyRing r = qq_ring(c.names, c.weights);
    auto a = present(r, c.ideal);
    auto rep = regularity_report(a);
    std::string label = c.ideal.empty() ? std::string("0") : c.ideal.front();
    INFO(label);
    CHECK(rep.grKdim == c.dim);
    CHECK(rep.regular == c.regular);
    CHECK(rep.verdicts.dimension_count == c.regular);
    CHECK(rep.verdicts.capped_resolution == c.regular);
    CHECK(rep.verdicts.regular_sequence == c.regular);
    CHECK(rep.regular_sequence.has_value() == c.regular);
    if (c.regular) {
      CHECK(rep.resolution.pdim == static_cast<std::size_t>(c.dim));
      CHECK(rep.regular_sequence->size() == rep.emb_rank);
      // Hilbert identity: H_A(t) = prod 1/(1 - t^{d_i}) over the sequence degrees.
      IntPoly prod{1};
      std::vector<std::uint32_t> degs;
      for (const auto& t : *rep.regular_sequence) degs.push_back(static_cast<std::uint32_t>(*r.homogeneous_degree(t)));
      HilbertSeries expected{prod, degs};
      auto h = hilbert_series(a);
      CHECK(h.coefficients(20) == expected.coefficients(20));
    }
    if (has_zero_divisor_witness(a)) CHECK_FALSE(rep.regular);
  }
}

TEST_CASE("Betti numbers of k over a standard polynomial ring are binomial") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto res = pdim_residue_field_capped(GradedRingPresentation::create(qq_ring(names), {}));
    REQUIRE(res.pdim == n);
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(res.betti[i].rank == binomial(n, i));
      for (auto s : res.betti[i].shifts) CHECK(s == i);
    }
  }
}

TEST_CASE("regularity over a prime field") {
  PolyRing r = fp_ring(32003, {"x", "y", "z"});
  auto rep = regularity_report(GradedRingPresentation::create(r, polys(r, {"x*y - z^2"})));
  CHECK_FALSE(rep.regular);
  PolyRing r2 = fp_ring(2, {"x", "y"});
  auto rep2 = regularity_report(GradedRingPresentation::create(r2, polys(r2, {"x + y"})));
  CHECK(rep2.regular);
  CHECK(rep2.grKdim == 1);
}

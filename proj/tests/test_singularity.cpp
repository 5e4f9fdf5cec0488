#include <doctest.h>

#include "grlab/invariants.hpp"
#include "grlab/singularity.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace grlab;
using namespace grlab::testing;

namespace {

GradedRingPresentation present(const PolyRing& r, const std::vector<std::string>& gens) {
  return GradedRingPresentation::create(r, polys(r, gens));
}

}  // namespace

TEST_CASE("jacobian_matrix examples") {
  PolyRing r = qq_ring({"x", "y", "z"});
  auto jac = jacobian_matrix(present(r, {"x*y - z^2"}));
  REQUIRE(jac.matrix.size() == 1);
  CHECK(formatted(r, jac.matrix[0]) == std::vector<std::string>{"y", "x", "-2*z"});
  CHECK(jac.codim == 1);
  CHECK(jacobian_matrix(GradedRingPresentation::create(r, {})).matrix.empty());
  PolyRing f2 = fp_ring(2, {"x"});
  auto j2 = jacobian_matrix(present(f2, {"x^2"}));
  REQUIRE(j2.matrix.size() == 1);
  CHECK(j2.matrix[0][0].is_zero());
}

TEST_CASE("singular_locus_ideal examples") {
  PolyRing r = qq_ring({"x", "y", "z"});
  auto jac = singular_locus_ideal(present(r, {"x*y - z^2"}));
  for (const char* v : {"x", "y", "z"}) CHECK(radical_membership(parse_polynomial(v, r), jac));
  CHECK(singular_locus_ideal(present(r, {"x*y"})).same_as(ideal(r, {"x", "y"})));
  CHECK(singular_locus_ideal(GradedRingPresentation::create(r, {})).is_unit());
}

TEST_CASE("is_graded_isolated_singularity examples") {
  PolyRing r = qq_ring({"x", "y", "z"});
  auto cone = is_graded_isolated_singularity(present(r, {"x*y - z^2"}));
  CHECK(cone.isolated);
  CHECK_FALSE(cone.regular);
  CHECK(cone.qgr_gldim == 1);
  CHECK(cone.singular_locus_dim == 0);
  CHECK_FALSE(cone.field_caveat.has_value());

  auto cross = is_graded_isolated_singularity(present(r, {"x*y"}));
  CHECK_FALSE(cross.isolated);
  CHECK(cross.singular_locus_dim == 1);
  CHECK_FALSE(cross.qgr_gldim.has_value());

  auto plane = is_graded_isolated_singularity(GradedRingPresentation::create(r, {}));
  CHECK(plane.isolated);
  CHECK(plane.regular);
  CHECK(plane.qgr_gldim == 2);
  CHECK(plane.singular_locus_dim == -1);

  auto dual = is_graded_isolated_singularity(present(qq_ring({"x"}), {"x^2"}));
  CHECK(dual.isolated);
  CHECK_FALSE(dual.qgr_gldim.has_value());

  PolyRing fp = fp_ring(32003, {"x", "y", "z"});
  auto cone_p = is_graded_isolated_singularity(present(fp, {"x*y - z^2"}));
  CHECK(cone_p.isolated);
  CHECK(cone_p.field_caveat == std::string("valid for geometrically reduced A over perfect k"));
}

TEST_CASE("hypersurfaces: isolated iff no nonzero singular point over small finite fields") {
  struct Case {
    std::vector<std::string> names;
    std::vector<std::uint32_t> weights;
    std::string f;
  };
  std::vector<Case> cases{
      {{"x", "y", "z"}, {1, 1, 1}, "x*y - z^2"},
      {{"x", "y", "z"}, {1, 1, 1}, "x^2 + y^2 + z^2"},
      {{"x", "y", "z"}, {1, 1, 1}, "x^3 + y^3 + z^3"},
      {{"x", "y", "z"}, {1, 1, 1}, "x*y"},
      {{"x", "y", "z"}, {1, 1, 1}, "x*y*z"},
      {{"x", "y", "z"}, {1, 1, 1}, "x^2*y - z^3"},
      {{"x", "y", "z"}, {1, 1, 1}, "y^2*z - x^3 - x^2*z"},
      {{"x", "y", "z", "w"}, {1, 1, 1, 1}, "x*w - y*z"},
      {{"x", "y", "z"}, {15, 10, 6}, "x^2 + y^3 + z^5"},
      {{"x", "y"}, {3, 2}, "x^2 - y^3"},
      {{"x", "y"}, {1, 1}, "x^2"},
      {{"x", "y", "z"}, {1, 1, 2}, "z^2 - x^2*y^2"},
  };
  std::vector<SmallField> fields;
  for (std::uint32_t p : {7u, 11u, 13u})
    for (std::uint32_t k : {1u, 2u, 3u}) fields.emplace_back(p, k);

  for (const auto& c : cases) {
    PolyRing r = qq_ring(c.names, c.weights);
    auto a = present(r, {c.f});
    std::vector<Polynomial> fs{a.generators()[0]};
    for (std::size_t i = 0; i < r.nvars(); ++i) fs.push_back(r.derivative(fs[0], i));
    bool projective = std::all_of(c.weights.begin(), c.weights.end(), [](auto w) { return w == 1; });
    bool singular_point = false;
    int scanned_fields = 0;
    for (const auto& k : fields) {
      bool scanned = false;
      if (has_nonzero_common_zero(k, fs, r.nvars(), projective, scanned)) {
        singular_point = true;
        break;
      }
      scanned_fields += scanned;
    }
    INFO(c.f);
    // A clean verdict needs most fields actually scanned.
    if (!singular_point) CHECK(scanned_fields >= 6);
    CHECK(is_graded_isolated_singularity(a).isolated == !singular_point);
  }
}

TEST_CASE("isolated verdict is independent of variable and generator order") {
  PolyRing r = qq_ring({"x", "y", "z", "w"});
  PolyRing s = qq_ring({"w", "z", "y", "x"});
  std::vector<std::vector<std::string>> ideals{
      {"x*z - y^2", "y*w - z^2", "x*w - y*z"},
      {"x*z", "x*w", "y*z", "y*w"},
      {"x*y", "z*w"},
      {"x*y*z"},
  };
  for (auto gens : ideals) {
    bool base = is_graded_isolated_singularity(present(r, gens)).isolated;
    CHECK(is_graded_isolated_singularity(present(s, gens)).isolated == base);
    std::reverse(gens.begin(), gens.end());
    CHECK(is_graded_isolated_singularity(present(r, gens)).isolated == base);
  }
}

TEST_CASE("regular implies isolated") {
  PolyRing r = qq_ring({"x", "y", "z"}, {1, 1, 2});
  auto rep = is_graded_isolated_singularity(present(r, {"z - x*y"}));
  CHECK(rep.regular);
  CHECK(rep.isolated);
  CHECK(rep.qgr_gldim == 1);
}

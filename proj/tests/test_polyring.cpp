#include <doctest.h>

#include <random>

#include "support/helpers.hpp"

using namespace grlab;
using namespace grlab::testing;

TEST_CASE("weighted_degree") {
  PolyRing r3 = qq_ring({"x", "y", "z"});
  CHECK(r3.weighted_degree(Monomial{1, 1, 0}) == 2);
  CHECK(r3.weighted_degree(Monomial{0, 0, 0}) == 0);
  PolyRing r2 = qq_ring({"x", "y"}, {1, 2});
  CHECK(r2.weighted_degree(Monomial{2, 0}) == 2);
}

TEST_CASE("is_homogeneous") {
  PolyRing r3 = qq_ring({"x", "y", "z"});
  auto d = r3.homogeneous_degree(parse_polynomial("x*y - z^2", r3));
  REQUIRE(d);
  CHECK(*d == 2);
  PolyRing r2 = qq_ring({"x", "y"}, {1, 2});
  auto d2 = r2.homogeneous_degree(parse_polynomial("y - x^2", r2));
  REQUIRE(d2);
  CHECK(*d2 == 2);
  PolyRing r1 = qq_ring({"x"});
  CHECK_FALSE(r1.is_homogeneous(parse_polynomial("x + x^2", r1)));
}

TEST_CASE("poly_add and poly_mul") {
  PolyRing r = qq_ring({"x", "y"});
  auto f = parse_polynomial("x + y", r), g = parse_polynomial("x - y", r);
  CHECK(r.format(r.mul(f, g)) == "x^2 - y^2");
  CHECK(r.add(f, r.neg(f)).is_zero());
  PolyRing f2 = fp_ring(2, {"x", "y"});
  auto h = parse_polynomial("x + y", f2);
  CHECK(f2.format(f2.mul(h, h)) == "x^2 + y^2");
}

TEST_CASE("s_polynomial") {
  PolyRing r = qq_ring({"x", "y"});
  CHECK(s_polynomial(r, parse_polynomial("x^2", r), parse_polynomial("x*y", r)).is_zero());
  auto f = parse_polynomial("x^2 + y^2", r);
  CHECK(s_polynomial(r, f, f).is_zero());
  PolyRing lex = qq_ring({"x", "y"}, {}, TermOrder::Lex);
  // y*(x^2 - y) - x*(x*y - 1) = x - y^2
  auto s = s_polynomial(lex, parse_polynomial("x^2 - y", lex), parse_polynomial("x*y - 1", lex));
  CHECK(lex.format(s) == "x - y^2");
}

TEST_CASE("weighted grevlex tie-breaking") {
  PolyRing r = qq_ring({"x", "y", "z"});
  // Same degree: rightmost differing exponent, smaller wins.
  CHECK(r.compare(Monomial{1, 1, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(r.compare(Monomial{2, 0, 0}, Monomial{0, 2, 0}) > 0);
  CHECK(r.compare(Monomial{0, 0, 2}, Monomial{1, 0, 0}) > 0);  // degree first
  PolyRing w = qq_ring({"x", "y"}, {1, 3});
  CHECK(w.compare(Monomial{0, 1}, Monomial{2, 0}) > 0);
  CHECK(w.compare(Monomial{3, 0}, Monomial{0, 1}) > 0);  // revlex tie at degree 3
}

TEST_CASE("term order laws on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Exponent> e(0, 4);
  for (TermOrder order : {TermOrder::WeightedGrevlex, TermOrder::Lex}) {
    PolyRing r = qq_ring({"a", "b", "c", "d"}, {1, 2, 1, 3}, order);
    auto random_mono = [&] { return Monomial{e(rng), e(rng), e(rng), e(rng)}; };
    for (int t = 0; t < 2000; ++t) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      int ab = r.compare(a, b);
      CHECK(ab == -r.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0 && r.compare(b, c) < 0) CHECK(r.compare(a, c) < 0);
      if (ab < 0) CHECK(r.compare(a * c, b * c) < 0);
      CHECK(r.compare(a * c, a) >= 0);
    }
  }
}

TEST_CASE("homogeneity preserved by add and mul") {
  PolyRing r = qq_ring({"x", "y", "z"}, {1, 2, 3});
  auto f = parse_polynomial("x^3 + x*y - z", r), g = parse_polynomial("y^3 + x*z*y - z^2", r);
  auto h = parse_polynomial("2*x^3 + z", r);
  CHECK(*r.homogeneous_degree(r.add(f, h)) == 3);
  CHECK(*r.homogeneous_degree(r.mul(f, g)) == 9);
}

TEST_CASE("formal derivative") {
  PolyRing r = qq_ring({"x", "y", "z"});
  auto f = parse_polynomial("x*y - z^2", r);
  CHECK(r.format(r.derivative(f, 0)) == "y");
  CHECK(r.format(r.derivative(f, 1)) == "x");
  CHECK(r.format(r.derivative(f, 2)) == "-2*z");
  PolyRing f2 = fp_ring(2, {"x"});
  CHECK(f2.derivative(parse_polynomial("x^2", f2), 0).is_zero());
}

TEST_CASE("ring construction validation") {
  CHECK_THROWS_AS(qq_ring({"x", "x"}), InvalidInputError);
  CHECK_THROWS_AS(qq_ring({"x", "y"}, {1, 0}), InvalidInputError);
  CHECK_THROWS_AS(qq_ring({"1x"}), InvalidInputError);
}

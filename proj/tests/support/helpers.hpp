#pragma once

#include <string>
#include <vector>

#include "grlab/groebner.hpp"
#include "grlab/polyparse.hpp"

namespace grlab::testing {

inline PolyRing qq_ring(std::vector<std::string> names, std::vector<std::uint32_t> weights = {},
                        TermOrder order = TermOrder::WeightedGrevlex) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return PolyRing(Field(FieldSpec::rational()), std::move(names), std::move(weights), order);
}

inline PolyRing fp_ring(std::uint32_t p, std::vector<std::string> names, std::vector<std::uint32_t> weights = {}) {
  if (weights.empty()) weights.assign(names.size(), 1);
  return PolyRing(Field(FieldSpec::prime(p)), std::move(names), std::move(weights));
}

inline std::vector<Polynomial> polys(const PolyRing& ring, const std::vector<std::string>& srcs) {
  std::vector<Polynomial> out;
  for (const auto& s : srcs) out.push_back(parse_polynomial(s, ring));
  return out;
}

inline Ideal ideal(const PolyRing& ring, const std::vector<std::string>& srcs) {
  return Ideal(ring, polys(ring, srcs));
}

inline std::vector<std::string> formatted(const PolyRing& ring, const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(ring.format(f));
  return out;
}

}  // namespace grlab::testing

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "drinfeld/base_poly.hpp"
#include "drinfeld/finite_field.hpp"

namespace testing_support {

using drinfeld::BasePoly;
using drinfeld::Coef;
using drinfeld::FFElem;
using drinfeld::FieldPtr;
using drinfeld::GFqPtr;

inline constexpr int kCases = 200;

inline Coef random_coef(std::mt19937_64& rng, const GFqPtr& gf) {
  return static_cast<Coef>(rng() % gf->q());
}

inline FFElem random_elem(std::mt19937_64& rng, const FieldPtr& k) {
  std::vector<Coef> c(static_cast<std::size_t>(k->degree()));
  for (auto& x : c) x = random_coef(rng, k->base());
  return FFElem(k, c);
}

inline FFElem random_nonzero(std::mt19937_64& rng, const FieldPtr& k) {
  for (;;) {
    FFElem x = random_elem(rng, k);
    if (!x.is_zero()) return x;
  }
}

/// Uniform polynomial of degree at most `max_deg`.
inline BasePoly random_poly(std::mt19937_64& rng, const GFqPtr& gf, int max_deg) {
  std::vector<Coef> c(static_cast<std::size_t>(max_deg + 1));
  for (auto& x : c) x = random_coef(rng, gf);
  return BasePoly(gf, c);
}

inline BasePoly random_nonzero_poly(std::mt19937_64& rng, const GFqPtr& gf, int max_deg) {
  for (;;) {
    BasePoly f = random_poly(rng, gf, max_deg);
    if (!f.is_zero()) return f;
  }
}

inline BasePoly poly(const GFqPtr& gf, std::vector<Coef> c) { return BasePoly(gf, std::move(c)); }

}  // namespace testing_support

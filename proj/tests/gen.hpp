#pragma once

#include <random>

#include "pinosp/suites.hpp"

namespace gen {

using namespace pinosp;

inline Rational rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline BaseNumber base(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  BaseNumber b(rational(rng));
  if (coin(rng) == 0) b += BaseNumber(rational(rng)) * BaseNumber::i();
  if (coin(rng) == 0) b += BaseNumber(rational(rng)) * BaseNumber::sqrt2();
  return b;
}

/// Random polynomial in `classes` kappa indeterminates, degree <= 2.
inline Scalar scalar(std::mt19937_64& rng, int classes) {
  std::uniform_int_distribution<int> terms(0, 3), cls(0, std::max(classes - 1, 0)), pw(0, 2);
  Scalar s(base(rng));
  int n = terms(rng);
  for (int t = 0; t < n && classes > 0; ++t) {
    Scalar m(base(rng));
    int p = pw(rng);
    for (int k = 0; k < p; ++k) m = m * Scalar::kappa(cls(rng));
    s += m;
  }
  return s;
}

inline Covector covector(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> c(-2, 2);
  Covector u = basis_covector(d, 0);
  for (int p = 0; p < d; ++p) u.coords[p] = Scalar(c(rng));
  return u;
}

/// Parity-homogeneous random element.
inline Element homogeneous(const AlgebraPtr& ctx, std::mt19937_64& rng, int parity, int terms = 3, int max_degree = 2) {
  for (;;) {
    Element a = random_element(ctx, rng, terms + 2, max_degree);
    Element h = parity ? a.odd_part() : a.even_part();
    if (!h.is_zero()) return h;
  }
}

}  // namespace gen

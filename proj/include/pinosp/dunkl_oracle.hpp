#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pinosp/algebra.hpp"

namespace pinosp {

/// Polynomial in x_1..x_d with Scalar coefficients, keyed by packed exponents.
using Polynomial = std::map<std::uint64_t, Scalar>;

/// Element of S(V*) (x) spinors: keys are (x exponents, subset of {1..ell}
/// labelling theta^+ monomials).
struct PolySpinor {
  std::map<std::pair<std::uint64_t, std::uint32_t>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  PolySpinor& operator+=(const PolySpinor& o);
  PolySpinor& operator-=(const PolySpinor& o);
  friend bool operator==(const PolySpinor&, const PolySpinor&) = default;
  std::string to_string(int dim) const;
};

/// The module S(V*) (x) S on which A_kappa acts by multiplication, Dunkl
/// operators, substitution and Clifford action on spinors. Computed without
/// the engine's rewriting rules, so it serves as an independent check.
class DunklOracle {
 public:
  /// `sector` is the theta_0 sign for odd d. Throws unless B is the identity.
  explicit DunklOracle(AlgebraPtr ctx, int sector = 1);

  const AlgebraPtr& context() const { return ctx_; }
  int spinor_rank() const { return ell_; }
  int sector() const { return sector_; }

  /// Dunkl operator D_y f = d_y f + sum_s kappa_s <y, alpha_s> (f - s f) / alpha_s.
  Polynomial dunkl(const Vector& y, const Polynomial& f) const;
  /// g acting on a polynomial by substitution.
  Polynomial act_group(int g, const Polynomial& f) const;
  /// Exact division by a linear form; throws std::logic_error on nonzero remainder.
  Polynomial divide_linear(const Polynomial& f, const Covector& alpha) const;

  PolySpinor act(const Element& a, const PolySpinor& v) const;
  /// Clifford generator e_p (0-based) on spinors.
  PolySpinor act_clifford(int p, const PolySpinor& v) const;

  /// Deterministic pseudo-random vector with polynomial degree <= max_degree.
  PolySpinor random_vector(std::uint64_t seed, int max_degree) const;

 private:
  PolySpinor act_monomial(const Monomial& m, const Scalar& c, const PolySpinor& v) const;

  AlgebraPtr ctx_;
  int dim_;
  int ell_;
  int sector_;
};

}  // namespace pinosp

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pinosp/algebra.hpp"

namespace pinosp {

/// Basis of the auxiliary superspace: x^+, x^- (even) and gamma (odd).
enum class Aux { xplus, xminus, gamma };

/// The osp(1|2) realization in A_kappa. X = sqrt2 F^+ and D = sqrt2 F^-
/// keep everything rational; F^+- carry the sqrt2.
class Osp {
 public:
  /// Builds the generators; with `verify` set, checks the osp(1|2) relations
  /// and throws std::logic_error if one fails.
  explicit Osp(AlgebraPtr ctx, bool verify = false);

  const AlgebraPtr& context() const { return ctx_; }
  const Element& X() const { return X_; }
  const Element& D() const { return D_; }
  const Element& H() const { return H_; }
  const Element& Ep() const { return Ep_; }
  const Element& Em() const { return Em_; }
  const Element& omega_kappa() const { return omega_kappa_; }
  Element Fp() const;
  Element Fm() const;

  /// Residuals of the rationalized relations; all vanish in a realization.
  struct Relation {
    std::string id;
    Element residual;
  };
  std::vector<Relation> relation_residuals() const;

  /// (w . z)(B) from the symmetric defining sum.
  Element pair_element(Aux w, Aux z) const;
  /// x_p (x) w as an element: x_p, beta(x_p) or e_p (p 0-based).
  Element aux(int p, Aux w) const;

  /// P_+(a) = a - [F^-, [F^+, a]], P_-(a) = a + [F^+, [F^-, a]].
  Element P_plus(const Element& a) const;
  Element P_minus(const Element& a) const;
  Element P(const Element& a, int sign) const { return sign > 0 ? P_plus(a) : P_minus(a); }
  /// sl(2) extremal projector on weight-zero elements; throws if [H, a] != 0
  /// or ad(E^+) is not nilpotent on a within `bound` steps (default 2 deg + 4).
  Element P_alpha(const Element& a, int bound = -1) const;
  /// Q^+-(a) = (H +- 1) a - F^-+ [F^+-, a]; Q^-(a) is a generalized symmetry of D
  /// when [E^-, a] = b D.
  Element Q_plus(const Element& a) const;
  Element Q_minus(const Element& a) const;
  /// R_u = Q^-(gamma_u) = (H - 1) gamma_u - X beta(u); D R_u = -(R_u + gamma_u) D.
  Element R(const Covector& u) const;

  Element casimir() const;
  Element scasimir() const;

 private:
  AlgebraPtr ctx_;
  Element X_, D_, H_, Ep_, Em_, omega_kappa_;
};

/// Omega_kappa = sum_s kappa(s) s.
Element omega_kappa(const AlgebraPtr& ctx);
/// Total x/y degree of the highest term.
int xy_degree(const Element& a);

}  // namespace pinosp

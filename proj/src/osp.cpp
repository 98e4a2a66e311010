#include "pinosp/osp.hpp"

#include <stdexcept>

namespace pinosp {

Element omega_kappa(const AlgebraPtr& ctx) {
  Element out(ctx);
  for (const auto& r : ctx->group().reflections()) out += ctx->kappa(r.cls) * Element::group(ctx, r.element);
  return out;
}

int xy_degree(const Element& a) {
  int deg = 0;
  for (const auto& [m, c] : a.terms()) deg = std::max(deg, m.x.degree() + m.y.degree());
  return deg;
}

namespace {

// Image of x_p under u (x) w for the auxiliary basis vector w.
Element aux_image(const AlgebraPtr& ctx, int p, Aux w) {
  int d = ctx->dim();
  switch (w) {
    case Aux::xplus:
      return Element::x(ctx, p);
    case Aux::xminus:
      return Element::linear(ctx, ctx->space().beta(basis_covector(d, p)));
    case Aux::gamma:
      return Element::e(ctx, p);
  }
  throw std::logic_error("unknown auxiliary basis vector");
}

}  // namespace

Osp::Osp(AlgebraPtr ctx, bool verify) : ctx_(std::move(ctx)) {
  int d = ctx_->dim();
  const Matrix& bd = ctx_->space().gram_dual();
  const Matrix& b = ctx_->space().gram();
  X_ = D_ = H_ = Ep_ = Em_ = Element(ctx_);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (!bd[p][q].is_zero()) {
        Scalar c(bd[p][q]);
        X_ += c * (Element::x(ctx_, p) * Element::e(ctx_, q));
        Ep_ += (c / BaseNumber(2)) * (Element::x(ctx_, p) * Element::x(ctx_, q));
      }
      if (!b[p][q].is_zero()) Em_ -= (Scalar(b[p][q]) / BaseNumber(2)) * (Element::y(ctx_, p) * Element::y(ctx_, q));
    }
  omega_kappa_ = pinosp::omega_kappa(ctx_);
  H_ = Element::scalar(ctx_, Scalar(frac(d, 2))) + omega_kappa_;
  for (int p = 0; p < d; ++p) {
    D_ += Element::y(ctx_, p) * Element::e(ctx_, p);
    H_ += Element::x(ctx_, p) * Element::y(ctx_, p);
  }
  if (verify)
    for (const auto& r : relation_residuals())
      if (!r.residual.is_zero()) throw std::logic_error("osp(1|2) relation " + r.id + " fails: " + r.residual.to_string());
}

Element Osp::Fp() const { return Scalar(BaseNumber(0, 0, Rational(1, 2), 0)) * X_; }
Element Osp::Fm() const { return Scalar(BaseNumber(0, 0, Rational(1, 2), 0)) * D_; }

std::vector<Osp::Relation> Osp::relation_residuals() const {
  auto sc = [](const Element& a, const Element& b) { return supercommutator(a, b); };
  return {
      {"FpFm", sc(X_, D_) - Scalar(2) * H_},
      {"HF+", sc(H_, X_) - X_},
      {"HF-", sc(H_, D_) + D_},
      {"FF+", sc(X_, X_) - Scalar(4) * Ep_},
      {"FF-", sc(D_, D_) + Scalar(4) * Em_},
      {"EpEm", sc(Ep_, Em_) - H_},
      {"HE+", sc(H_, Ep_) - Scalar(2) * Ep_},
      {"HE-", sc(H_, Em_) + Scalar(2) * Em_},
      {"FE+", sc(X_, Em_) - D_},
      {"FE-", sc(D_, Ep_) - X_},
  };
}

Element Osp::pair_element(Aux w, Aux z) const {
  int d = ctx_->dim();
  const Matrix& bd = ctx_->space().gram_dual();
  int sign = (w == Aux::gamma && z == Aux::gamma) ? -1 : 1;
  Element out(ctx_);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (bd[p][q].is_zero()) continue;
      Element t = aux_image(ctx_, p, w) * aux_image(ctx_, q, z);
      Element u = aux_image(ctx_, p, z) * aux_image(ctx_, q, w);
      out += Scalar(bd[p][q] / BaseNumber(2)) * (sign > 0 ? t + u : t - u);
    }
  return out;
}

Element Osp::aux(int p, Aux w) const { return aux_image(ctx_, p, w); }

Element Osp::P_plus(const Element& a) const {
  return a - Scalar(Rational(1, 2)) * supercommutator(D_, supercommutator(X_, a));
}

Element Osp::P_minus(const Element& a) const {
  return a + Scalar(Rational(1, 2)) * supercommutator(X_, supercommutator(D_, a));
}

Element Osp::P_alpha(const Element& a, int bound) const {
  if (!supercommutator(H_, a).is_zero()) throw std::invalid_argument("P_alpha needs a weight-zero element ([H, a] = 0)");
  if (bound < 0) bound = 2 * xy_degree(a) + 4;
  Element result = a;
  Element raised = a;
  Rational fact = 1;  // k! (k+1)!
  for (int k = 1;; ++k) {
    raised = supercommutator(Ep_, raised);
    if (raised.is_zero()) break;
    if (k > bound) throw std::runtime_error("ad(E+) is not nilpotent on the argument within " + std::to_string(bound) + " steps");
    fact *= Rational(k) * Rational(k + 1);
    Element lowered = raised;
    for (int j = 0; j < k; ++j) lowered = supercommutator(Em_, lowered);
    result += Scalar((k % 2 ? Rational(-1) : Rational(1)) / fact) * lowered;
  }
  return result;
}

Element Osp::Q_plus(const Element& a) const {
  Element one = Element::scalar(ctx_, 1);
  return (H_ + one) * a - Scalar(Rational(1, 2)) * (D_ * supercommutator(X_, a));
}

Element Osp::Q_minus(const Element& a) const {
  Element one = Element::scalar(ctx_, 1);
  return (H_ - one) * a - Scalar(Rational(1, 2)) * (X_ * supercommutator(D_, a));
}

Element Osp::R(const Covector& u) const {
  Element one = Element::scalar(ctx_, 1);
  return (H_ - one) * Element::gamma(ctx_, u) - X_ * Element::linear(ctx_, ctx_->space().beta(u));
}

Element Osp::casimir() const {
  return H_ * H_ + Scalar(2) * (Ep_ * Em_ + Em_ * Ep_) - Scalar(Rational(1, 2)) * (X_ * D_ - D_ * X_);
}

Element Osp::scasimir() const {
  return Scalar(Rational(1, 2)) * (X_ * D_ - D_ * X_) + Element::scalar(ctx_, Scalar(Rational(1, 2)));
}

}  // namespace pinosp

#include "pinosp/dunkl_oracle.hpp"

#include <random>
#include <stdexcept>

namespace pinosp {

namespace {

int exponent(std::uint64_t key, int p) { return static_cast<int>((key >> (8 * p)) & 0xff); }

std::uint64_t bump(std::uint64_t key, int p, int delta) {
  int e = exponent(key, p) + delta;
  if (e < 0 || e > 255) throw std::overflow_error("oracle exponent out of range");
  return (key & ~(0xffULL << (8 * p))) | (static_cast<std::uint64_t>(e) << (8 * p));
}

void add_term(Polynomial& f, std::uint64_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, int dim) {
  Polynomial out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::uint64_t k = ka;
      for (int p = 0; p < dim; ++p)
        if (int e = exponent(kb, p)) k = bump(k, p, e);
      add_term(out, k, ca * cb);
    }
  return out;
}

Polynomial poly_sub(Polynomial a, const Polynomial& b) {
  for (const auto& [k, c] : b) add_term(a, k, -c);
  return a;
}

void add_spinor(PolySpinor& v, std::uint64_t poly, std::uint32_t label, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.terms.try_emplace({poly, label}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.terms.erase(it);
  }
}

}  // namespace

PolySpinor& PolySpinor::operator+=(const PolySpinor& o) {
  for (const auto& [k, c] : o.terms) add_spinor(*this, k.first, k.second, c);
  return *this;
}

PolySpinor& PolySpinor::operator-=(const PolySpinor& o) {
  for (const auto& [k, c] : o.terms) add_spinor(*this, k.first, k.second, -c);
  return *this;
}

std::string PolySpinor::to_string(int dim) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (int p = 0; p < dim; ++p)
      if (int e = exponent(k.first, p)) out += "*x" + std::to_string(p + 1) + (e > 1 ? "^" + std::to_string(e) : "");
    out += "*theta{";
    bool first = true;
    for (int j = 0; j < 32; ++j)
      if (k.second >> j & 1) {
        out += (first ? "" : ",") + std::to_string(j + 1);
        first = false;
      }
    out += "}";
  }
  return out;
}

DunklOracle::DunklOracle(AlgebraPtr ctx, int sector) : ctx_(std::move(ctx)), sector_(sector) {
  if (!ctx_->space().is_orthonormal())
    throw std::invalid_argument("the spinor oracle needs an orthonormal basis (identity Gram)");
  if (sector != 1 && sector != -1) throw std::invalid_argument("sector must be +1 or -1");
  dim_ = ctx_->dim();
  ell_ = dim_ / 2;
}

Polynomial DunklOracle::act_group(int g, const Polynomial& f) const {
  const Matrix& m = ctx_->group().covector_matrix(g);
  std::vector<Polynomial> images(dim_);
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q)
      if (!m[q][p].is_zero()) add_term(images[p], bump(0, q, 1), Scalar(m[q][p]));
  Polynomial out;
  for (const auto& [k, c] : f) {
    Polynomial term{{0, c}};
    for (int p = 0; p < dim_; ++p)
      for (int e = 0; e < exponent(k, p); ++e) term = poly_mul(term, images[p], dim_);
    for (const auto& [kk, cc] : term) add_term(out, kk, cc);
  }
  return out;
}

Polynomial DunklOracle::divide_linear(const Polynomial& f, const Covector& alpha) const {
  int lead = -1;
  for (int p = 0; p < dim_ && lead < 0; ++p)
    if (!alpha.coords[p].is_zero()) lead = p;
  if (lead < 0) throw std::invalid_argument("division by the zero linear form");
  BaseNumber inv = alpha.coords[lead].constant_value().inverse();
  Polynomial rem = f, quot;
  while (!rem.empty()) {
    // term with the largest power of the lead variable
    auto best = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (exponent(it->first, lead) > exponent(best->first, lead)) best = it;
    if (exponent(best->first, lead) == 0)
      throw std::logic_error("nonzero remainder dividing by a root; group data is inconsistent");
    std::uint64_t qk = bump(best->first, lead, -1);
    Scalar qc = best->second.scaled(inv);
    add_term(quot, qk, qc);
    for (int p = 0; p < dim_; ++p)
      if (!alpha.coords[p].is_zero()) add_term(rem, bump(qk, p, 1), -(qc * alpha.coords[p]));
  }
  return quot;
}

Polynomial DunklOracle::dunkl(const Vector& y, const Polynomial& f) const {
  Polynomial out;
  for (const auto& [k, c] : f)
    for (int q = 0; q < dim_; ++q) {
      int e = exponent(k, q);
      if (e == 0 || y.coords[q].is_zero()) continue;
      add_term(out, bump(k, q, -1), (c * y.coords[q]).scaled(BaseNumber(e)));
    }
  for (const auto& r : ctx_->group().reflections()) {
    Scalar w = pairing(y, r.root);
    if (w.is_zero()) continue;
    Polynomial diff = poly_sub(f, act_group(r.element, f));
    Polynomial quot = divide_linear(diff, r.root);
    Scalar coef = ctx_->kappa(r.cls) * w;
    for (const auto& [k, c] : quot) add_term(out, k, coef * c);
  }
  return out;
}

PolySpinor DunklOracle::act_clifford(int p, const PolySpinor& v) const {
  PolySpinor out;
  if (dim_ % 2 == 1 && p == dim_ - 1) {
    for (const auto& [k, c] : v.terms) {
      int sign = sector_ * ((__builtin_popcount(k.second) % 2) ? -1 : 1);
      add_spinor(out, k.first, k.second, c.scaled(BaseNumber(sign)));
    }
    return out;
  }
  int j = p / 2;
  std::uint32_t bit = 1u << j;
  // e_{2j-1} = theta_j^+ + theta_j^-, e_{2j} = -i (theta_j^+ - theta_j^-)
  BaseNumber wedge_coef = p % 2 == 0 ? BaseNumber(1) : -BaseNumber::i();
  BaseNumber contract_coef = p % 2 == 0 ? BaseNumber(1) : BaseNumber::i();
  for (const auto& [k, c] : v.terms) {
    int sign = __builtin_popcount(k.second & (bit - 1)) % 2 ? -1 : 1;
    if (k.second & bit)
      add_spinor(out, k.first, k.second ^ bit, c.scaled(contract_coef * BaseNumber(sign)));
    else
      add_spinor(out, k.first, k.second | bit, c.scaled(wedge_coef * BaseNumber(sign)));
  }
  return out;
}

// Word x^a y^b g e_A acts right to left: Clifford part, group, Dunkl operators, multiplication.
PolySpinor DunklOracle::act_monomial(const Monomial& m, const Scalar& c, const PolySpinor& v) const {
  PolySpinor cur = v;
  for (int p = dim_ - 1; p >= 0; --p)
    if (m.clifford >> p & 1) cur = act_clifford(p, cur);
  std::map<std::uint32_t, Polynomial> by_label;
  for (const auto& [k, coef] : cur.terms) add_term(by_label[k.second], k.first, coef);
  PolySpinor out;
  for (auto& [label, f] : by_label) {
    if (m.group) f = act_group(static_cast<int>(m.group), f);
    for (int q = 0; q < dim_; ++q)
      for (int e = 0; e < m.y[q]; ++e) f = dunkl(basis_vector(dim_, q), f);
    for (const auto& [k, coef] : f) {
      std::uint64_t key = k;
      for (int p = 0; p < dim_; ++p)
        if (m.x[p]) key = bump(key, p, m.x[p]);
      add_spinor(out, key, label, c * coef);
    }
  }
  return out;
}

PolySpinor DunklOracle::act(const Element& a, const PolySpinor& v) const {
  if (a.context() && a.context() != ctx_) throw std::invalid_argument("element and module belong to different algebras");
  PolySpinor out;
  for (const auto& [m, c] : a.terms()) out += act_monomial(m, c, v);
  return out;
}

PolySpinor DunklOracle::random_vector(std::uint64_t seed, int max_degree) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 4), num(-3, 3), den(1, 3), coin(0, 3);
  std::uniform_int_distribution<int> var(0, dim_ - 1), deg(0, std::max(max_degree, 0));
  std::uniform_int_distribution<std::uint32_t> label(0, (1u << ell_) - 1);
  PolySpinor v;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    std::uint64_t key = 0;
    int total = deg(rng);
    for (int k = 0; k < total; ++k) key = bump(key, var(rng), 1);
    int a = num(rng);
    if (a == 0) a = 1;
    Rational q(a, den(rng));
    q.canonicalize();
    BaseNumber c(q);
    if (coin(rng) == 0) c = c * BaseNumber::i();
    add_spinor(v, key, label(rng), Scalar(c));
  }
  return v;
}

}  // namespace pinosp

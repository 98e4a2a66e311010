#include "pinosp/supercentralizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pinosp {

namespace {

std::string key_of(const std::vector<Covector>& us) {
  std::string key;
  for (const auto& u : us) {
    for (const auto& c : u.coords) key += c.to_string() + ",";
    key += ";";
  }
  return key;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Element antisymmetrized_product(const AlgebraPtr& ctx, const std::vector<Covector>& us,
                                const std::vector<int>& sizes, const std::vector<SkewFactor>& factors) {
  if (sizes.size() != factors.size()) throw std::invalid_argument("one block size per factor");
  int n = static_cast<int>(us.size());
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != n)
    throw std::invalid_argument("block sizes must add up to the number of indices");
  std::vector<int> labels;
  for (std::size_t b = 0; b < sizes.size(); ++b) labels.insert(labels.end(), sizes[b], static_cast<int>(b));
  Rational weight = factorial(n);
  for (int s : sizes) weight /= factorial(s);
  Element acc(ctx);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels[i] > labels[j]) ++inversions;
    Element term = Element::scalar(ctx, inversions % 2 ? -1 : 1);
    for (std::size_t b = 0; b < sizes.size() && !term.is_zero(); ++b) {
      std::vector<Covector> block;
      for (int i = 0; i < n; ++i)
        if (labels[i] == static_cast<int>(b)) block.push_back(us[i]);
      term = term * factors[b](block);
    }
    acc += term;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return Scalar(1 / weight) * acc;
}

Supercentralizer::Supercentralizer(AlgebraPtr ctx) : ctx_(std::move(ctx)), osp_(std::make_unique<Osp>(ctx_)) {}

Element Supercentralizer::ocal(const Covector& u) const {
  Element out(ctx_);
  for (const auto& r : ctx_->group().reflections()) {
    Scalar w = pairing(r.coroot, u);
    if (w.is_zero()) continue;
    out += (ctx_->kappa(r.cls) * w / BaseNumber(2)) * (Element::group(ctx_, r.element) * Element::gamma(ctx_, r.root));
  }
  return out;
}

Element Supercentralizer::M(const Covector& u, const Covector& v) const {
  const auto& space = ctx_->space();
  return Element::linear(ctx_, u) * Element::linear(ctx_, space.beta(v)) -
         Element::linear(ctx_, v) * Element::linear(ctx_, space.beta(u));
}

Element Supercentralizer::gamma_wedge(const std::vector<Covector>& us) const { return antisymmetrize(ctx_, us); }

void Supercentralizer::check_arity(std::size_t n) const {
  if (n < 1 || static_cast<int>(n) > dim())
    throw std::invalid_argument("O needs between 1 and " + std::to_string(dim()) + " indices, got " + std::to_string(n));
}

Element Supercentralizer::O(const std::vector<Covector>& us) const {
  check_arity(us.size());
  std::string key = key_of(us);
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Element value = Scalar(frac(-1, 2)) * osp_->P_plus(gamma_wedge(us));
  std::lock_guard lock(mu_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

Element Supercentralizer::O_explicit(const std::vector<Covector>& us, Route form) const {
  if (form == Route::projector) return O(us);
  check_arity(us.size());
  long n = static_cast<long>(us.size());
  SkewFactor wedge = [this](const std::vector<Covector>& v) { return gamma_wedge(v); };
  SkewFactor one = [this](const std::vector<Covector>& v) { return ocal(v[0]); };
  Element out(ctx_);
  if (form == Route::first) {
    out += Scalar(frac(n - 1, 2)) * gamma_wedge(us);
    out += Scalar(n) * antisymmetrized_product(ctx_, us, {1, static_cast<int>(n - 1)}, {one, wedge});
    if (n >= 2) {
      SkewFactor m = [this](const std::vector<Covector>& v) { return M(v[0], v[1]); };
      out += Scalar(frac(n * (n - 1), 2)) * antisymmetrized_product(ctx_, us, {2, static_cast<int>(n - 2)}, {m, wedge});
    }
    return out;
  }
  if (n <= 2) return O_explicit(us, Route::first);
  out -= Scalar(frac((n - 1) * (n - 2), 4)) * gamma_wedge(us);
  out -= Scalar(n * (n - 2)) * antisymmetrized_product(ctx_, us, {1, static_cast<int>(n - 1)}, {one, wedge});
  SkewFactor two = [this](const std::vector<Covector>& v) { return O_explicit(v, Route::first); };
  out += Scalar(frac(n * (n - 1), 2)) * antisymmetrized_product(ctx_, us, {2, static_cast<int>(n - 2)}, {two, wedge});
  return out;
}

OElement Supercentralizer::build(const std::vector<Covector>& us, Route route) const {
  return {us, route, O_explicit(us, route)};
}

Element Supercentralizer::O_subset(const std::vector<int>& A) const {
  if (A.empty()) throw std::invalid_argument("O_A needs a nonempty index subset");
  std::vector<int> sorted = A;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("O_A needs distinct indices");
  std::vector<Covector> us;
  for (int a : sorted) {
    if (a < 1 || a > dim()) throw std::invalid_argument("index " + std::to_string(a) + " is outside 1.." + std::to_string(dim()));
    us.push_back(x(a - 1));
  }
  return O(us);
}

Element Supercentralizer::O_top() const {
  std::vector<int> all(dim());
  std::iota(all.begin(), all.end(), 1);
  return O_subset(all);
}

Element Supercentralizer::central_omega() const {
  if (!ctx_->space().is_orthonormal()) throw std::invalid_argument("the central element is defined for an orthonormal basis");
  int d = dim();
  Element out(ctx_);
  for (int j = 1; j <= d; ++j) {
    Element oj = O_subset({j});
    out += Scalar(d - 2) * (oj * oj);
    for (int k = j + 1; k <= d; ++k) {
      Element ojk = O_subset({j, k});
      out += ojk * ojk;
    }
  }
  return out;
}

std::size_t Supercentralizer::cached() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

}  // namespace pinosp

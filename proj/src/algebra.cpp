#include "pinosp/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pinosp {

void Exponents::set(int p, int e) {
  if (e < 0 || e > 255) throw std::overflow_error("exponent out of range 0..255");
  bits = (bits & ~(0xffULL << (8 * p))) | (static_cast<std::uint64_t>(e) << (8 * p));
}

int Exponents::degree() const {
  int d = 0;
  for (int p = 0; p < 8; ++p) d += (*this)[p];
  return d;
}

Exponents operator+(Exponents a, Exponents b) {
  for (int p = 0; p < 8; ++p)
    if (b[p]) a.add(p, b[p]);
  return a;
}

namespace {

// Lexicographic with the first coordinate heaviest: x1^2 before x1*x2 before x2^2.
int compare_exponents(Exponents a, Exponents b) {
  for (int p = 0; p < 8; ++p)
    if (a[p] != b[p]) return a[p] > b[p] ? -1 : 1;
  return 0;
}

Exponents unit(int p, int e = 1) {
  Exponents x;
  x.set(p, e);
  return x;
}

using PolyMap = std::unordered_map<std::uint64_t, BaseNumber>;

Algebra::Poly to_poly(const PolyMap& m) {
  Algebra::Poly out;
  for (const auto& [k, v] : m)
    if (!v.is_zero()) out.push_back({Exponents{k}, v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.bits < b.first.bits; });
  return out;
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.x.degree() + a.y.degree(), db = b.x.degree() + b.y.degree();
  if (da != db) return da < db;
  if (int c = compare_exponents(a.x, b.x)) return c < 0;
  if (int c = compare_exponents(a.y, b.y)) return c < 0;
  if (a.group != b.group) return a.group < b.group;
  int pa = __builtin_popcount(a.clifford), pb = __builtin_popcount(b.clifford);
  if (pa != pb) return pa < pb;
  return a.clifford < b.clifford;
}

Algebra::Algebra(std::shared_ptr<const ReflectionGroup> group, std::vector<std::string> labels,
                 std::optional<std::vector<BaseNumber>> values)
    : group_(std::move(group)), kappa_labels_(std::move(labels)) {
  int classes = group_->class_count();
  if (values && static_cast<int>(values->size()) != classes)
    throw std::invalid_argument("expected " + std::to_string(classes) + " kappa values, got " + std::to_string(values->size()));
  numeric_ = values.has_value();
  for (int c = 0; c < classes; ++c) kappa_.push_back(values ? Scalar((*values)[c]) : Scalar::kappa(c));
  orthonormal_ = group_->space().is_orthonormal();
  for (const auto& r : group_->reflections()) {
    std::vector<BaseNumber> root, coroot;
    for (const auto& c : r.root.coords) root.push_back(c.constant_value());
    for (const auto& c : r.coroot.coords) coroot.push_back(c.constant_value());
    root_.push_back(std::move(root));
    coroot_.push_back(std::move(coroot));
  }
  if (kappa_labels_.empty())
    for (int c = 0; c < group_->class_count(); ++c) kappa_labels_.push_back("k" + std::to_string(c + 1));
}

std::shared_ptr<const Algebra> Algebra::create(std::shared_ptr<const ReflectionGroup> group,
                                               std::vector<std::string> kappa_labels,
                                               std::optional<std::vector<BaseNumber>> kappa_values) {
  return std::shared_ptr<const Algebra>(
      new Algebra(std::move(group), std::move(kappa_labels), std::move(kappa_values)));
}

std::size_t Algebra::cache_entries() const {
  std::size_t n = 0;
  auto count = [&n](auto& cache) {
    std::lock_guard lock(cache.mu);
    n += cache.map.size();
  };
  count(act_cache_);
  count(dd_cache_);
  count(yx_cache_);
  count(ygx_cache_);
  count(cliff_cache_);
  return n;
}

// Looks up or computes a cache entry. The computation runs unlocked (it may
// recurse into the same cache); the first inserted value wins.
template <class Cache, class Key, class Fn>
static const auto& cached(Cache& cache, const Key& key, Fn&& compute) {
  {
    std::lock_guard lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return *it->second;
  }
  auto value = std::make_unique<std::remove_cvref_t<decltype(compute())>>(compute());
  std::lock_guard lock(cache.mu);
  auto [it, inserted] = cache.map.try_emplace(key, std::move(value));
  return *it->second;
}

const Algebra::Poly& Algebra::act_x(int g, Exponents c) const {
  return cached(act_cache_, Key3{c.bits, 0, static_cast<std::uint32_t>(g)},
                [&] { return compute_act(g, c, true); });
}

const Algebra::Poly& Algebra::act_y(int g, Exponents c) const {
  return cached(act_cache_, Key3{c.bits, 1, static_cast<std::uint32_t>(g)},
                [&] { return compute_act(g, c, false); });
}

Algebra::Poly Algebra::compute_act(int g, Exponents c, bool covector) const {
  if (c.bits == 0) return {{Exponents{}, BaseNumber(1)}};
  if (g == 0) return {{c, BaseNumber(1)}};
  int p = 0;
  while (c[p] == 0) ++p;
  Exponents rest = c;
  rest.add(p, -1);
  const Poly& base = covector ? act_x(g, rest) : act_y(g, rest);
  const Matrix& m = covector ? group_->covector_matrix(g) : group_->vector_matrix(g);
  PolyMap acc;
  for (const auto& [e, v] : base)
    for (int q = 0; q < dim(); ++q) {
      if (m[q][p].is_zero()) continue;
      Exponents f = e;
      f.add(q, 1);
      acc[f.bits] += v * m[q][p];
    }
  return to_poly(acc);
}

const Algebra::Poly& Algebra::divided_difference(int k, Exponents c) const {
  return cached(dd_cache_, Key3{c.bits, 0, static_cast<std::uint32_t>(k)},
                [&] { return compute_divided_difference(k, c); });
}

// Twisted Leibniz rule: Delta(x_p m) = <coroot, x_p> m + s(x_p) Delta(m).
Algebra::Poly Algebra::compute_divided_difference(int k, Exponents c) const {
  if (c.bits == 0) return {};
  int p = 0;
  while (c[p] == 0) ++p;
  Exponents rest = c;
  rest.add(p, -1);
  PolyMap acc;
  if (!coroot_[k][p].is_zero()) acc[rest.bits] += coroot_[k][p];
  const Poly& sx = act_x(group_->reflections()[k].element, unit(p));
  for (const auto& [e, v] : divided_difference(k, rest))
    for (const auto& [f, w] : sx) acc[(e + f).bits] += v * w;
  return to_poly(acc);
}

const Algebra::HPoly& Algebra::yx(Exponents b, Exponents c) const {
  return cached(yx_cache_, Key3{b.bits, c.bits, 0}, [&] { return compute_yx(b, c); });
}

// y_q x^a y^b k = x^a y^{b+e_q} k + d_q(x^a) y^b k
//               + sum_s kappa_s <y_q, alpha_s> Delta_s(x^a) s(y^b) s k.
Algebra::HPoly Algebra::compute_yx(Exponents b, Exponents c) const {
  if (b.bits == 0) return {HTerm{c, Exponents{}, 0, Scalar(1)}};
  int q = 0;
  while (b[q] == 0) ++q;
  Exponents rest = b;
  rest.add(q, -1);
  const HPoly& prev = yx(rest, c);

  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  auto key = [](Exponents x, Exponents y, int g) { return Monomial{x, y, static_cast<std::uint32_t>(g), 0}; };
  const auto& refl = group_->reflections();
  for (const auto& t : prev) {
    Exponents y1 = t.y;
    y1.add(q, 1);
    acc[key(t.x, y1, t.group)] += t.coef;
    if (int a = t.x[q]) {
      Exponents x1 = t.x;
      x1.add(q, -1);
      acc[key(x1, t.y, t.group)] += t.coef.scaled(BaseNumber(a));
    }
    for (std::size_t k = 0; k < refl.size(); ++k) {
      const BaseNumber& w = root_[k][q];
      if (w.is_zero()) continue;
      const Poly& dd = divided_difference(static_cast<int>(k), t.x);
      if (dd.empty()) continue;
      const Poly& sy = act_y(refl[k].element, t.y);
      Scalar base = (kappa_[refl[k].cls] * t.coef).scaled(w);
      int g = group_->multiply(refl[k].element, t.group);
      for (const auto& [xe, xv] : dd)
        for (const auto& [ye, yv] : sy) acc[key(xe, ye, g)] += base.scaled(xv * yv);
    }
  }
  HPoly out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back(HTerm{k.x, k.y, static_cast<int>(k.group), std::move(v)});
  return out;
}

const Algebra::HPoly& Algebra::ygx(Exponents b, int g, Exponents c) const {
  return cached(ygx_cache_, Key3{b.bits, c.bits, static_cast<std::uint32_t>(g)},
                [&] { return compute_ygx(b, g, c); });
}

// y^b g x^c = y^b (g.x^c) g.
Algebra::HPoly Algebra::compute_ygx(Exponents b, int g, Exponents c) const {
  if (g == 0) return yx(b, c);
  HPoly out;
  for (const auto& [e, v] : act_x(g, c))
    for (const auto& t : yx(b, e)) out.push_back(HTerm{t.x, t.y, group_->multiply(t.group, g), t.coef.scaled(v)});
  // act_x yields distinct exponents but different e can still collide after yx
  std::unordered_map<Monomial, Scalar, MonomialHash> merged;
  for (auto& t : out) merged[Monomial{t.x, t.y, static_cast<std::uint32_t>(t.group), 0}] += t.coef;
  HPoly res;
  for (auto& [m, v] : merged)
    if (!v.is_zero()) res.push_back(HTerm{m.x, m.y, static_cast<int>(m.group), std::move(v)});
  return res;
}

const Algebra::CliffordTerms& Algebra::clifford(std::uint32_t a, std::uint32_t c) const {
  return cached(cliff_cache_, Key3{a, c, 0}, [&] { return compute_clifford(a, c); });
}

Algebra::CliffordTerms Algebra::compute_clifford(std::uint32_t a, std::uint32_t c) const {
  if (c == 0) return {{a, BaseNumber(1)}};
  if (orthonormal_) {
    // move each generator of C leftward past the larger ones of A
    int sign = 0;
    std::uint32_t cur = a;
    for (std::uint32_t rest = c; rest; rest &= rest - 1) {
      int bit = __builtin_ctz(rest);
      sign += __builtin_popcount(cur >> (bit + 1));
      cur ^= 1u << bit;
    }
    return {{cur, BaseNumber(sign % 2 ? -1 : 1)}};
  }
  int top = 31 - __builtin_clz(c);
  std::uint32_t lower = c & ~(1u << top);
  // e_A e_C = (e_A e_{C'}) e_top with top the largest index of C.
  std::unordered_map<std::uint32_t, BaseNumber> acc;
  const Matrix& gram = space().gram();
  // e_M e_t for a single generator t.
  std::function<void(std::uint32_t, const BaseNumber&)> times_gen = [&](std::uint32_t m, const BaseNumber& coef) {
    if (m == 0 || 31 - __builtin_clz(m) < top) {
      acc[m | (1u << top)] += coef;
      return;
    }
    int last = 31 - __builtin_clz(m);
    std::uint32_t rest = m & ~(1u << last);
    if (last == top) {
      acc[rest] += coef * gram[top][top];
      return;
    }
    // e_{M'} e_last e_top = 2B(last, top) e_{M'} - (e_{M'} e_top) e_last
    if (!gram[last][top].is_zero()) acc[rest] += coef * gram[last][top] * BaseNumber(2);
    for (const auto& [mm, v] : clifford(rest, 1u << top)) {
      // every index of mm is below last
      acc[mm | (1u << last)] -= coef * v;
    }
  };
  for (const auto& [m, v] : clifford(a, lower)) times_gen(m, v);
  CliffordTerms out;
  for (auto& [m, v] : acc)
    if (!v.is_zero()) out.push_back({m, v});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

// (x^a y^b g e_A)(x^c y^d h e_C) = x^a [y^b g x^c] y^d h e_A e_C.
void Algebra::multiply_into(const Monomial& a, const Monomial& b, const Scalar& coef,
                            std::unordered_map<Monomial, Scalar, MonomialHash>& out) const {
  const CliffordTerms& cl = clifford(a.clifford, b.clifford);
  for (const auto& t : ygx(a.y, static_cast<int>(a.group), b.x)) {
    Scalar c1 = coef * t.coef;
    int gh = group_->multiply(t.group, static_cast<int>(b.group));
    Exponents x = a.x + t.x;
    for (const auto& [ye, yv] : act_y(t.group, b.y)) {
      Scalar c2 = c1.scaled(yv);
      Exponents y = t.y + ye;
      for (const auto& [mask, cv] : cl)
        out[Monomial{x, y, static_cast<std::uint32_t>(gh), mask}] += c2.scaled(cv);
    }
  }
}

Element Element::from_terms(AlgebraPtr ctx, std::unordered_map<Monomial, Scalar, MonomialHash> terms) {
  Element e(std::move(ctx));
  e.terms_.reserve(terms.size());
  for (auto& [m, c] : terms)
    if (!c.is_zero()) e.terms_.emplace_back(m, std::move(c));
  std::sort(e.terms_.begin(), e.terms_.end(),
            [](const auto& x, const auto& y) { return monomial_less(x.first, y.first); });
  return e;
}

Element Element::monomial(AlgebraPtr ctx, const Monomial& m, const Scalar& c) {
  Element e(std::move(ctx));
  if (!c.is_zero()) e.terms_.emplace_back(m, c);
  return e;
}

Element Element::scalar(AlgebraPtr ctx, const Scalar& c) { return monomial(std::move(ctx), Monomial{}, c); }

static void check_index(const AlgebraPtr& ctx, int p) {
  if (!ctx) throw std::invalid_argument("element needs an algebra context");
  if (p < 0 || p >= ctx->dim())
    throw std::out_of_range("generator index " + std::to_string(p + 1) + " outside 1.." + std::to_string(ctx->dim()));
}

Element Element::x(AlgebraPtr ctx, int p) {
  check_index(ctx, p);
  Monomial m;
  m.x.set(p, 1);
  return monomial(std::move(ctx), m);
}

Element Element::y(AlgebraPtr ctx, int p) {
  check_index(ctx, p);
  Monomial m;
  m.y.set(p, 1);
  return monomial(std::move(ctx), m);
}

Element Element::e(AlgebraPtr ctx, int p) {
  check_index(ctx, p);
  Monomial m;
  m.clifford = 1u << p;
  return monomial(std::move(ctx), m);
}

Element Element::group(AlgebraPtr ctx, int g) {
  if (!ctx) throw std::invalid_argument("element needs an algebra context");
  if (g < 0 || g >= ctx->group().order()) throw std::out_of_range("group element index out of range");
  Monomial m;
  m.group = static_cast<std::uint32_t>(g);
  return monomial(std::move(ctx), m);
}

Element Element::linear(AlgebraPtr ctx, const CoordVector& u) {
  if (u.dim() != ctx->dim()) throw std::invalid_argument("coordinate vector has wrong dimension");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (int p = 0; p < u.dim(); ++p) {
    if (u.coords[p].is_zero()) continue;
    Monomial m;
    (u.space == Space::dual ? m.x : m.y).set(p, 1);
    acc[m] += u.coords[p];
  }
  return from_terms(std::move(ctx), std::move(acc));
}

Element Element::gamma(AlgebraPtr ctx, const Covector& u) {
  if (u.space != Space::dual) throw std::invalid_argument("gamma needs a covector");
  if (u.dim() != ctx->dim()) throw std::invalid_argument("covector has wrong dimension");
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (int p = 0; p < u.dim(); ++p) {
    if (u.coords[p].is_zero()) continue;
    Monomial m;
    m.clifford = 1u << p;
    acc[m] += u.coords[p];
  }
  return from_terms(std::move(ctx), std::move(acc));
}

std::optional<int> Element::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) (m.parity() ? odd : even) = true;
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

Element Element::even_part() const {
  Element e(ctx_);
  for (const auto& t : terms_)
    if (!t.first.parity()) e.terms_.push_back(t);
  return e;
}

Element Element::odd_part() const {
  Element e(ctx_);
  for (const auto& t : terms_)
    if (t.first.parity()) e.terms_.push_back(t);
  return e;
}

void Element::check_context(const Element& o) const {
  if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw std::invalid_argument("elements belong to different algebras");
}

Element& Element::operator+=(const Element& o) {
  check_context(o);
  if (!ctx_) ctx_ = o.ctx_;
  if (o.terms_.empty()) return *this;
  std::vector<std::pair<Monomial, Scalar>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && monomial_less(i->first, j->first))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || monomial_less(j->first, i->first)) {
      merged.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!c.is_zero()) merged.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element Element::operator-() const {
  Element e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

Element operator*(const Element& a, const Element& b) {
  a.check_context(b);
  AlgebraPtr ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (a.is_zero() || b.is_zero()) return Element(ctx);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) ctx->multiply_into(ma, mb, ca * cb, acc);
  return Element::from_terms(ctx, std::move(acc));
}

Element operator*(const Scalar& c, const Element& a) {
  Element e(a.ctx_);
  if (c.is_zero()) return e;
  for (const auto& [m, v] : a.terms_) {
    Scalar p = c * v;
    if (!p.is_zero()) e.terms_.emplace_back(m, std::move(p));
  }
  return e;
}

bool operator==(const Element& a, const Element& b) {
  a.check_context(b);
  return a.terms_ == b.terms_;
}

Element Element::substitute(std::span<const BaseNumber> values) const {
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& [m, c] : terms_) acc[m] += c.substitute(values);
  return from_terms(ctx_, std::move(acc));
}

Element Element::renormalize() const {
  Element out(ctx_);
  for (const auto& [m, c] : terms_) {
    Element w = scalar(ctx_, c);
    for (int p = 0; p < ctx_->dim(); ++p)
      for (int k = 0; k < m.x[p]; ++k) w = w * x(ctx_, p);
    for (int p = 0; p < ctx_->dim(); ++p)
      for (int k = 0; k < m.y[p]; ++k) w = w * y(ctx_, p);
    w = w * group(ctx_, static_cast<int>(m.group));
    for (int p = 0; p < ctx_->dim(); ++p)
      if (m.clifford >> p & 1) w = w * e(ctx_, p);
    out += w;
  }
  return out;
}

std::optional<Monomial> Element::witness() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

std::string monomial_string(const Algebra& alg, const Monomial& m) {
  std::vector<std::string> f;
  auto power = [&f](const std::string& base, int e) {
    if (e == 1) f.push_back(base);
    else if (e > 1) f.push_back(base + "^" + std::to_string(e));
  };
  for (int p = 0; p < alg.dim(); ++p) power("x" + std::to_string(p + 1), m.x[p]);
  for (int p = 0; p < alg.dim(); ++p) power("y" + std::to_string(p + 1), m.y[p]);
  if (m.group) f.push_back(alg.group().label(static_cast<int>(m.group)));
  for (int p = 0; p < alg.dim(); ++p)
    if (m.clifford >> p & 1) f.push_back("e" + std::to_string(p + 1));
  if (f.empty()) return "1";
  std::string s = f[0];
  for (std::size_t k = 1; k < f.size(); ++k) s += "*" + f[k];
  return s;
}

namespace {

bool single_component(const Scalar& c) {
  if (c.terms().size() != 1) return false;
  const BaseNumber& b = c.terms()[0].second;
  return (sgn(b.re()) != 0) + (sgn(b.im()) != 0) + (sgn(b.rt()) != 0) + (sgn(b.irt()) != 0) == 1;
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> pieces;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    if (m == Monomial{}) {
      pieces.push_back(cs);
      continue;
    }
    std::string ms = monomial_string(*ctx_, m);
    if (single_component(c)) {
      if (cs == "1") pieces.push_back(ms);
      else if (cs == "-1") pieces.push_back("-" + ms);
      else pieces.push_back(cs + "*" + ms);
    } else {
      pieces.push_back("(" + cs + ")*" + ms);
    }
  }
  std::string out = pieces[0];
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    if (pieces[k][0] == '-') out += " - " + pieces[k].substr(1);
    else out += " + " + pieces[k];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

namespace {

Element graded_bracket(const Element& a, const Element& b, int sign) {
  Element out(a.context() ? a.context() : b.context());
  Element parts_a[2] = {a.even_part(), a.odd_part()};
  Element parts_b[2] = {b.even_part(), b.odd_part()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (parts_a[i].is_zero() || parts_b[j].is_zero()) continue;
      int s = sign * ((i & j) ? -1 : 1);
      Element ab = parts_a[i] * parts_b[j], ba = parts_b[j] * parts_a[i];
      out += s > 0 ? ab + ba : ab - ba;
    }
  return out;
}

}  // namespace

Element supercommutator(const Element& a, const Element& b) { return graded_bracket(a, b, -1); }
Element anticommutator(const Element& a, const Element& b) { return graded_bracket(a, b, 1); }
Element commutator(const Element& a, const Element& b) { return a * b - b * a; }
Element plain_anticommutator(const Element& a, const Element& b) { return a * b + b * a; }

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Permutations of 0..n-1 with their signs, in lexicographic order.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
    out.emplace_back(p, inv % 2 ? -1 : 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Element antisymmetrize(const AlgebraPtr& ctx, const std::vector<Covector>& us,
                       const std::function<Element(const std::vector<Covector>&)>& f) {
  Element acc(ctx);
  for (const auto& [perm, sign] : signed_permutations(static_cast<int>(us.size()))) {
    std::vector<Covector> args;
    for (int i : perm) args.push_back(us[i]);
    Element term = f(args);
    if (sign > 0) acc += term;
    else acc -= term;
  }
  return Scalar(Rational(1) / factorial(static_cast<int>(us.size()))) * acc;
}

Element antisymmetrize(const AlgebraPtr& ctx, const std::vector<Covector>& us) {
  std::vector<Element> gammas;
  for (const auto& u : us) gammas.push_back(Element::gamma(ctx, u));
  Element acc(ctx);
  for (const auto& [perm, sign] : signed_permutations(static_cast<int>(us.size()))) {
    Element term = Element::scalar(ctx, sign);
    for (int i : perm) term = term * gammas[i];
    acc += term;
  }
  return Scalar(Rational(1) / factorial(static_cast<int>(us.size()))) * acc;
}

BaseNumber inverse_sqrt(const BaseNumber& b) {
  if (b.is_rational() && sgn(b.re()) > 0) {
    auto rational_sqrt = [](const Rational& q) -> std::optional<Rational> {
      mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
      if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
      mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
      return Rational(rn, rd);
    };
    if (auto r = rational_sqrt(b.re())) return BaseNumber(1 / *r);
    // 1/sqrt(2 r^2) = sqrt2 / (2 r)
    if (auto r = rational_sqrt(b.re() / 2)) return BaseNumber(0, 0, 1 / (2 * *r), 0);
  }
  throw std::domain_error("root length " + b.to_string() + " has no square root in Q(i, sqrt2)");
}

Element rho(const AlgebraPtr& ctx, int k) {
  const auto& r = ctx->group().reflections().at(k);
  return Scalar(inverse_sqrt(r.root_norm)) * (Element::group(ctx, r.element) * Element::gamma(ctx, r.root));
}

Element rho_word(const AlgebraPtr& ctx, const std::vector<int>& ks) {
  Element out = Element::scalar(ctx, 1);
  for (int k : ks) out = out * rho(ctx, k);
  return out;
}

Element chirality(const AlgebraPtr& ctx) {
  int d = ctx->dim();
  Element prod = Element::scalar(ctx, 1);
  for (int p = 0; p < d; ++p) prod = prod * Element::e(ctx, p);
  static const BaseNumber powers[] = {BaseNumber(1), BaseNumber::i(), BaseNumber(-1), -BaseNumber::i()};
  return Scalar(powers[(d * (d - 1) / 2) % 4]) * prod;
}

}  // namespace pinosp

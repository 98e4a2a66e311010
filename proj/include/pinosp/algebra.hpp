#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pinosp/reflection_group.hpp"

namespace pinosp {

/// Exponent vector over d <= 8 coordinates, 8 bits per coordinate.
struct Exponents {
  std::uint64_t bits = 0;

  int operator[](int p) const { return static_cast<int>((bits >> (8 * p)) & 0xff); }
  void set(int p, int e);
  void add(int p, int e) { set(p, (*this)[p] + e); }
  int degree() const;
  friend Exponents operator+(Exponents a, Exponents b);
  friend bool operator==(Exponents a, Exponents b) = default;
};

/// PBW basis word x^a y^b g e_A of A_kappa.
struct Monomial {
  Exponents x, y;
  std::uint32_t group = 0;     // element index, 0 = identity
  std::uint32_t clifford = 0;  // bitmask of A, e_A in ascending order

  int parity() const { return __builtin_popcount(clifford) & 1; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = m.x.bits * 0x9e3779b97f4a7c15ULL;
    h ^= (m.y.bits + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
    h ^= (static_cast<std::uint64_t>(m.group) << 32 | m.clifford) * 0x165667b19e3779f9ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Canonical order: xy-degree, x exponents (x1 heavier first), y exponents,
/// group index, Clifford degree, Clifford mask.
bool monomial_less(const Monomial& a, const Monomial& b);

class Element;

/// The superalgebra A_kappa = H_kappa (x) Clifford for a fixed group and form.
/// Holds the rewriting caches; share it through std::shared_ptr.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// With `kappa_values` (one per class) the deformation parameters are
  /// numbers instead of indeterminates.
  static std::shared_ptr<const Algebra> create(std::shared_ptr<const ReflectionGroup> group,
                                               std::vector<std::string> kappa_labels = {},
                                               std::optional<std::vector<BaseNumber>> kappa_values = std::nullopt);

  const ReflectionGroup& group() const { return *group_; }
  std::shared_ptr<const ReflectionGroup> group_ptr() const { return group_; }
  const QuadraticSpace& space() const { return group_->space(); }
  int dim() const { return group_->dim(); }
  int kappa_classes() const { return group_->class_count(); }
  const std::vector<std::string>& kappa_labels() const { return kappa_labels_; }
  /// kappa(s) for class `cls`: the indeterminate k<cls+1> or its numeric value.
  const Scalar& kappa(int cls) const { return kappa_.at(cls); }
  bool numeric_kappa() const { return numeric_; }

  /// Product of two basis words as (monomial, coefficient) pairs.
  using Terms = std::vector<std::pair<Monomial, Scalar>>;
  void multiply_into(const Monomial& a, const Monomial& b, const Scalar& coef,
                     std::unordered_map<Monomial, Scalar, MonomialHash>& out) const;

  /// Exact product of two x-polynomials, y-polynomials, ... used by the oracle.
  using Poly = std::vector<std::pair<Exponents, BaseNumber>>;
  /// g acting on x^c (covector substitution) or y^c (contragredient).
  const Poly& act_x(int g, Exponents c) const;
  const Poly& act_y(int g, Exponents c) const;
  /// Divided difference (f - s f) / alpha_s of x^c for reflection number k.
  const Poly& divided_difference(int k, Exponents c) const;

  std::size_t cache_entries() const;

 private:
  Algebra(std::shared_ptr<const ReflectionGroup> group, std::vector<std::string> labels,
          std::optional<std::vector<BaseNumber>> values);

  struct HTerm {
    Exponents x, y;
    int group;
    Scalar coef;
  };
  using HPoly = std::vector<HTerm>;
  // y^b g x^c in normal form x^alpha y^beta k.
  const HPoly& ygx(Exponents b, int g, Exponents c) const;
  const HPoly& yx(Exponents b, Exponents c) const;
  // e_A e_C in the basis e_M.
  const std::vector<std::pair<std::uint32_t, BaseNumber>>& clifford(std::uint32_t a, std::uint32_t c) const;

  Poly compute_act(int g, Exponents c, bool covector) const;
  Poly compute_divided_difference(int k, Exponents c) const;
  HPoly compute_yx(Exponents b, Exponents c) const;
  HPoly compute_ygx(Exponents b, int g, Exponents c) const;
  std::vector<std::pair<std::uint32_t, BaseNumber>> compute_clifford(std::uint32_t a, std::uint32_t c) const;

  std::shared_ptr<const ReflectionGroup> group_;
  std::vector<std::string> kappa_labels_;
  std::vector<Scalar> kappa_;
  bool numeric_ = false;

  template <class Key, class Value, class Hash>
  struct Cache {
    mutable std::mutex mu;
    std::unordered_map<Key, std::unique_ptr<const Value>, Hash> map;
  };
  struct Key3 {
    std::uint64_t a, b;
    std::uint32_t c;
    friend bool operator==(const Key3&, const Key3&) = default;
  };
  struct Key3Hash {
    std::size_t operator()(const Key3& k) const {
      std::uint64_t h = k.a * 0x9e3779b97f4a7c15ULL ^ (k.b + 0x632be59bd9b4e019ULL) * 0xc2b2ae3d27d4eb4fULL;
      return static_cast<std::size_t>(h ^ (h >> 31) ^ (static_cast<std::uint64_t>(k.c) * 0x165667b19e3779f9ULL));
    }
  };
  using CliffordTerms = std::vector<std::pair<std::uint32_t, BaseNumber>>;
  mutable Cache<Key3, Poly, Key3Hash> act_cache_, dd_cache_;
  mutable Cache<Key3, HPoly, Key3Hash> yx_cache_, ygx_cache_;
  mutable Cache<Key3, CliffordTerms, Key3Hash> cliff_cache_;
  // per reflection: root and coroot coordinates, class
  std::vector<std::vector<BaseNumber>> root_, coroot_;
  bool orthonormal_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite Scalar-linear combination of basis words, kept in canonical order.
class Element {
 public:
  Element() = default;
  explicit Element(AlgebraPtr ctx) : ctx_(std::move(ctx)) {}

  static Element scalar(AlgebraPtr ctx, const Scalar& c);
  static Element monomial(AlgebraPtr ctx, const Monomial& m, const Scalar& c = 1);
  static Element x(AlgebraPtr ctx, int p);  // 0-based
  static Element y(AlgebraPtr ctx, int p);
  static Element e(AlgebraPtr ctx, int p);
  static Element group(AlgebraPtr ctx, int g);
  /// Sum u_p x_p for a covector, sum v_p y_p for a vector.
  static Element linear(AlgebraPtr ctx, const CoordVector& u);
  /// gamma_u = sum_p u_p e_p.
  static Element gamma(AlgebraPtr ctx, const Covector& u);
  static Element from_terms(AlgebraPtr ctx, std::unordered_map<Monomial, Scalar, MonomialHash> terms);

  const AlgebraPtr& context() const { return ctx_; }
  const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// 0 or 1 for homogeneous elements, nullopt when both parities occur; zero is even.
  std::optional<int> parity() const;
  Element even_part() const;
  Element odd_part() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& c, const Element& a);
  friend Element operator*(const Element& a, const Scalar& c) { return c * a; }

  /// Structural equality; contexts must agree (or either side is empty).
  friend bool operator==(const Element& a, const Element& b);

  /// Specializes the kappa indeterminates.
  Element substitute(std::span<const BaseNumber> values) const;
  /// Rebuilds every basis word as a product of generators.
  Element renormalize() const;
  /// Largest monomial in canonical order (the report witness).
  std::optional<Monomial> witness() const;

  std::string to_string() const;

 private:
  void check_context(const Element& o) const;
  AlgebraPtr ctx_;
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

std::string monomial_string(const Algebra& alg, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Element& e);

/// Graded commutator ab - (-1)^{|a||b|} ba, extended bilinearly over parity parts.
Element supercommutator(const Element& a, const Element& b);
/// ab + (-1)^{|a||b|} ba, extended bilinearly.
Element anticommutator(const Element& a, const Element& b);
/// Plain ab - ba and ab + ba.
Element commutator(const Element& a, const Element& b);
Element plain_anticommutator(const Element& a, const Element& b);

/// (1/n!) sum_sigma sgn(sigma) gamma_{u_sigma(1)} ... gamma_{u_sigma(n)}.
Element antisymmetrize(const AlgebraPtr& ctx, const std::vector<Covector>& us);
/// Antisymmetrization of a multilinear builder f(u_1, ..., u_n) over its arguments.
Element antisymmetrize(const AlgebraPtr& ctx, const std::vector<Covector>& us,
                       const std::function<Element(const std::vector<Covector>&)>& f);

/// rho(s~) = s gamma_{alpha_s} / sqrt(B(alpha_s, alpha_s)) for reflection number k.
Element rho(const AlgebraPtr& ctx, int k);
/// Product rho(s~_{k1}) rho(s~_{k2}) ...
Element rho_word(const AlgebraPtr& ctx, const std::vector<int>& ks);
/// Gamma = i^{d(d-1)/2} e_1 ... e_d.
Element chirality(const AlgebraPtr& ctx);
/// 1 / sqrt(b) for b in {1, 2} (times a rational square); throws otherwise.
BaseNumber inverse_sqrt(const BaseNumber& b);

}  // namespace pinosp

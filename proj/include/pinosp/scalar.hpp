#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pinosp {

using Rational = mpq_class;

/// a/b in lowest terms.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// Thrown for malformed input (scalar text, group specs, expressions).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact element a + b*i + c*sqrt2 + d*i*sqrt2 of Q(i, sqrt2).
class BaseNumber {
 public:
  BaseNumber() = default;
  BaseNumber(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  BaseNumber(const Rational& v) : re_(v) {}  // NOLINT
  BaseNumber(Rational a, Rational b, Rational c, Rational d)
      : re_(std::move(a)), im_(std::move(b)), rt_(std::move(c)), irt_(std::move(d)) {}

  static BaseNumber i() { return {0, 1, 0, 0}; }
  static BaseNumber sqrt2() { return {0, 0, 1, 0}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& rt() const { return rt_; }
  const Rational& irt() const { return irt_; }

  bool is_zero() const {
    return sgn(re_) == 0 && sgn(im_) == 0 && sgn(rt_) == 0 && sgn(irt_) == 0;
  }
  bool is_rational() const { return sgn(im_) == 0 && sgn(rt_) == 0 && sgn(irt_) == 0; }
  bool is_one() const { return is_rational() && re_ == 1; }

  BaseNumber& operator+=(const BaseNumber& o);
  BaseNumber& operator-=(const BaseNumber& o);
  BaseNumber& operator*=(const BaseNumber& o);
  friend BaseNumber operator+(BaseNumber a, const BaseNumber& b) { return a += b; }
  friend BaseNumber operator-(BaseNumber a, const BaseNumber& b) { return a -= b; }
  friend BaseNumber operator*(const BaseNumber& a, const BaseNumber& b);
  BaseNumber operator-() const { return {-re_, -im_, -rt_, -irt_}; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  BaseNumber inverse() const;
  friend BaseNumber operator/(const BaseNumber& a, const BaseNumber& b) { return a * b.inverse(); }

  friend bool operator==(const BaseNumber& a, const BaseNumber& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.rt_ == b.rt_ && a.irt_ == b.irt_;
  }

  std::string to_string() const;

 private:
  Rational re_, im_, rt_, irt_;
};

std::ostream& operator<<(std::ostream& os, const BaseNumber& b);

/// Upper bound on reflection conjugacy classes (one kappa indeterminate each).
inline constexpr int kMaxKappa = 8;

/// Exponent vector over kappa_1..kappa_r packed as 8 bits per class.
struct KappaMonomial {
  std::uint64_t bits = 0;

  int exponent(int cls) const { return static_cast<int>((bits >> (8 * cls)) & 0xff); }
  int degree() const;
  static KappaMonomial single(int cls, int power = 1);
  friend KappaMonomial operator*(KappaMonomial a, KappaMonomial b);
  friend auto operator<=>(KappaMonomial a, KappaMonomial b) = default;
};

/// Element of Q(i, sqrt2)[kappa_1, ..., kappa_r] in canonical sparse form.
///
/// Terms are sorted by kappa monomial (degree first) and carry no zero
/// coefficients, so structural equality is ring equality.
class Scalar {
 public:
  using Term = std::pair<KappaMonomial, BaseNumber>;

  Scalar() = default;
  Scalar(long v) : Scalar(BaseNumber(v)) {}  // NOLINT
  Scalar(const Rational& v) : Scalar(BaseNumber(v)) {}  // NOLINT
  Scalar(const BaseNumber& b);  // NOLINT
  static Scalar kappa(int cls);
  static Scalar from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first.bits == 0 && terms_[0].second.is_one(); }
  /// True when the kappa degree is zero.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.bits == 0); }
  BaseNumber constant_value() const;
  int kappa_degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar scaled(const BaseNumber& b) const;
  Scalar operator-() const;

  /// Division by a nonzero constant.
  friend Scalar operator/(const Scalar& a, const BaseNumber& b);

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// Evaluates the kappa polynomial; needs one value per class that occurs.
  Scalar substitute(std::span<const BaseNumber> values) const;

  std::string to_string() const;

  /// Parses the rendering grammar: rationals, i, sqrt2, k<n>, + - * ^ and
  /// parentheses.
  static Scalar parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pinosp

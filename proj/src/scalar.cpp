#include "pinosp/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace pinosp {

BaseNumber& BaseNumber::operator+=(const BaseNumber& o) {
  re_ += o.re_;
  im_ += o.im_;
  rt_ += o.rt_;
  irt_ += o.irt_;
  return *this;
}

BaseNumber& BaseNumber::operator-=(const BaseNumber& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  rt_ -= o.rt_;
  irt_ -= o.irt_;
  return *this;
}

BaseNumber operator*(const BaseNumber& a, const BaseNumber& b) {
  if (a.is_rational()) {
    if (b.is_rational()) return BaseNumber(a.re_ * b.re_);
    return {a.re_ * b.re_, a.re_ * b.im_, a.re_ * b.rt_, a.re_ * b.irt_};
  }
  if (b.is_rational()) return {a.re_ * b.re_, a.im_ * b.re_, a.rt_ * b.re_, a.irt_ * b.re_};
  // i^2 = -1, sqrt2^2 = 2
  Rational re = a.re_ * b.re_ - a.im_ * b.im_ + 2 * a.rt_ * b.rt_ - 2 * a.irt_ * b.irt_;
  Rational im = a.re_ * b.im_ + a.im_ * b.re_ + 2 * (a.rt_ * b.irt_ + a.irt_ * b.rt_);
  Rational rt = a.re_ * b.rt_ + a.rt_ * b.re_ - a.im_ * b.irt_ - a.irt_ * b.im_;
  Rational irt = a.re_ * b.irt_ + a.irt_ * b.re_ + a.im_ * b.rt_ + a.rt_ * b.im_;
  return {std::move(re), std::move(im), std::move(rt), std::move(irt)};
}

BaseNumber& BaseNumber::operator*=(const BaseNumber& o) { return *this = *this * o; }

BaseNumber BaseNumber::inverse() const {
  if (is_zero()) throw std::domain_error("BaseNumber: division by zero");
  if (is_rational()) return BaseNumber(Rational(1) / re_);
  // z * conj_i(z) lies in Q(sqrt2); then multiply by its sqrt2-conjugate.
  BaseNumber conj_i(re_, -im_, rt_, -irt_);
  BaseNumber n = *this * conj_i;  // p + q*sqrt2
  BaseNumber conj_r(n.re_, 0, -n.rt_, 0);
  BaseNumber m = n * conj_r;  // rational
  return conj_i * conj_r * BaseNumber(Rational(1) / m.re_);
}

namespace {

void append_component(std::string& out, const Rational& c, const char* unit, bool& first) {
  if (sgn(c) == 0) return;
  Rational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  first = false;
  if (unit[0] == '\0') {
    out += mag.get_str();
  } else if (mag == 1) {
    out += unit;
  } else {
    out += mag.get_str();
    out += "*";
    out += unit;
  }
}

}  // namespace

std::string BaseNumber::to_string() const {
  std::string out;
  bool first = true;
  append_component(out, re_, "", first);
  append_component(out, im_, "i", first);
  append_component(out, rt_, "sqrt2", first);
  append_component(out, irt_, "i*sqrt2", first);
  return first ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const BaseNumber& b) { return os << b.to_string(); }

int KappaMonomial::degree() const {
  int d = 0;
  for (int c = 0; c < kMaxKappa; ++c) d += exponent(c);
  return d;
}

KappaMonomial KappaMonomial::single(int cls, int power) {
  if (cls < 0 || cls >= kMaxKappa) throw std::out_of_range("kappa class index out of range");
  return KappaMonomial{static_cast<std::uint64_t>(power) << (8 * cls)};
}

KappaMonomial operator*(KappaMonomial a, KappaMonomial b) {
  for (int c = 0; c < kMaxKappa; ++c) {
    if (a.exponent(c) + b.exponent(c) > 0xff) throw std::overflow_error("kappa exponent overflow");
  }
  return KappaMonomial{a.bits + b.bits};
}

namespace {

bool kappa_less(KappaMonomial a, KappaMonomial b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.bits < b.bits;
}

}  // namespace

Scalar::Scalar(const BaseNumber& b) {
  if (!b.is_zero()) terms_.emplace_back(KappaMonomial{}, b);
}

Scalar Scalar::kappa(int cls) {
  Scalar s;
  s.terms_.emplace_back(KappaMonomial::single(cls), BaseNumber(1));
  return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return kappa_less(a.first, b.first); });
  Scalar s;
  for (auto& t : terms) {
    if (!s.terms_.empty() && s.terms_.back().first == t.first) {
      s.terms_.back().second += t.second;
      if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

BaseNumber Scalar::constant_value() const {
  if (!is_constant()) throw std::logic_error("Scalar::constant_value on kappa-dependent scalar");
  return terms_.empty() ? BaseNumber() : terms_[0].second;
}

int Scalar::kappa_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && kappa_less(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || kappa_less(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      BaseNumber c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Scalar s;
    BaseNumber c = a.terms_[0].second * b.terms_[0].second;
    if (!c.is_zero()) s.terms_.emplace_back(a.terms_[0].first * b.terms_[0].first, std::move(c));
    return s;
  }
  std::vector<Scalar::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.emplace_back(ka * kb, ca * cb);
  return Scalar::from_terms(std::move(out));
}

Scalar Scalar::scaled(const BaseNumber& b) const {
  if (b.is_zero()) return {};
  Scalar s = *this;
  for (auto& t : s.terms_) t.second *= b;
  return s;
}

Scalar operator/(const Scalar& a, const BaseNumber& b) { return a.scaled(b.inverse()); }

Scalar Scalar::substitute(std::span<const BaseNumber> values) const {
  std::vector<Term> out;
  for (const auto& [k, c] : terms_) {
    BaseNumber v = c;
    for (int cls = 0; cls < kMaxKappa; ++cls) {
      int e = k.exponent(cls);
      if (e == 0) continue;
      if (cls >= static_cast<int>(values.size()))
        throw std::invalid_argument("substitute: missing kappa value for class k" + std::to_string(cls + 1));
      for (int j = 0; j < e; ++j) v *= values[cls];
    }
    out.emplace_back(KappaMonomial{}, std::move(v));
  }
  return from_terms(std::move(out));
}

namespace {

std::string kappa_string(KappaMonomial k) {
  std::string s;
  for (int c = 0; c < kMaxKappa; ++c) {
    int e = k.exponent(c);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "k" + std::to_string(c + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  static const char* units[] = {"", "i", "sqrt2", "i*sqrt2"};
  for (const auto& [k, c] : terms_) {
    const Rational* comps[] = {&c.re(), &c.im(), &c.rt(), &c.irt()};
    std::string ks = kappa_string(k);
    for (int u = 0; u < 4; ++u) {
      const Rational& q = *comps[u];
      if (sgn(q) == 0) continue;
      if (first) {
        if (sgn(q) < 0) out += "-";
      } else {
        out += sgn(q) < 0 ? " - " : " + ";
      }
      first = false;
      Rational mag = abs(q);
      std::vector<std::string> factors;
      if (mag != 1 || (u == 0 && ks.empty())) factors.push_back(mag.get_str());
      if (u != 0) factors.emplace_back(units[u]);
      if (!ks.empty()) factors.push_back(ks);
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f) out += "*";
        out += factors[f];
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

// Recursive-descent parser for the scalar grammar.
class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v;
    bool neg = eat('-');
    if (!neg) eat('+');
    v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = power();
    for (;;) {
      if (eat('*')) {
        v = v * power();
      } else if (eat('/')) {
        Scalar d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero scalar");
        v = v / d.constant_value();
      } else {
        return v;
      }
    }
  }
  Scalar power() {
    Scalar b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Scalar r(1);
      for (int j = 0; j < e; ++j) r = r * b;
      return r;
    }
    return b;
  }
  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(s_.substr(start, pos_ - start)));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id == "i") return Scalar(BaseNumber::i());
    if (id == "sqrt2") return Scalar(BaseNumber::sqrt2());
    if (id.size() > 1 && id[0] == 'k' &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int cls = std::stoi(id.substr(1));
      if (cls < 1 || cls > kMaxKappa) fail("kappa index out of range");
      return Scalar::kappa(cls - 1);
    }
    pos_ = start;
    fail(id.empty() ? "expected a scalar" : "unknown identifier '" + id + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).parse(); }

}  // namespace pinosp

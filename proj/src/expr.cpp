#include "pinosp/expr.hpp"

#include <cctype>
#include <map>
#include <regex>

namespace pinosp {

ExprError::ExprError(int line, int column, const std::string& message)
    : ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  enum class Type { number, name, punct, end };
  Type type;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int l = line, cl = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Type::number, src.substr(i, j - i), l, cl});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Type::name, src.substr(i, j - i), l, cl});
    } else if (std::string("+-*/^()[]{},").find(c) != std::string::npos) {
      j = i + 1;
      out.push_back({Token::Type::punct, std::string(1, c), l, cl});
    } else {
      throw ExprError(l, cl, std::string("unexpected character '") + c + "'");
    }
    advance(j - i);
  }
  out.push_back({Token::Type::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (peek().type != Token::Type::end) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* p) const { return peek().type == Token::Type::punct && peek().text == p; }
  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ExprError(t.line, t.column, msg); }

  void expect(const char* p) {
    if (!is(p)) fail(peek(), std::string("expected '") + p + "'" + (peek().type == Token::Type::end ? " at end of input" : ""));
    ++pos_;
  }

  static ExprPtr node(Expr::Kind k, const Token& at, std::string text = {}) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->text = std::move(text);
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  static ExprPtr binary(Expr::Kind k, const Token& at, ExprPtr a, ExprPtr b) {
    auto e = node(k, at);
    e->args.push_back(std::move(a));
    e->args.push_back(std::move(b));
    return e;
  }

  ExprPtr sum() {
    ExprPtr e = prod();
    while (is("+") || is("-")) {
      Token op = toks_[pos_++];
      e = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op, std::move(e), prod());
    }
    return e;
  }

  ExprPtr prod() {
    ExprPtr e = unary();
    while (is("*") || is("/")) {
      Token op = toks_[pos_++];
      e = binary(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div, op, std::move(e), unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (is("-")) {
      Token op = toks_[pos_++];
      auto e = node(Expr::Kind::neg, op);
      e->args.push_back(unary());
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr e = atom();
    if (is("^")) {
      Token op = toks_[pos_++];
      if (peek().type != Token::Type::number) fail(peek(), "exponent must be a non-negative integer");
      e = binary(Expr::Kind::pow, op, std::move(e), node(Expr::Kind::number, peek(), peek().text));
      ++pos_;
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::number:
        ++pos_;
        return node(Expr::Kind::number, t, t.text);
      case Token::Type::name: {
        ++pos_;
        if (!is("(")) return node(Expr::Kind::name, t, t.text);
        ++pos_;
        auto e = node(Expr::Kind::call, t, t.text);
        e->args.push_back(sum());
        while (is(",")) {
          ++pos_;
          e->args.push_back(sum());
        }
        expect(")");
        return e;
      }
      case Token::Type::punct:
        if (t.text == "(") {
          ++pos_;
          ExprPtr e = sum();
          expect(")");
          return e;
        }
        if (t.text == "[" || t.text == "{") {
          bool square = t.text == "[";
          ++pos_;
          auto e = node(square ? Expr::Kind::bracket : Expr::Kind::anti, t);
          e->args.push_back(sum());
          expect(",");
          e->args.push_back(sum());
          expect(square ? "]" : "}");
          return e;
        }
        fail(t, "unexpected '" + t.text + "'");
      case Token::Type::end:
        fail(t, "unexpected end of input");
    }
    fail(t, "unexpected token");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- evaluation

struct Value {
  enum class Kind { scalar, coord, element } kind;
  Scalar s;
  CoordVector v;
  Element e;
};

Value of(Scalar s) { return {Value::Kind::scalar, std::move(s), {}, {}}; }
Value of(CoordVector v) { return {Value::Kind::coord, {}, std::move(v), {}}; }
Value of(Element e) { return {Value::Kind::element, {}, {}, std::move(e)}; }

class Evaluator {
 public:
  explicit Evaluator(const Workspace& ws) : ws_(ws) {}

  Element element(const Expr& e) { return to_element(eval(e)); }

 private:
  [[noreturn]] static void fail(const Expr& e, const std::string& msg) { throw ExprError(e.line, e.column, msg); }

  Element to_element(const Value& v) const {
    switch (v.kind) {
      case Value::Kind::scalar:
        return ws_.num(v.s);
      case Value::Kind::coord:
        return ws_.lin(v.v);
      case Value::Kind::element:
        return v.e;
    }
    return ws_.zero();
  }

  CoordVector covector(const Expr& e) {
    Value v = eval(e);
    if (v.kind != Value::Kind::coord || v.v.space != Space::dual) fail(e, "expected a covector such as x1 or x1 - 2*x2");
    return v.v;
  }

  std::vector<Covector> covectors(const Expr& e) {
    std::vector<Covector> us;
    for (const auto& a : e.args) us.push_back(covector(*a));
    return us;
  }

  long integer(const Expr& e) {
    Value v = eval(e);
    if (v.kind == Value::Kind::scalar && v.s.is_constant()) {
      BaseNumber b = v.s.constant_value();
      if (b.is_rational() && b.re().get_den() == 1 && b.re().get_num().fits_slong_p()) return b.re().get_num().get_si();
    }
    fail(e, "expected an integer");
  }

  void arity(const Expr& e, std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi) {
      std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
      fail(e, e.text + " takes " + want + " argument" + (hi == 1 ? "" : "s"));
    }
  }

  int index(const Expr& e, const std::string& digits, int hi, const char* what) {
    int p = std::stoi(digits);
    if (p < 1 || p > hi) fail(e, std::string(what) + " index " + digits + " is outside 1.." + std::to_string(hi));
    return p;
  }

  Value name(const Expr& e) {
    const std::string& n = e.text;
    const auto& ctx = ws_.ctx();
    int d = ws_.dim();
    static const std::regex indexed("([a-zA-Z]+)([0-9]+)");
    std::smatch m;
    if (std::regex_match(n, m, indexed)) {
      std::string head = m[1], digits = m[2];
      if (head == "x") return of(ws_.x(index(e, digits, d, "coordinate")));
      if (head == "y") return of(ws_.y(index(e, digits, d, "coordinate")));
      if (head == "e") return of(Element::e(ctx, index(e, digits, d, "Clifford") - 1));
      if (head == "s") {
        int k = index(e, digits, static_cast<int>(ctx->group().reflections().size()), "reflection");
        return of(ws_.group(ctx->group().reflections()[k - 1].element));
      }
      if (head == "g") {
        int g = std::stoi(digits);
        if (g < 0 || g >= ctx->group().order()) fail(e, "group element g" + digits + " does not exist");
        return of(ws_.group(g));
      }
      if (head == "k") return of(ctx->kappa(index(e, digits, ctx->kappa_classes(), "kappa class") - 1));
      if (head == "alpha") {
        int k = index(e, digits, static_cast<int>(ctx->group().reflections().size()), "reflection");
        return of(ctx->group().reflections()[k - 1].root);
      }
      if (head == "zp" || head == "zm" || head == "z") {
        WittBasis w = witt_basis(ctx->space());
        if (head == "z") {
          if (digits != "0" || !w.has_zero) fail(e, "z0 exists only in odd dimension");
          return of(w.zero);
        }
        int j = index(e, digits, w.ell, "Witt");
        return of(head == "zp" ? w.plus[j - 1] : w.minus[j - 1]);
      }
    }
    const Osp& o = ws_.osp();
    if (n == "i") return of(Scalar(BaseNumber::i()));
    if (n == "sqrt2") return of(Scalar(BaseNumber::sqrt2()));
    if (n == "X") return of(o.X());
    if (n == "D") return of(o.D());
    if (n == "H") return of(o.H());
    if (n == "Ep") return of(o.Ep());
    if (n == "Em") return of(o.Em());
    if (n == "Fp") return of(o.Fp());
    if (n == "Fm") return of(o.Fm());
    if (n == "Casimir") return of(o.casimir());
    if (n == "Scasimir") return of(o.scasimir());
    if (n == "OmegaKappa") return of(o.omega_kappa());
    if (n == "Omega") return of(ws_.sc().central_omega());
    if (n == "Otop") return of(ws_.sc().O_top());
    fail(e, "unknown identifier '" + n + "'");
  }

  Value call(const Expr& e) {
    const std::string& f = e.text;
    const Osp& o = ws_.osp();
    if (f == "O") {
      arity(e, 1, static_cast<std::size_t>(ws_.dim()));
      return of(ws_.O(covectors(e)));
    }
    if (f == "A") {
      arity(e, 1, 8);
      return of(antisymmetrize(ws_.ctx(), covectors(e)));
    }
    if (f == "M") {
      arity(e, 2, 2);
      return of(ws_.M(covector(*e.args[0]), covector(*e.args[1])));
    }
    if (f == "gamma") {
      arity(e, 1, 1);
      return of(ws_.gamma(covector(*e.args[0])));
    }
    if (f == "beta") {
      arity(e, 1, 1);
      Value v = eval(*e.args[0]);
      if (v.kind != Value::Kind::coord) fail(*e.args[0], "beta takes a covector or vector");
      return of(ws_.ctx()->space().beta(v.v));
    }
    if (f == "R") {
      arity(e, 1, 1);
      return of(o.R(covector(*e.args[0])));
    }
    if (f == "rho") {
      arity(e, 1, 8);
      std::vector<int> ks;
      int count = static_cast<int>(ws_.ctx()->group().reflections().size());
      for (const auto& a : e.args) {
        long k = integer(*a);
        if (k < 1 || k > count) fail(*a, "reflection number must be in 1.." + std::to_string(count));
        ks.push_back(static_cast<int>(k - 1));
      }
      return of(rho_word(ws_.ctx(), ks));
    }
    static const std::map<std::string, Element (Osp::*)(const Element&) const> unary{
        {"Pp", &Osp::P_plus}, {"Pm", &Osp::P_minus}, {"Qp", &Osp::Q_plus}, {"Qm", &Osp::Q_minus}};
    if (auto it = unary.find(f); it != unary.end()) {
      arity(e, 1, 1);
      return of((o.*(it->second))(element(*e.args[0])));
    }
    if (f == "Palpha") {
      arity(e, 1, 1);
      try {
        return of(o.P_alpha(element(*e.args[0])));
      } catch (const std::invalid_argument& err) {
        fail(e, err.what());
      }
    }
    fail(e, "unknown function '" + f + "'");
  }

  Value arith(const Expr& e, Value a, Value b) {
    using K = Value::Kind;
    switch (e.kind) {
      case Expr::Kind::add:
      case Expr::Kind::sub: {
        bool add = e.kind == Expr::Kind::add;
        if (a.kind == K::scalar && b.kind == K::scalar) return of(add ? a.s + b.s : a.s - b.s);
        if (a.kind == K::coord && b.kind == K::coord && a.v.space == b.v.space) return of(add ? a.v + b.v : a.v - b.v);
        return of(add ? to_element(a) + to_element(b) : to_element(a) - to_element(b));
      }
      case Expr::Kind::mul:
        if (a.kind == K::scalar && b.kind == K::scalar) return of(a.s * b.s);
        if (a.kind == K::scalar && b.kind == K::coord) return of(a.s * b.v);
        if (a.kind == K::coord && b.kind == K::scalar) return of(b.s * a.v);
        return of(to_element(a) * to_element(b));
      case Expr::Kind::div: {
        if (b.kind != K::scalar || !b.s.is_constant() || b.s.is_zero())
          fail(e, "division needs a nonzero numeric divisor");
        BaseNumber inv = b.s.constant_value().inverse();
        if (a.kind == K::scalar) return of(a.s * Scalar(inv));
        if (a.kind == K::coord) return of(Scalar(inv) * a.v);
        return of(Scalar(inv) * a.e);
      }
      default:
        fail(e, "not an arithmetic operator");
    }
  }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::number:
        return of(Scalar(Rational(e.text)));
      case Expr::Kind::name:
        return name(e);
      case Expr::Kind::call:
        return call(e);
      case Expr::Kind::neg: {
        Value v = eval(*e.args[0]);
        if (v.kind == Value::Kind::scalar) return of(-v.s);
        if (v.kind == Value::Kind::coord) return of(-v.v);
        return of(-v.e);
      }
      case Expr::Kind::pow: {
        Value base = eval(*e.args[0]);
        long n = std::stol(e.args[1]->text);
        if (n > 64) fail(*e.args[1], "exponent too large");
        if (base.kind == Value::Kind::scalar) {
          Scalar r(1);
          for (long k = 0; k < n; ++k) r = r * base.s;
          return of(r);
        }
        Element b = to_element(base), r = ws_.num(1);
        for (long k = 0; k < n; ++k) r = r * b;
        return of(r);
      }
      case Expr::Kind::bracket:
        return of(supercommutator(element(*e.args[0]), element(*e.args[1])));
      case Expr::Kind::anti:
        return of(anticommutator(element(*e.args[0]), element(*e.args[1])));
      default:
        return arith(e, eval(*e.args[0]), eval(*e.args[1]));
    }
  }

  const Workspace& ws_;
};

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::string print_expr(const Expr& e) {
  auto bin = [&](const char* op) { return "(" + print_expr(*e.args[0]) + " " + op + " " + print_expr(*e.args[1]) + ")"; };
  switch (e.kind) {
    case Expr::Kind::number:
    case Expr::Kind::name:
      return e.text;
    case Expr::Kind::call: {
      std::string s = e.text + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + print_expr(*e.args[k]);
      return s + ")";
    }
    case Expr::Kind::add:
      return bin("+");
    case Expr::Kind::sub:
      return bin("-");
    case Expr::Kind::mul:
      return bin("*");
    case Expr::Kind::div:
      return bin("/");
    case Expr::Kind::pow:
      return print_expr(*e.args[0]) + "^" + e.args[1]->text;
    case Expr::Kind::neg:
      return "(-" + print_expr(*e.args[0]) + ")";
    case Expr::Kind::bracket:
      return "[" + print_expr(*e.args[0]) + ", " + print_expr(*e.args[1]) + "]";
    case Expr::Kind::anti:
      return "{" + print_expr(*e.args[0]) + ", " + print_expr(*e.args[1]) + "}";
  }
  return "?";
}

Element eval_expr(const Expr& e, const Workspace& ws) { return Evaluator(ws).element(e); }

Element eval_expr(const std::string& src, const Workspace& ws) { return eval_expr(*parse_expr(src), ws); }

}  // namespace pinosp

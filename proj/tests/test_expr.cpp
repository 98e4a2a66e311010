#include <gtest/gtest.h>

#include "gen.hpp"
#include "pinosp/expr.hpp"

using namespace pinosp;

namespace {

Workspace workspace(const char* spec, const char* kappa = "symbolic") {
  return Workspace(make_algebra(load_group(spec), KappaMode::parse(kappa)));
}

void expect_error(const std::string& src, int line, int column, const Workspace& ws) {
  try {
    eval_expr(src, ws);
    ADD_FAILURE() << "no error for " << src;
  } catch (const ExprError& e) {
    EXPECT_EQ(e.line(), line) << src << ": " << e.what();
    EXPECT_EQ(e.column(), column) << src << ": " << e.what();
  }
}

}  // namespace

TEST(Expr, ParseShapes) {
  ExprPtr a = parse_expr("[y1, x1]");
  EXPECT_EQ(a->kind, Expr::Kind::bracket);
  EXPECT_EQ(print_expr(*a), "[y1, x1]");
  ExprPtr b = parse_expr("O(x1, x1 - x2)");
  EXPECT_EQ(b->kind, Expr::Kind::call);
  EXPECT_EQ(b->args.size(), 2u);
  EXPECT_EQ(print_expr(*b), "O(x1, (x1 - x2))");
  EXPECT_EQ(print_expr(*parse_expr("1 + 2*x1^2 - -3/4*{e1, e2}")), "((1 + (2 * x1^2)) - (((-3) / 4) * {e1, e2}))");
}

TEST(Expr, Precedence) {
  EXPECT_EQ(print_expr(*parse_expr("a + b * c ^ 2")), "(a + (b * c^2))");
  EXPECT_EQ(print_expr(*parse_expr("a - b - c")), "((a - b) - c)");
  EXPECT_EQ(print_expr(*parse_expr("-a^2")), "(-a^2)");
}

TEST(Expr, PrintParseIsStable) {
  for (const char* src : {"Pp(e1) + 2*k1*s1*(e1 - e2)", "{O(x1), O(x2, zp1)}", "[X, [D, gamma(x1 - 2*x2)]]",
                          "rho(1, 1) - 1", "(1 + i)*sqrt2/2*x1^3"}) {
    std::string once = print_expr(*parse_expr(src));
    EXPECT_EQ(print_expr(*parse_expr(once)), once);
  }
}

TEST(Expr, Evaluation) {
  Workspace ws = workspace("A1@2");
  EXPECT_EQ(eval_expr("[y1,x1]", ws).to_string(), "1 + k1*s1");
  EXPECT_EQ(eval_expr("[y1,x1]", workspace("A1@2", "0")).to_string(), "1");
  EXPECT_TRUE(eval_expr("Pp(e1) + k1*s1*(e1 - e2)", ws).is_zero());
  EXPECT_EQ(eval_expr("Pp(e1) + 2*k1*s1*(e1 - e2)", ws).to_string(), "k1*s1*e1 - k1*s1*e2");
  EXPECT_EQ(eval_expr("O(x1, x1 - x2)", ws), -ws.O({ws.x(1), ws.x(2)}));
  EXPECT_EQ(eval_expr("M(x1, x2)", ws).to_string(), "x1*y2 - x2*y1");
  EXPECT_EQ(eval_expr("gamma(zp1)", ws).to_string(), "1/2*e1 + 1/2*i*e2");
  EXPECT_TRUE(eval_expr("{X, D} - 2*H", ws).is_zero() == false);
  EXPECT_TRUE(eval_expr("[X, D] - 2*H", ws).is_zero());
  EXPECT_TRUE(eval_expr("Scasimir^2 - Casimir - 1/4", ws).is_zero());
  EXPECT_TRUE(eval_expr("Fp*sqrt2 - X", ws).is_zero());
  EXPECT_TRUE(eval_expr("rho(1)^2 - 1", ws).is_zero());
  EXPECT_TRUE(eval_expr("R(x1) - Qm(gamma(x1))", ws).is_zero());
  EXPECT_TRUE(eval_expr("Palpha(M(x1,x2)) - M(x1,x2)", ws).is_zero());
  EXPECT_TRUE(eval_expr("[Omega, O(x1, x2)]", ws).is_zero());
  EXPECT_TRUE(eval_expr("Otop - O(x1, x2)", ws).is_zero());
  EXPECT_TRUE(eval_expr("OmegaKappa - k1*s1", ws).is_zero());
  EXPECT_TRUE(eval_expr("A(x1, x2) - e1*e2", ws).is_zero());
  EXPECT_TRUE(eval_expr("beta(x1) - y1", ws).is_zero());
  EXPECT_TRUE(eval_expr("gamma(alpha1) - e1 + e2", ws).is_zero());
  EXPECT_TRUE(eval_expr("Ep - (x1^2 + x2^2)/2", workspace("A1@2", "0")).is_zero());
  EXPECT_TRUE(eval_expr("[Em, Pm(e1*e2)]", ws).is_zero());
  EXPECT_EQ(eval_expr("Qp(1)", ws), ws.osp().H() + ws.num(1));
  EXPECT_TRUE(eval_expr("O(zp1, zm1, z0) - O(zp1, zm1, x3)", workspace("A1@3")).is_zero());
}

TEST(Expr, Errors) {
  Workspace ws = workspace("A1@2");
  expect_error("[y1, x1", 1, 8, ws);
  expect_error("foo + 1", 1, 1, ws);
  expect_error("1 +\n  x9", 2, 3, ws);
  expect_error("O(e1)", 1, 3, ws);
  expect_error("O(x1, x2, x1)", 1, 1, ws);
  expect_error("x1 / e1", 1, 4, ws);
  expect_error("x1 $ 2", 1, 4, ws);
  expect_error("x1^y1", 1, 4, ws);
  expect_error("rho(2)", 1, 5, ws);
  expect_error("Palpha(x1)", 1, 1, ws);
  expect_error("z0", 1, 1, ws);
  expect_error("M(x1)", 1, 1, ws);
  expect_error("k2", 1, 1, ws);
  expect_error(")", 1, 1, ws);
  expect_error("", 1, 1, ws);
}

class ExprRoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(ExprRoundTrip, PrintedElementsParseBack) {
  Workspace ws = workspace(GetParam());
  std::mt19937_64 rng(81);
  for (int t = 0; t < 100; ++t) {
    Element a = random_element(ws.ctx(), rng, 4, 3);
    if (t % 3 == 0) a = a * random_element(ws.ctx(), rng, 2, 1);
    ASSERT_EQ(eval_expr(a.to_string(), ws), a) << a.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, ExprRoundTrip, ::testing::Values("A1@2", "A2@3", "B2@2", "B3@3"));

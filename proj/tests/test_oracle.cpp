#include <gtest/gtest.h>

#include "gen.hpp"
#include "pinosp/dunkl_oracle.hpp"

using namespace pinosp;

namespace {

AlgebraPtr algebra(const char* spec) { return make_algebra(load_group(spec), {}); }

std::uint64_t key(std::initializer_list<int> exps) {
  std::uint64_t k = 0;
  int p = 0;
  for (int e : exps) k |= static_cast<std::uint64_t>(e) << (8 * p++);
  return k;
}

PolySpinor one_spinor() {
  PolySpinor v;
  v.terms[{0, 0}] = Scalar(1);
  return v;
}

}  // namespace

TEST(Oracle, DunklExamples) {
  auto c = algebra("A1@2");
  DunklOracle o(c);
  Scalar k = c->kappa(0);
  Vector y1 = basis_vector(2, 0);
  Polynomial x1{{key({1, 0}), Scalar(1)}};
  EXPECT_EQ(o.dunkl(y1, x1), (Polynomial{{0, Scalar(1) + k}}));
  Polynomial x1sq{{key({2, 0}), Scalar(1)}};
  EXPECT_EQ(o.dunkl(y1, x1sq), (Polynomial{{key({1, 0}), Scalar(2) + k}, {key({0, 1}), k}}));
  Polynomial one{{0, Scalar(1)}};
  EXPECT_TRUE(o.dunkl(y1, one).empty());
}

TEST(Oracle, DivisionRemainderIsAnError) {
  auto c = algebra("A1@2");
  DunklOracle o(c);
  Polynomial x1{{key({1, 0}), Scalar(1)}};
  EXPECT_THROW(o.divide_linear(x1, basis_covector(2, 0) - basis_covector(2, 1)), std::logic_error);
}

TEST(Oracle, ActionExamples) {
  auto c = algebra("A1@2");
  DunklOracle o(c);
  PolySpinor v = one_spinor();
  PolySpinor x1v;
  x1v.terms[{key({1, 0}), 0}] = Scalar(1);
  EXPECT_EQ(o.act(Element::x(c, 0), v), x1v);
  Element e1 = Element::e(c, 0);
  PolySpinor w = o.random_vector(3, 3);
  EXPECT_EQ(o.act(e1, o.act(e1, w)), w);
  Element r = supercommutator(Element::y(c, 0), Element::x(c, 0)) - Element::scalar(c, 1) -
              c->kappa(0) * Element::group(c, c->group().reflections()[0].element);
  for (int s = 0; s < 20; ++s) EXPECT_TRUE(o.act(r, o.random_vector(s, 3)).is_zero());
}

TEST(Oracle, RandomVectors) {
  auto c = algebra("A2@3");
  DunklOracle o(c);
  EXPECT_EQ(o.random_vector(1, 2), o.random_vector(1, 2));
  EXPECT_NE(o.random_vector(1, 2), o.random_vector(2, 2));
  for (int s = 0; s < 50; ++s)
    for (const auto& [k, coef] : o.random_vector(s, 2).terms) {
      Exponents e{k.first};
      EXPECT_LE(e.degree(), 2);
    }
}

TEST(Oracle, NeedsOrthonormalGram) {
  Matrix g{{2, 1}, {1, 2}};
  auto c = Algebra::create(std::make_shared<ReflectionGroup>(build_group(RootType::A, 1, 2, g)));
  EXPECT_THROW(DunklOracle{c}, std::exception);
}

TEST(Oracle, SectorSign) {
  auto c = algebra("A1@3");
  // gamma(z0) = e3 squares to 1 and acts on the vacuum by the sector sign
  for (int sector : {1, -1}) {
    DunklOracle o(c, sector);
    PolySpinor v = one_spinor();
    PolySpinor out = o.act(Element::e(c, 2), v);
    PolySpinor expected;
    expected.terms[{0, 0}] = Scalar(sector);
    EXPECT_EQ(out, expected);
  }
}

class OracleProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(OracleProperty, ProductHomomorphism) {
  auto c = algebra(GetParam());
  DunklOracle o(c);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(c, rng, 2, 2), b = random_element(c, rng, 2, 2);
    PolySpinor v = o.random_vector(100 + t, 3);
    ASSERT_EQ(o.act(a * b, v), o.act(a, o.act(b, v)));
  }
}

TEST_P(OracleProperty, CliffordModule) {
  auto c = algebra(GetParam());
  DunklOracle o(c);
  std::mt19937_64 rng(52);
  std::vector<Covector> us;
  WittBasis w = witt_basis(c->space());
  for (int j = 0; j < w.ell; ++j) {
    us.push_back(w.plus[j]);
    us.push_back(w.minus[j]);
  }
  for (int t = 0; t < 4; ++t) us.push_back(gen::covector(rng, c->dim()));
  PolySpinor v = o.random_vector(9, 2);
  for (const auto& u : us)
    for (const auto& x : us) {
      Element a = Element::gamma(c, u) * Element::gamma(c, x) + Element::gamma(c, x) * Element::gamma(c, u);
      PolySpinor expected = o.act(Element::scalar(c, Scalar(2) * c->space().bilinear(u, x)), v);
      ASSERT_EQ(o.act(a, v), expected);
    }
}

TEST_P(OracleProperty, DunklCommutation) {
  auto c = algebra(GetParam());
  DunklOracle o(c);
  int d = c->dim();
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      Element lhs = Element::y(c, p) * Element::x(c, q) - Element::x(c, q) * Element::y(c, p);
      for (int s = 0; s < 5; ++s) {
        PolySpinor v = o.random_vector(s, 3);
        PolySpinor direct = o.act(Element::y(c, p), o.act(Element::x(c, q), v));
        direct -= o.act(Element::x(c, q), o.act(Element::y(c, p), v));
        ASSERT_EQ(direct, o.act(lhs, v));
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Groups, OracleProperty, ::testing::Values("A1@2", "A2@3", "B2@2", "A1@3"));

#include <gtest/gtest.h>

#include "gen.hpp"

using namespace pinosp;

namespace {

AlgebraPtr algebra(const char* spec) { return make_algebra(load_group(spec), {}); }

Element X(const AlgebraPtr& c, int p) { return Element::x(c, p - 1); }
Element Y(const AlgebraPtr& c, int p) { return Element::y(c, p - 1); }
Element E(const AlgebraPtr& c, int p) { return Element::e(c, p - 1); }
Element S(const AlgebraPtr& c, int k) { return Element::group(c, c->group().reflections()[k - 1].element); }
Element K(const AlgebraPtr& c, int cls) { return Element::scalar(c, c->kappa(cls - 1)); }

}  // namespace

TEST(Core, CherednikRelations) {
  auto c = algebra("A1@2");
  Element one = Element::scalar(c, 1);
  EXPECT_EQ(Y(c, 1) * X(c, 1), X(c, 1) * Y(c, 1) + one + K(c, 1) * S(c, 1));
  EXPECT_EQ(Y(c, 1) * X(c, 2), X(c, 2) * Y(c, 1) - K(c, 1) * S(c, 1));
  EXPECT_EQ(supercommutator(X(c, 1), Y(c, 1)), -(one + K(c, 1) * S(c, 1)));
  EXPECT_EQ(S(c, 1) * X(c, 1), X(c, 2) * S(c, 1));
  EXPECT_EQ((Y(c, 1) * X(c, 1)).to_string(), "1 + k1*s1 + x1*y1");
}

TEST(Core, Clifford) {
  auto c = algebra("A1@2");
  EXPECT_EQ(E(c, 2) * E(c, 1), -(E(c, 1) * E(c, 2)));
  EXPECT_EQ(E(c, 1) * E(c, 1), Element::scalar(c, 1));
  EXPECT_EQ(supercommutator(E(c, 1), E(c, 1)), Element::scalar(c, 2));
  for (int g = 0; g < c->group().order(); ++g)
    for (std::uint32_t A = 0; A < 4; ++A) {
      Monomial m;
      m.clifford = A;
      EXPECT_TRUE(supercommutator(Element::group(c, g), Element::monomial(c, m)).is_zero());
    }
}

TEST(Core, GammaOfCovectors) {
  auto c = algebra("A1@2");
  EXPECT_EQ(Element::gamma(c, basis_covector(2, 0) - basis_covector(2, 1)), E(c, 1) - E(c, 2));
  WittBasis w = witt_basis(c->space());
  Element expected = Scalar(frac(1, 2)) * E(c, 1) + Scalar(BaseNumber(0, frac(1, 2), 0, 0)) * E(c, 2);
  EXPECT_EQ(Element::gamma(c, w.plus[0]), expected);
}

TEST(Core, GeneralGramClifford) {
  Matrix g{{2, 1}, {1, 2}};
  auto G = std::make_shared<ReflectionGroup>(build_group(RootType::A, 1, 2, g));
  auto c = Algebra::create(G);
  EXPECT_EQ(E(c, 2) * E(c, 1), Element::scalar(c, 2) - E(c, 1) * E(c, 2));
  EXPECT_EQ(E(c, 1) * E(c, 1), Element::scalar(c, 2));
}

TEST(Core, IndexErrors) {
  auto c = algebra("A1@2");
  EXPECT_THROW(Element::x(c, 2), std::out_of_range);
  EXPECT_THROW(Element::group(c, 5), std::out_of_range);
  auto other = algebra("A1@2");
  EXPECT_THROW(X(c, 1) + X(other, 1), std::exception);
}

TEST(Core, Antisymmetrizer) {
  auto c = algebra("A1@2");
  Covector x1 = basis_covector(2, 0), x2 = basis_covector(2, 1);
  EXPECT_TRUE(antisymmetrize(c, {x1, x1}).is_zero());
  EXPECT_EQ(antisymmetrize(c, {x1, x2}), E(c, 1) * E(c, 2));
  EXPECT_EQ(antisymmetrize(c, {x1, x1 + x2}), E(c, 1) * E(c, 2));
  auto c3 = algebra("A1@3");
  Covector y1 = basis_covector(3, 0), y2 = basis_covector(3, 1);
  EXPECT_TRUE(antisymmetrize(c3, {y1, y2, y1 + y2}).is_zero());
}

TEST(Core, RhoAndChirality) {
  auto c = algebra("A1@2");
  Element r = rho(c, 0);
  Scalar inv_sqrt2(BaseNumber(0, 0, frac(1, 2), 0));
  EXPECT_EQ(r, inv_sqrt2 * (S(c, 1) * (E(c, 1) - E(c, 2))));
  EXPECT_EQ(r * r, Element::scalar(c, 1));
  Element g = chirality(c);
  EXPECT_EQ(g, Scalar(BaseNumber::i()) * (E(c, 1) * E(c, 2)));
  EXPECT_EQ(g * g, Element::scalar(c, 1));
}

TEST(Core, OcalExamples) {
  auto c = algebra("A1@2");
  Supercentralizer sc(c);
  Covector x1 = basis_covector(2, 0), x2 = basis_covector(2, 1);
  EXPECT_EQ(sc.ocal(x1), Scalar(frac(1, 2)) * (K(c, 1) * S(c, 1) * (E(c, 1) - E(c, 2))));
  EXPECT_TRUE((sc.ocal(x1) + sc.ocal(x2)).is_zero());
  auto c0 = make_algebra(load_group("A1@2"), KappaMode::parse("0"));
  EXPECT_TRUE(Supercentralizer(c0).ocal(x1).is_zero());
}

TEST(Core, NumericKappaMatchesSubstitution) {
  auto sym = algebra("B2@2");
  auto num = make_algebra(load_group("B2@2"), KappaMode::parse("1,-1/2"));
  std::vector<BaseNumber> v{1, frac(-1, 2)};
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    std::mt19937_64 r1 = rng, r2 = rng;
    Element a = random_element(sym, r1, 3, 2), b = random_element(sym, r1, 3, 2);
    Element an = random_element(num, r2, 3, 2), bn = random_element(num, r2, 3, 2);
    rng = r1;
    ASSERT_EQ((a * b).substitute(v).to_string(), (an * bn).to_string());
  }
}

class CoreProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(CoreProperty, Associativity) {
  auto c = algebra(GetParam());
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    Element a = random_element(c, rng, 2, 2), b = random_element(c, rng, 2, 2), d = random_element(c, rng, 2, 2);
    ASSERT_EQ((a * b) * d, a * (b * d)) << a << " | " << b << " | " << d;
  }
}

TEST_P(CoreProperty, NormalizationIsIdempotent) {
  auto c = algebra(GetParam());
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    Element a = random_element(c, rng, 3, 3) * random_element(c, rng, 2, 2);
    Element n = a.renormalize();
    ASSERT_EQ(n, a);
    ASSERT_EQ(n.renormalize(), n);
  }
}

TEST_P(CoreProperty, SuperJacobiAndSkewSymmetry) {
  auto c = algebra(GetParam());
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 100; ++t) {
    int pa = coin(rng), pb = coin(rng), pc = coin(rng);
    Element a = gen::homogeneous(c, rng, pa), b = gen::homogeneous(c, rng, pb), d = gen::homogeneous(c, rng, pc);
    Scalar sab = (pa * pb) % 2 ? 1 : -1;
    ASSERT_EQ(supercommutator(a, b), sab * supercommutator(b, a));
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    Scalar s = (pa * pb) % 2 ? -1 : 1;
    ASSERT_EQ(supercommutator(a, supercommutator(b, d)),
              supercommutator(supercommutator(a, b), d) + s * supercommutator(b, supercommutator(a, d)));
  }
}

TEST_P(CoreProperty, RhoConjugation) {
  auto c = algebra(GetParam());
  const auto& G = c->group();
  std::mt19937_64 rng(45);
  for (std::size_t k = 0; k < G.reflections().size(); ++k) {
    Element r = rho(c, static_cast<int>(k));
    ASSERT_EQ(r * r, Element::scalar(c, 1));
    for (int t = 0; t < 5; ++t) {
      Covector u = gen::covector(rng, c->dim());
      int g = G.reflections()[k].element;
      EXPECT_EQ(r * Element::linear(c, u) * r, Element::linear(c, G.act(g, u)));
      EXPECT_EQ(r * Element::gamma(c, u) * r, -Element::gamma(c, G.act(g, u)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, CoreProperty, ::testing::Values("A1@2", "A2@3", "B2@2"));

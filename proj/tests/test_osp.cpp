#include <gtest/gtest.h>

#include "gen.hpp"

using namespace pinosp;

namespace {
AlgebraPtr algebra(const char* spec, const char* kappa = "symbolic") {
  return make_algebra(load_group(spec), KappaMode::parse(kappa));
}
}  // namespace

TEST(Osp, GeneratorsInA1) {
  auto c = algebra("A1@2");
  Osp o(c, true);
  Element s = Element::group(c, c->group().reflections()[0].element);
  Element h = Element::x(c, 0) * Element::y(c, 0) + Element::x(c, 1) * Element::y(c, 1) + Element::scalar(c, 1) +
              c->kappa(0) * s;
  EXPECT_EQ(o.H(), h);
  EXPECT_EQ(supercommutator(o.X(), o.D()) - Scalar(2) * o.H(), Element(c));
  auto c0 = algebra("A1@2", "0");
  Osp o0(c0);
  EXPECT_EQ(o0.Ep(), Scalar(frac(1, 2)) * (Element::x(c0, 0) * Element::x(c0, 0) + Element::x(c0, 1) * Element::x(c0, 1)));
}

TEST(Osp, RelationsHoldEverywhere) {
  for (const char* g : {"A1@2", "A2@3", "B2@2", "B3@3", "D3@3"}) {
    Osp o(algebra(g));
    for (const auto& r : o.relation_residuals()) EXPECT_TRUE(r.residual.is_zero()) << g << " " << r.id;
  }
  Matrix gram{{2, 1}, {1, 2}};
  auto c = Algebra::create(std::make_shared<ReflectionGroup>(build_group(RootType::A, 1, 2, gram)));
  EXPECT_NO_THROW(Osp(c, true));
}

TEST(Osp, PairElements) {
  auto c = algebra("A2@3");
  Osp o(c);
  EXPECT_EQ(o.pair_element(Aux::xplus, Aux::xminus), o.H());
  EXPECT_EQ(o.pair_element(Aux::xplus, Aux::xplus), Scalar(2) * o.Ep());
  EXPECT_EQ(o.pair_element(Aux::xminus, Aux::xminus), Scalar(-2) * o.Em());
  EXPECT_EQ(o.pair_element(Aux::xplus, Aux::gamma), o.X());
  EXPECT_EQ(o.pair_element(Aux::xminus, Aux::gamma), o.D());
  Scalar r2(BaseNumber::sqrt2());
  EXPECT_EQ(r2 * o.Fp(), o.X());
  EXPECT_EQ(r2 * o.Fm(), o.D());
}

TEST(Osp, GammaGammaPairVanishes) {
  // The supersymmetric square of the odd basis vector is antisymmetric in the
  // Clifford factor, so the defining sum cancels.
  auto c = algebra("A1@2", "0");
  EXPECT_TRUE(Osp(c).pair_element(Aux::gamma, Aux::gamma).is_zero());
}

TEST(Osp, Projectors) {
  auto c = algebra("A1@2");
  Osp o(c);
  Element one = Element::scalar(c, 1);
  EXPECT_EQ(o.P_plus(one), one);
  EXPECT_EQ(o.P_minus(one), one);
  Element s = Element::group(c, c->group().reflections()[0].element);
  Element e1 = Element::e(c, 0), e2 = Element::e(c, 1);
  EXPECT_EQ(o.P_plus(e1), -(c->kappa(0) * (s * (e1 - e2))));
  Supercentralizer sc(c);
  EXPECT_EQ(o.P_plus(e1), Scalar(-2) * sc.ocal(basis_covector(2, 0)));
  const auto& r = c->group().reflections()[0];
  EXPECT_EQ(o.P_plus(s), (Scalar(-2) * Scalar(inverse_sqrt(r.root_norm))) * (sc.ocal(r.root) * rho(c, 0)));
}

TEST(Osp, PAlpha) {
  auto c = algebra("A1@2");
  Osp o(c);
  Element one = Element::scalar(c, 1);
  EXPECT_EQ(o.P_alpha(one), one);
  Supercentralizer sc(c);
  Element m = sc.M(basis_covector(2, 0), basis_covector(2, 1));
  EXPECT_EQ(o.P_alpha(m), m);
  Element a = Element::x(c, 0) * Element::y(c, 0) - Element::x(c, 1) * Element::y(c, 1);
  Element p = o.P_alpha(a);
  EXPECT_TRUE(supercommutator(o.Ep(), p).is_zero());
  EXPECT_TRUE(supercommutator(o.Em(), p).is_zero());
  EXPECT_THROW(o.P_alpha(Element::x(c, 0)), std::invalid_argument);
  EXPECT_THROW(o.P_alpha(a, 0), std::runtime_error);
}

TEST(Osp, QAndR) {
  auto c = algebra("A1@2");
  Osp o(c);
  Element one = Element::scalar(c, 1);
  EXPECT_EQ(o.Q_plus(one), o.H() + one);
  for (const auto& u : {basis_covector(2, 0), basis_covector(2, 1), basis_covector(2, 0) + basis_covector(2, 1)}) {
    Element r = o.R(u), g = Element::gamma(c, u);
    EXPECT_EQ(r, o.Q_minus(g));
    EXPECT_TRUE((o.D() * r + (r + g) * o.D()).is_zero());
  }
}

TEST(Osp, CasimirAndScasimir) {
  for (const char* g : {"A1@2", "B2@2"}) {
    auto c = algebra(g);
    Osp o(c);
    Element s = o.scasimir(), om = o.casimir();
    EXPECT_EQ(s * s, om + Element::scalar(c, frac(1, 4)));
    EXPECT_TRUE(supercommutator(om, o.X()).is_zero());
    EXPECT_TRUE(supercommutator(om, o.D()).is_zero());
    EXPECT_EQ(o.P_plus(s), Scalar(2) * (s * s));
    EXPECT_EQ(o.P_minus(s), Scalar(2) * (s * s));
    EXPECT_TRUE(plain_anticommutator(s, o.X()).is_zero());
    EXPECT_TRUE(commutator(s, o.H()).is_zero());
  }
}

TEST(OspProperty, ProjectorLawsOnRandomElements) {
  auto c = algebra("A2@3");
  Osp o(c);
  Supercentralizer sc(c);
  std::mt19937_64 rng(61);
  std::vector<Element> central{Element::scalar(c, 1), sc.ocal(basis_covector(3, 0)),
                               sc.O({basis_covector(3, 0), basis_covector(3, 1)}), rho(c, 1)};
  for (int t = 0; t < 30; ++t) {
    Element a = random_element(c, rng, 2, 2), b = random_element(c, rng, 2, 2);
    for (int sign : {1, -1}) {
      ASSERT_EQ(o.P(a + b, sign), o.P(a, sign) + o.P(b, sign));
      const Element& z = central[t % central.size()];
      ASSERT_EQ(o.P(z * a, sign), z * o.P(a, sign));
      ASSERT_EQ(o.P(a * z, sign), o.P(a, sign) * z);
    }
    ASSERT_EQ(o.P_minus(a) - o.P_plus(a), supercommutator(o.H(), a));
  }
}

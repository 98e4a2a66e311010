#include <gtest/gtest.h>

#include "gen.hpp"

using namespace pinosp;

namespace {
Covector x(int d, int i) { return basis_covector(d, i - 1); }
}  // namespace

TEST(ReflectionGroups, A1) {
  ReflectionGroup g = build_group(RootType::A, 1, 2);
  EXPECT_EQ(g.order(), 2);
  ASSERT_EQ(g.reflections().size(), 1u);
  EXPECT_EQ(g.class_count(), 1);
  const Reflection& r = g.reflections()[0];
  Covector a = x(2, 1) - x(2, 2);
  EXPECT_TRUE(r.root == a || r.root == -a);
  EXPECT_EQ(r.coroot, g.space().beta(r.root));
  EXPECT_EQ(g.act(r.element, x(2, 1)), x(2, 2));
  EXPECT_EQ(g.act(r.element, r.root), -r.root);
}

TEST(ReflectionGroups, OrdersAndClasses) {
  struct Case {
    const char* spec;
    int order, reflections, classes;
  };
  for (const Case& c : {Case{"A1@2", 2, 1, 1}, Case{"A2@3", 6, 3, 1}, Case{"B2@2", 8, 4, 2}, Case{"A3@4", 24, 6, 1},
                        Case{"B3@3", 48, 9, 2}, Case{"D3@3", 24, 6, 1}, Case{"A1@6", 2, 1, 1}}) {
    ReflectionGroup g = parse_group_spec(c.spec);
    EXPECT_EQ(g.order(), c.order) << c.spec;
    EXPECT_EQ(static_cast<int>(g.reflections().size()), c.reflections) << c.spec;
    EXPECT_EQ(g.class_count(), c.classes) << c.spec;
  }
}

TEST(ReflectionGroups, B2ClassesSplitByLength) {
  ReflectionGroup g = parse_group_spec("B2@2");
  for (const auto& r : g.reflections())
    for (const auto& t : g.reflections()) EXPECT_EQ(r.cls == t.cls, r.root_norm == t.root_norm);
}

TEST(ReflectionGroups, BadSpecs) {
  EXPECT_THROW(parse_group_spec("A1"), std::exception);
  EXPECT_THROW(parse_group_spec("C2@2"), std::exception);
  EXPECT_THROW(parse_group_spec("A2@2"), std::exception);  // A2 needs 3 coordinates
  EXPECT_THROW(parse_group_spec("B3@2"), std::exception);
}

TEST(ReflectionGroups, CustomGroupFile) {
  CustomGroup c = parse_custom_group(R"({"generators": [[[0,1],[1,0]], [[-1,0],[0,1]]], "kappa_labels": ["a", "b"]})");
  EXPECT_EQ(c.group->order(), 8);
  EXPECT_EQ(c.group->class_count(), 2);
  EXPECT_EQ(c.kappa_labels, (std::vector<std::string>{"a", "b"}));
  CustomGroup r = parse_custom_group(R"({"generators": [[[0,1],[1,0]]], "gram": [[2,1],[1,2]]})");
  EXPECT_EQ(r.group->order(), 2);
  EXPECT_THROW(parse_custom_group(R"({"generators": [[[2,0],[0,1]]]})"), std::exception);  // does not preserve B
  EXPECT_THROW(parse_custom_group("not json"), std::exception);
  EXPECT_THROW(parse_custom_group(R"({"gram": [[1]]})"), std::exception);
}

TEST(ReflectionGroupsProperty, GroupAxiomsAndGramPreservation) {
  std::mt19937_64 rng(31);
  for (const char* spec : {"A2@3", "B2@2", "B3@3", "D3@3"}) {
    ReflectionGroup g = parse_group_spec(spec);
    const QuadraticSpace& s = g.space();
    int d = g.dim();
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int t = 0; t < 60; ++t) {
      int a = pick(rng), b = pick(rng);
      Covector u = gen::covector(rng, d), v = gen::covector(rng, d);
      ASSERT_EQ(s.bilinear(g.act(a, u), g.act(a, v)), s.bilinear(u, v));
      ASSERT_EQ(g.act(g.multiply(a, b), u), g.act(a, g.act(b, u)));
      ASSERT_EQ(g.multiply(a, g.inverse(a)), 0);
      ASSERT_EQ(pairing(g.act(a, s.beta(u)), g.act(a, v)), pairing(s.beta(u), v));
    }
    for (const auto& r : g.reflections()) {
      EXPECT_EQ(g.multiply(r.element, r.element), 0);
      for (int p = 1; p <= d; ++p) {
        Covector u = x(d, p);
        EXPECT_EQ(g.act(r.element, u), u - pairing(r.coroot, u) * r.root);
      }
      for (int t = 0; t < 10; ++t) {
        int h = pick(rng);
        int conj = g.multiply(g.multiply(h, r.element), g.inverse(h));
        ASSERT_GE(g.reflection_of(conj), 0);
        EXPECT_EQ(g.reflections()[g.reflection_of(conj)].cls, r.cls);
      }
    }
  }
}

TEST(ReflectionGroups, SubstitutionOnPolynomials) {
  auto ctx = Algebra::create(std::make_shared<ReflectionGroup>(parse_group_spec("A1@2")));
  Exponents c;
  c.set(0, 2);
  c.set(1, 1);
  const auto& img = ctx->act_x(ctx->group().reflections()[0].element, c);
  ASSERT_EQ(img.size(), 1u);
  EXPECT_EQ(img[0].first[0], 1);
  EXPECT_EQ(img[0].first[1], 2);
  EXPECT_EQ(img[0].second, BaseNumber(1));
}

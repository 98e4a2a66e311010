#include <gtest/gtest.h>

#include <json.hpp>

#include "gen.hpp"

using namespace pinosp;

namespace {

RunOptions quiet() {
  RunOptions o;
  o.timing = false;
  return o;
}

int count(const std::vector<SuiteReport>& rs, Status s) {
  return static_cast<int>(std::count_if(rs.begin(), rs.end(), [s](const SuiteReport& r) { return r.status == s; }));
}

}  // namespace

TEST(Suites, CatalogIsPinned) {
  const std::vector<std::string> expected{
      "centralizer-membership.tuples",
      "centralizer-membership.witt",
      "corollary.Ouvw2",
      "corollary.e24",
      "corollary.e25",
      "corollary.e26",
      "corollary.e27",
      "corollary.ij_ki",
      "corollary.ij_kl",
      "corollary.ij_klmn",
      "corollary.jk_jkl",
      "corollary.jk_jklm",
      "corollary.jk_jlm",
      "corollary.jk_jlmn",
      "corollary.jk_lmn",
      "corollary.jkl_jkm",
      "corollary.jkl_jmn",
      "e_Auv.quantization",
      "e_Auvw.quantization",
      "e_Auvwx.quantization",
      "e_Bwz2.forms",
      "e_Casiosp.PpFmFp",
      "e_Casiosp.PpFpFm",
      "e_Casiosp.central",
      "e_Casiosp.combined",
      "e_Centsl2.commute",
      "e_Clifcom.anticommutator",
      "e_DAMO.forms",
      "e_Gamma.chirality",
      "e_OD.scasimir",
      "e_OD.signs",
      "e_Ogamma.anticommutator",
      "e_Omega.central",
      "e_Ouv.line1",
      "e_Ouv.line2",
      "e_Ouv2.antisymmetrized",
      "e_Ouvw.explicit",
      "e_OuvwOx.line1",
      "e_OuvwOx.line2",
      "e_Ov.rho_form",
      "e_Ov2.commutator",
      "e_POuv.projector",
      "e_RC.relations",
      "e_SCasiosp.parity",
      "e_SCasiosp.square",
      "e_SCasiosprel.P",
      "e_adso.action",
      "e_asym.idempotent",
      "e_asym2.expansion",
      "e_central.Oj",
      "e_central.Ojk",
      "e_central.Ojkl",
      "e_central.alternative",
      "e_central.rho",
      "e_central.sumO3",
      "e_comre.relations",
      "e_lemma1.ab",
      "e_osp.generators",
      "e_psiB.invariance",
      "e_s.conjugation",
      "l_Bg.rho",
      "l_Buv.symmetry",
      "l_O2gammas.positions",
      "l_O45.n4",
      "l_O45.n5",
      "l_Ogammas.positions",
      "l_Oug.Omega",
      "l_Oun.first",
      "l_Oun.second",
      "l_Oun2.n3",
      "l_Oun2.n4",
      "l_Pdelta.additive",
      "l_Pdelta.fixed",
      "l_Pdelta.product",
      "l_Pdelta.sandwich",
      "l_Pdeltagamma.expansion",
      "l_groupaction.rho",
      "l_lemma3.e1",
      "l_lemma3.e3",
      "l_rhoG.conjugation",
      "l_uvx.nested",
      "osp12.C",
      "osp12.normalization",
      "osp12re.EpEm",
      "osp12re.FE",
      "osp12re.FF",
      "osp12re.FpFm",
      "osp12re.HE",
      "osp12re.HF",
      "p_BB.bracket",
      "p_O2O34.first",
      "p_O2O34.second",
      "p_O3O3.pairing",
      "p_OA2.n1",
      "p_OA2.n2",
      "p_OA2.n3",
      "p_OA2.n4",
      "p_OabOuv.first",
      "p_OabOuv.second",
      "p_OujOun.n2",
      "p_OujOun.n3",
      "p_OujOun.n4",
      "p_OujOun.n5",
      "p_bbH.bracket",
      "p_gensym.Qminus",
      "p_gensym.Qplus",
      "p_gensym2.R",
      "p_osp12.P-dPd",
      "p_osp12.PmPp",
      "p_osp12.membership",
      "p_ospcent.Pomegauv",
      "p_ospcent.Ps",
      "p_ospcent.rho",
      "p_sl2.Palpha",
  };
  std::vector<std::string> ids;
  for (const auto& c : catalog()) ids.push_back(c.id);
  EXPECT_EQ(ids, expected);
  std::set<std::string> unique(ids.begin(), ids.end());
  EXPECT_EQ(unique.size(), ids.size());
  for (const auto& c : catalog()) EXPECT_FALSE(c.anchor.empty()) << c.id;
}

TEST(Suites, SuiteIds) {
  auto ids = suite_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_NE(std::find(ids.begin(), ids.end(), "osp12re"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "corollary"), ids.end());
  EXPECT_EQ(find_case("corollary.e24")->suite(), "corollary");
  EXPECT_EQ(find_case("nope"), nullptr);
  EXPECT_EQ(find_case("e_OuvwOx.line1")->anchor, "Specific cases of the previous proposition");
}

TEST(Suites, Osp12reInA1) {
  auto rs = run_suite("osp12re", load_group("A1@2"), {}, quiet());
  ASSERT_EQ(rs.size(), 6u);
  for (const auto& r : rs) {
    EXPECT_EQ(r.status, Status::pass) << r.id;
    EXPECT_EQ(r.residual_terms, 0u);
    EXPECT_TRUE(r.witness.empty());
  }
}

TEST(Suites, MembershipInA2) {
  auto rs = run_suite("centralizer-membership", load_group("A2@3"), {}, quiet());
  EXPECT_EQ(count(rs, Status::pass), 2);
}

TEST(Suites, OA2NumericKappa) {
  auto rs = run_suite("p_OA2", load_group("B2@2"), KappaMode::parse("1,-1/2"), quiet());
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(rs[0].status, Status::pass);
  EXPECT_EQ(rs[1].status, Status::pass);
  EXPECT_EQ(rs[2].status, Status::skipped);
  EXPECT_EQ(rs[2].reason, "needs d >= 3");
  EXPECT_EQ(rs[0].kappa, "1,-1/2");
}

TEST(Suites, SingleCaseAndErrors) {
  auto rs = run_suite("p_gensym2.R", load_group("A2@3"), {}, quiet());
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].status, Status::pass);
  EXPECT_THROW(run_suite("nope", load_group("A1@2"), {}, quiet()), std::invalid_argument);
  EXPECT_THROW(load_group("Z9@9"), std::exception);
  EXPECT_THROW(load_group("custom:/nonexistent/file.json"), ParseError);
  EXPECT_THROW(make_algebra(load_group("A1@2"), KappaMode::parse("1,2")), std::invalid_argument);
  EXPECT_THROW(KappaMode::parse("k1"), ParseError);
  EXPECT_THROW(KappaMode::parse("1,,"), ParseError);
}

TEST(Suites, NonOrthonormalGroupsSkipOrthonormalCases) {
  auto rs = run_suite("corollary.e24", load_group("custom:" PINOSP_TEST_DATA "/a1_skew.json"), {}, quiet());
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].status, Status::skipped);
  auto ms = run_suite("l_Oun", load_group("custom:" PINOSP_TEST_DATA "/a1_skew.json"), {}, quiet());
  for (const auto& r : ms) EXPECT_EQ(r.status, Status::pass) << r.id;
}

TEST(Suites, FailuresCarryAWitness) {
  IdentityCase broken{"x.broken", "anchor", 1, false, [](const Workspace& ws) {
                        return std::vector<Equation>{{ws.osp().X(), ws.osp().X()}, {ws.osp().H(), ws.num(0)}};
                      }};
  GroupConfig cfg = load_group("A1@2");
  Workspace ws(make_algebra(cfg, {}));
  SuiteReport r = run_case(broken, ws, cfg, {}, quiet());
  EXPECT_EQ(r.status, Status::fail);
  EXPECT_EQ(r.residual_terms, ws.osp().H().size());
  EXPECT_EQ(r.witness, "equation 2: " + monomial_string(*ws.ctx(), *ws.osp().H().witness()));
  IdentityCase throws{"x.throws", "anchor", 1, false, [](const Workspace&) -> std::vector<Equation> {
                        throw std::runtime_error("boom");
                      }};
  SuiteReport t = run_case(throws, ws, cfg, {}, quiet());
  EXPECT_EQ(t.status, Status::fail);
  EXPECT_EQ(t.reason, "error: boom");
}

TEST(Suites, DeterministicReports) {
  GroupConfig cfg = load_group("A2@3");
  RunOptions one = quiet(), many = quiet();
  many.jobs = 4;
  auto a = report_json(run_suite("all", cfg, {}, one));
  auto b = report_json(run_suite("all", cfg, {}, many));
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_table(run_suite("l_Oun", cfg, {}, one)), report_table(run_suite("l_Oun", cfg, {}, many)));
}

TEST(Suites, SymbolicPassImpliesNumericPass) {
  GroupConfig cfg = load_group("B2@2");
  auto sym = run_suite("all", cfg, {}, quiet());
  for (const char* k : {"1,-1/2", "2/3,3"}) {
    auto num = run_suite("all", cfg, KappaMode::parse(k), quiet());
    ASSERT_EQ(num.size(), sym.size());
    for (std::size_t i = 0; i < sym.size(); ++i)
      if (sym[i].status == Status::pass) EXPECT_EQ(num[i].status, Status::pass) << k << " " << num[i].id;
  }
}

TEST(Suites, JsonFields) {
  auto rs = run_suite("osp12re", load_group("A1@2"), {}, quiet());
  auto j = nlohmann::json::parse(report_json(rs));
  ASSERT_EQ(j.size(), 6u);
  for (const auto& r : j) {
    for (const char* f : {"id", "anchor", "group", "dim", "kappa", "status", "residual_terms", "witness", "ms"})
      EXPECT_TRUE(r.contains(f)) << f;
    EXPECT_EQ(r["status"], "pass");
    EXPECT_TRUE(r["witness"].is_null());
  }
}

TEST(Suites, OracleCrosscheck) {
  GroupConfig cfg = load_group("A1@2");
  CrosscheckOptions o;
  o.samples = 10;
  o.products = 10;
  EXPECT_EQ(run_oracle_crosscheck(cfg, {}, o).status, Status::pass);
  o.mutate = true;
  SuiteReport bad = run_oracle_crosscheck(cfg, {}, o);
  EXPECT_EQ(bad.status, Status::fail);
  EXPECT_FALSE(bad.witness.empty());
  RunOptions ro = quiet();
  ro.oracle = true;
  for (const auto& r : run_suite("e_RC", cfg, {}, ro)) EXPECT_EQ(r.oracle, std::optional<bool>(true));
}

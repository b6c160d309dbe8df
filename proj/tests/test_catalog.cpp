#include <gtest/gtest.h>

#include "poincare/catalog.hpp"

using namespace poincare;

namespace {

const Coefficient mu2 = Coefficient::mu() * Coefficient::mu();

RepSpec make(const std::string& token, int two_s) { return build(*RepLabel::parse(token), SpinWeight(two_s)); }

struct Case {
  std::string token;
  int two_s;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (int two_s = 0; two_s <= 2; ++two_s)
    for (const auto& l : catalog_labels(SpinWeight(two_s))) out.push_back({l.token(), two_s});
  return out;
}

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
  std::string n;
  for (char c : info.param.token) {
    if (c == '+') n += "plus";
    else if (c == '-') n += "minus";
    else if (std::isalnum(static_cast<unsigned char>(c))) n += c;
    else n += '_';
  }
  return n + "_2s" + std::to_string(info.param.two_s);
}

}  // namespace

TEST(Catalog, UpEnergyIsMultiplication) {
  const RepSpec up = make("up", 0);
  EXPECT_EQ(up.blocks, 1u);
  EXPECT_EQ(up.p0, ops::energy());
}

TEST(Catalog, SymOneThetaIsLinearSwap) {
  const RepSpec s = make("sym1", 0);
  EXPECT_FALSE(s.theta.antilinear());
  EXPECT_EQ(s.theta, ops::kron(detail::small_matrix({{0, 1}, {1, 0}}), ops::identity()));
}

TEST(Catalog, QuadMinusPi) {
  const RepSpec q = make("quad:-1", 0);
  const auto form = constant_form(q.pi);
  ASSERT_TRUE(form);
  EXPECT_TRUE(form->antilinear);
  EXPECT_FALSE(form->upsilon);
  EXPECT_EQ(form->matrix, detail::small_matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}));
}

TEST(Catalog, QuadOnlyAtSpinZero) {
  EXPECT_THROW(make("quad:+1", 2), std::invalid_argument);
  EXPECT_THROW(make("quad:-1", 1), std::invalid_argument);
}

TEST(Catalog, LabelTokensRoundTrip) {
  for (const auto& l : catalog_labels(SpinWeight(0))) {
    const auto back = RepLabel::parse(l.token());
    ASSERT_TRUE(back) << l.token();
    EXPECT_EQ(*back, l);
  }
  EXPECT_FALSE(RepLabel::parse("quad"));
  EXPECT_FALSE(RepLabel::parse("octet"));
}

TEST(Catalog, EnumerationCounts) {
  EXPECT_EQ(enumerate_catalog(SpinWeight(0)).size(), 14u);
  EXPECT_EQ(enumerate_catalog(SpinWeight(1)).size(), 12u);
  for (const auto& e : enumerate_catalog(SpinWeight(1))) EXPECT_NE(e.label.kind, RepKind::quad);
}

TEST(Catalog, SpectrumDecisionTable) {
  using K = OperatorKind;
  using S = SpectrumClass;
  EXPECT_EQ(allowed_spectra(K::antiunitary, K::unitary), (std::set<S>{S::up, S::down}));
  EXPECT_EQ(allowed_spectra(K::unitary, K::unitary), (std::set<S>{S::symmetric}));
  EXPECT_EQ(allowed_spectra(K::unitary, K::antiunitary), (std::set<S>{S::symmetric}));
  EXPECT_EQ(allowed_spectra(K::antiunitary, K::antiunitary), (std::set<S>{S::symmetric}));
}

TEST(Catalog, EveryEntryInItsAllowedSpectrum) {
  for (int two_s = 0; two_s <= 3; ++two_s)
    for (const auto& e : enumerate_catalog(SpinWeight(two_s)))
      EXPECT_TRUE(allowed_spectra(e.theta, e.pi).count(e.spectrum)) << e.label.token();
}

TEST(Catalog, OppositeBlockSignsInSymThree) {
  const RepSpec s = make("sym3", 0);
  const auto rel = find_relation(s, "KP.11");
  ASSERT_TRUE(rel);
  EXPECT_TRUE(evaluate(*rel).is_zero());
  EXPECT_EQ(s.p0.block(0, 0), -s.p0.block(1, 1));
  EXPECT_EQ(s.k[0].block(0, 0), -s.k[0].block(1, 1));
}

TEST(Catalog, ThetaSquareSignsOfOctet) {
  for (int two_s = 0; two_s <= 3; ++two_s)
    for (const char* t : {"up", "down", "sym5", "sym6"}) {
      const auto r = verify_discrete_relations(make(t, two_s));
      ASSERT_TRUE(r.found.count("theta_square"));
      EXPECT_EQ(r.found.at("theta_square"), Number(two_s % 2 == 0 ? 1 : -1)) << t << " 2s=" << two_s;
    }
}

TEST(Catalog, QuadPiSquares) {
  EXPECT_EQ(verify_discrete_relations(make("quad:+1", 0)).found.at("pi_square"), Number(1));
  EXPECT_EQ(verify_discrete_relations(make("quad:-1", 0)).found.at("pi_square"), Number(-1));
}

TEST(Catalog, OmegaOfSymplecticNewUp) {
  const auto r = verify_discrete_relations(make("newup:symplectic", 0));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.found.at("omega"), Number(-1));
  EXPECT_EQ(verify_discrete_relations(make("newup:identity", 0)).found.at("omega"), Number(1));
}

TEST(Catalog, SymFiveBothAntiunitary) {
  const RepSpec s = make("sym5", 0);
  EXPECT_EQ(s.theta_kind(), OperatorKind::antiunitary);
  EXPECT_EQ(s.pi_kind(), OperatorKind::antiunitary);
  const auto r = verify_discrete_relations(s);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.count(CheckStatus::recorded), 1u);
}

TEST(Catalog, CasimirExamples) {
  const auto up0 = casimirs(make("up", 0));
  ASSERT_TRUE(up0.mass_value && up0.spin_value);
  EXPECT_EQ(*up0.mass_value, mu2);
  EXPECT_TRUE(up0.spin_value->is_zero());

  const auto up1 = casimirs(make("up", 1));
  ASSERT_TRUE(up1.spin_value);
  EXPECT_EQ(*up1.spin_value, Number::rational(-3, 4) * mu2);

  const auto down1 = casimirs(make("down", 1));
  ASSERT_TRUE(down1.spin_value);
  EXPECT_EQ(*down1.spin_value, Number::rational(-3, 4) * mu2);

  const auto quad = casimirs(make("quad:-1", 0));
  ASSERT_TRUE(quad.mass_value);
  ASSERT_TRUE(quad.spin_value);
  EXPECT_EQ(*quad.mass_value, mu2);
  EXPECT_TRUE(quad.spin_value->is_zero());

  const auto sym = casimirs(make("sym1", 2));
  ASSERT_TRUE(sym.spin_value);
  EXPECT_EQ(*sym.spin_value, Number(-2) * mu2);
}

TEST(Catalog, LubanskiTimeComponentCommutesWithEnergy) {
  const RepSpec up = make("up", 2);
  EXPECT_TRUE(commutator(lubanski(up)[0], up.p0).is_zero());
}

TEST(Catalog, CorruptedBoostFailsLorentzRelations) {
  RepSpec bad = make("up", 1);
  bad.k[0] = boost_generator(1, SpinWeight(1), false);
  const auto r = verify_lie_relations(bad);
  EXPECT_FALSE(r.all_pass());
  bool kk_fails = false;
  for (const auto& c : r.checks)
    if (c.name.rfind("lie.KK.", 0) == 0 && c.status == CheckStatus::fail) kk_fails = true;
  EXPECT_TRUE(kk_fails);
}

TEST(Catalog, AntilinearGeneratorRejected) {
  RepSpec bad = make("up", 0);
  bad.j[1] = ops::conjugation();
  EXPECT_THROW(verify_discrete_relations(bad), std::invalid_argument);
}

class EveryRep : public ::testing::TestWithParam<Case> {};

TEST_P(EveryRep, LieRelationsExact) {
  const auto r = verify_lie_relations(make(GetParam().token, GetParam().two_s));
  EXPECT_EQ(r.checks.size(), 45u);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.name << " " << c.detail;
}

TEST_P(EveryRep, DiscreteRelationsExact) {
  const RepSpec rep = make(GetParam().token, GetParam().two_s);
  const auto r = verify_discrete_relations(rep);
  for (const auto& c : r.checks) EXPECT_NE(c.status, CheckStatus::fail) << c.name << " " << c.detail;
  EXPECT_EQ(r.found.at("theta_square"), Number(rep.theta_square));
  EXPECT_EQ(r.found.at("pi_square"), Number(rep.pi_square));
}

TEST_P(EveryRep, GeneratorsSelfAdjoint) {
  const auto r = verify_self_adjoint(make(GetParam().token, GetParam().two_s));
  EXPECT_EQ(r.checks.size(), 10u);
  EXPECT_TRUE(r.all_pass());
}

TEST_P(EveryRep, CasimirsAreScalars) {
  const auto r = verify_casimirs(make(GetParam().token, GetParam().two_s));
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.name << " " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(SpinUpToOne, EveryRep, ::testing::ValuesIn(all_cases()), case_name);

#include "qsuper/serre.hpp"
#include "qsuper/verify.hpp"
#include "numeric_oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace qsuper;
using qsuper::testing::q;
using namespace qsuper::oracle;

namespace {

Word word(const char* text) { return parse_word(text); }

const std::vector<std::vector<long>> sl3_gram = {{2, -1}, {-1, 2}};

}  // namespace

TEST(Oracle, Sl2SquareHasNoSingularVector) {
  EXPECT_TRUE(oracle_scan({{2}}, {0}, {{0, 0}}, Rational(3), {Rational(5, 7)}).empty());
}

TEST(Oracle, Sl3DegreeTwoOneCoefficientsAtSamplePoints) {
  // Words F1F1F2, F1F2F1, F2F1F1 as sequences.
  const std::vector<std::vector<int>> words = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const std::pair<Rational, std::vector<Rational>> points[] = {
      {Rational(2), {Rational(3), Rational(5, 7)}},
      {Rational(3, 2), {Rational(-2, 9), Rational(11)}},
      {Rational(-5), {Rational(1, 4), Rational(7, 3)}},
  };
  for (const auto& [qv, z] : points) {
    const auto basis = oracle_scan(sl3_gram, {0, 0}, words, qv, z);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0][0], Rational(1));
    EXPECT_EQ(basis[0][1], -(qv + 1 / qv));
    EXPECT_EQ(basis[0][2], Rational(1));
  }
}

TEST(SingularScan, Sl3DegreeTwoOneMatchesOracle) {
  const ModuleContext ctx(catalog("sl3"), GenericWeight{}, 4);
  const auto result = singular_scan(ctx, {2, 1});
  ASSERT_EQ(result.dimension(), 1u);
  const auto& comb = result.vectors[0].combination;
  ASSERT_EQ(comb.size(), 3u);
  const Rational qv(3, 2);
  const std::vector<Rational> z = {Rational(-2, 9), Rational(11)};
  const auto oracle = oracle_scan(sl3_gram, {0, 0}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, qv, z);
  ASSERT_EQ(oracle.size(), 1u);
  EXPECT_EQ(evaluate(comb.at(word("F1 F1 F2")), qv, z), oracle[0][0]);
  EXPECT_EQ(evaluate(comb.at(word("F1 F2 F1")), qv, z), oracle[0][1]);
  EXPECT_EQ(evaluate(comb.at(word("F2 F1 F1")), qv, z), oracle[0][2]);
}

TEST(SingularScan, Sl3DegreeTwoOneRegression) {
  // Frozen after the oracle tests above agreed.
  const ModuleContext ctx(catalog("sl3"), GenericWeight{}, 4);
  const auto result = singular_scan(ctx, {2, 1});
  ASSERT_EQ(result.dimension(), 1u);
  const auto& comb = result.vectors[0].combination;
  EXPECT_TRUE(comb.at(word("F1 F1 F2")).is_one());
  EXPECT_EQ(comb.at(word("F1 F2 F1")), -q(1, 2) - q(-1, 2));
  EXPECT_TRUE(comb.at(word("F2 F1 F1")).is_one());
}

TEST(SingularScan, Sl2DegreeTwoIsEmpty) {
  const ModuleContext ctx(catalog("sl2"), GenericWeight{}, 3);
  EXPECT_EQ(singular_scan(ctx, {2}).dimension(), 0u);
}

TEST(SingularScan, Sl21IsotropicSquare) {
  const ModuleContext ctx(catalog("sl2_1"), GenericWeight{}, 3);
  const auto result = singular_scan(ctx, {0, 2});
  ASSERT_EQ(result.dimension(), 1u);
  ASSERT_EQ(result.vectors[0].combination.size(), 1u);
  EXPECT_TRUE(result.vectors[0].combination.at(word("F2 F2")).is_one());
  EXPECT_EQ(result.vectors[0].image, ModuleVector::basis({1, 1}, 2));
}

TEST(SingularScan, Sl21MixedDegreeAgreesWithOracle) {
  const ModuleContext ctx(catalog("sl2_1"), GenericWeight{}, 4);
  const auto result = singular_scan(ctx, {1, 2});
  const Rational qv(2);
  const std::vector<Rational> z = {Rational(3), Rational(1, 5)};
  const auto oracle = oracle_scan({{2, -1}, {-1, 0}}, {0, 1}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, qv, z);
  ASSERT_EQ(result.dimension(), oracle.size());
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    for (std::size_t w = 0; w < 3; ++w) {
      const auto it = result.vectors[k].combination.find(result.words[w]);
      const Rational value = it == result.vectors[k].combination.end() ? Rational(0) : evaluate(it->second, qv, z);
      EXPECT_EQ(value, oracle[k][w]) << "vector " << k << " word " << compact_word(result.words[w]);
    }
  }
}

TEST(SingularScan, ImagesAreAnnihilatedByEAndEhat) {
  const std::pair<const char*, Multidegree> cases[] = {{"sl3", {2, 1}}, {"sl3", {1, 2}}, {"sl2_1", {0, 2}}, {"sl2_1", {1, 2}}};
  for (const auto& [name, degree] : cases) {
    const ModuleContext ctx(catalog(name), GenericWeight{}, 4);
    for (const auto& v : singular_scan(ctx, degree).vectors) {
      EXPECT_TRUE(verify_candidate(ctx, v.combination, degree).singular) << name;
      for (std::size_t j = 0; j < ctx.rank(); ++j) EXPECT_TRUE(apply_E(ctx, j, v.image).is_zero()) << name;
    }
  }
}

TEST(SingularScan, DimensionInvariantUnderWordOrder) {
  const ModuleContext ctx(catalog("sl3"), GenericWeight{}, 5);
  const Multidegree degree = {2, 2};
  auto words = enumerate_words(degree, ctx.depth());
  const std::size_t dim = singular_scan(ctx, degree, words).dimension();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(words.begin(), words.end(), rng);
    const auto result = singular_scan(ctx, degree, words);
    EXPECT_EQ(result.dimension(), dim);
    for (const auto& v : result.vectors) EXPECT_TRUE(verify_candidate(ctx, v.combination, degree).singular);
  }
}

TEST(SingularScan, Preconditions) {
  const ModuleContext generic(catalog("sl3"), GenericWeight{}, 3);
  EXPECT_THROW(singular_scan(generic, {2, 1}), std::invalid_argument);
  EXPECT_THROW(singular_scan(generic, {1}), std::invalid_argument);
  const ModuleContext concrete(catalog("sl3"), ConcreteWeight{{Rational(1), Rational(1)}}, 4);
  EXPECT_THROW(singular_scan(concrete, {1, 1}), std::invalid_argument);
  EXPECT_THROW(singular_scan(generic, {1, 0}, {word("F2")}), std::invalid_argument);
}

TEST(EnumerateWords, Examples) {
  const auto w = enumerate_words({2, 1}, 4);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(compact_word(w[0]), "F1F1F2");
  EXPECT_EQ(compact_word(w[1]), "F1F2F1");
  EXPECT_EQ(compact_word(w[2]), "F2F1F1");
  const auto empty = enumerate_words({0, 0}, 4);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
  EXPECT_EQ(enumerate_words({1, 1}, 4).size(), 2u);
  EXPECT_EQ(enumerate_words({2, 2}, 4).size(), 6u);
  EXPECT_THROW(enumerate_words({3, 2}, 4), DepthExceeded);
}

TEST(VerifyCandidate, Examples) {
  const ModuleContext sl21(catalog("sl2_1"), GenericWeight{}, 3);
  EXPECT_TRUE(verify_candidate(sl21, {{word("F2 F2"), PhaseScalar::one(2)}}, {0, 2}).singular);

  const ModuleContext sl2(catalog("sl2"), GenericWeight{}, 3);
  const auto check = verify_candidate(sl2, {{word("F1 F1"), PhaseScalar::one(1)}}, {2});
  EXPECT_FALSE(check.singular);
  ASSERT_EQ(check.residuals.size(), 1u);
  const PhaseScalar expected =
      (PhaseScalar::one(1) + q(2, 1)) * (PhaseScalar::one(1) - q(2, 1) * z_power(0, 2, 1)) / (q(1, 1) - q(-1, 1));
  EXPECT_EQ(check.residuals[0], ModuleVector::basis({0}, 1).scaled(expected));

  EXPECT_TRUE(verify_candidate(sl2, {}, {2}).singular);
  EXPECT_THROW(verify_candidate(sl2, {{word("F1"), PhaseScalar::one(1)}}, {2}), std::invalid_argument);
}

TEST(Specialization, ScanCoefficientsStaySingularOrReportPole) {
  const RootDatum d = catalog("sl2_1");
  const ModuleContext generic(d, GenericWeight{}, 4);
  const auto result = singular_scan(generic, {1, 2});
  ASSERT_EQ(result.dimension(), 1u);
  // The denominator is (q^{-e1} - q^{e1})(q^{1-e2} - q^{e2-1}) with e_k = -alpha_k . lambda;
  // lambda = (1, 2) has alpha_1 . lambda = 0.
  const ConcreteWeight pole{{Rational(1), Rational(2)}};
  EXPECT_FALSE(specialized(result.vectors[0].combination, specialization_exponents(d, pole)));
  const ConcreteWeight regular{{Rational(1, 3), Rational(2)}};
  EXPECT_FALSE(specialized(result.vectors[0].combination, specialization_exponents(d, ConcreteWeight{{Rational(1), Rational(5)}})));
  const auto special = specialized(result.vectors[0].combination, specialization_exponents(d, regular));
  ASSERT_TRUE(special);
  const ModuleContext concrete(d, regular, 4);
  EXPECT_TRUE(verify_candidate(concrete, *special, {1, 2}).singular);
}

TEST(ScanJson, Schema) {
  const ModuleContext ctx(catalog("sl3"), GenericWeight{}, 4);
  const auto json = to_json(singular_scan(ctx, {2, 1}), true);
  EXPECT_EQ(json["multidegree"], nlohmann::json::array({2, 1}));
  EXPECT_EQ(json["dimension"], 1);
  EXPECT_EQ(json["basis"][0]["F1F2F1"], "-q - q^-1");
  EXPECT_EQ(json["residual_checks"], "pass");
}

TEST(Multidegree, Parsing) {
  EXPECT_EQ(parse_multidegree("0,2"), (Multidegree{0, 2}));
  EXPECT_EQ(parse_multidegree("3"), (Multidegree{3}));
  for (const char* bad : {"", "1,", ",1", "a", "-1", "1;2"}) EXPECT_THROW(parse_multidegree(bad), std::invalid_argument) << bad;
}

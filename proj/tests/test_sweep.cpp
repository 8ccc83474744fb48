#include "qsuper/serre.hpp"
#include "qsuper/verify.hpp"

#include <gtest/gtest.h>

using namespace qsuper;

class SweepEquivalence : public ::testing::Test {
 protected:
  void SetUp() override { set_worker_count(4); }
};

TEST_F(SweepEquivalence, FirstFailureMatchesSerialOrder) {
  auto check = [](std::size_t i) -> std::optional<Counterexample> {
    if (i % 7 == 3) return Counterexample{std::to_string(i), "", ""};
    return std::nullopt;
  };
  for (std::size_t n : {0u, 1u, 3u, 4u, 50u}) {
    EXPECT_EQ(sweep::first_failure_serial(n, check), sweep::first_failure_parallel(n, check)) << n;
  }
}

TEST_F(SweepEquivalence, ExceptionsRethrowInIndexOrder) {
  auto check = [](std::size_t i) -> std::optional<Counterexample> {
    if (i == 5) throw std::runtime_error("five");
    if (i == 9) return Counterexample{"9", "", ""};
    return std::nullopt;
  };
  EXPECT_THROW(sweep::first_failure_parallel(20, check), std::runtime_error);
}

TEST_F(SweepEquivalence, ReportsIdenticalForCorrectAndFaultyRuns) {
  const Faults variants[] = {Faults{}, Faults{.hat_sign = true}, Faults{.tensor_sign = true},
                             Faults{.ehat_prefactor = true}};
  for (const auto& faults : variants) {
    const RootDatum d = catalog("sl2_1");
    const ModuleContext ctx(d, GenericWeight{}, 3, faults);
    EXPECT_EQ(verify_relations(ctx, Execution::serial), verify_relations(ctx, Execution::parallel));
    EXPECT_EQ(verify_hopf_axioms(ctx, Execution::serial), verify_hopf_axioms(ctx, Execution::parallel));
    const TensorContext tensor(d, 3, faults);
    EXPECT_EQ(verify_coproduct(tensor, Execution::serial), verify_coproduct(tensor, Execution::parallel));
  }
}

TEST_F(SweepEquivalence, SpecializationAndScanAgree) {
  const RootDatum d = catalog("sl3");
  const ConcreteWeight w{{Rational(1, 2), Rational(-3)}};
  EXPECT_EQ(verify_specialization(d, 3, w, Execution::serial), verify_specialization(d, 3, w, Execution::parallel));
  const ModuleContext ctx(d, GenericWeight{}, 5);
  const auto a = singular_scan(ctx, {2, 2}, Execution::serial);
  const auto b = singular_scan(ctx, {2, 2}, Execution::parallel);
  ASSERT_EQ(a.dimension(), b.dimension());
  for (std::size_t k = 0; k < a.dimension(); ++k) EXPECT_EQ(a.vectors[k].combination, b.vectors[k].combination);
}

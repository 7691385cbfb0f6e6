#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "faulhaber/generators.hpp"
#include "faulhaber/oracle.hpp"

using namespace faulhaber;

namespace {

ReducedPowerPoly random_element(std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(0, 5);
  auto poly = [&] {
    std::vector<ExactRational> c(degree(rng) + 1);
    for (auto& v : c) v = ExactRational(coeff(rng));
    return PolyS1(std::move(c));
  };
  return {poly(), poly()};
}

}  // namespace

TEST_CASE("direct summation") {
  CHECK(direct_power_sum(3, 2) == ExactInteger(14));
  CHECK(direct_power_sum(4, 1) == ExactInteger(10));
  CHECK(direct_power_sum(1, 99) == ExactInteger(1));
  CHECK(direct_power_sum(10, 0) == ExactInteger(10));
  CHECK(direct_power_sum(2, 9) == ExactInteger(513));
  CHECK_THROWS_AS(direct_power_sum(0, 3), std::domain_error);
}

TEST_CASE("evaluation points carry the base sums") {
  for (unsigned long n = 1; n <= 50; ++n) {
    const EvaluationPoint pt(n);
    CAPTURE(n);
    CHECK(pt.s1 == direct_power_sum(n, 1));
    CHECK(pt.s2 == direct_power_sum(n, 2));
  }
  CHECK_THROWS_AS(EvaluationPoint(0), std::domain_error);
}

TEST_CASE("evaluation point lies on the reduction curve") {
  for (unsigned long n = 1; n <= 100; ++n) {
    const EvaluationPoint pt(n);
    const ExactInteger nine_s2_sq = ExactInteger(9) * pt.s2 * pt.s2;
    const ExactInteger rhs = pt.s1 * pt.s1 * (ExactInteger(1) + ExactInteger(8) * pt.s1);
    CAPTURE(n);
    CHECK(nine_s2_sq == rhs);
  }
}

TEST_CASE("evaluating generated polynomials") {
  PowerSumTable table;
  CHECK(evaluate(table.power_sum(3), EvaluationPoint(4)) == ExactRational(100));
  CHECK(evaluate(table.power_sum(9), EvaluationPoint(2)) == ExactRational(513));
  CHECK(evaluate(ReducedPowerPoly::zero(), EvaluationPoint(17)).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(20240910);
  for (int i = 0; i < 10; ++i) {
    const ReducedPowerPoly p = random_element(rng);
    const ReducedPowerPoly q = random_element(rng);
    for (unsigned long n = 1; n <= 50; ++n) {
      const EvaluationPoint pt(n);
      if (evaluate(p * q, pt) != evaluate(p, pt) * evaluate(q, pt) ||
          evaluate(p + q, pt) != evaluate(p, pt) + evaluate(q, pt)) {
        CAPTURE(n);
        CHECK(false);
        break;
      }
    }
  }
  CHECK(true);
}

TEST_CASE("generated power sums evaluate to integers") {
  PowerSumTable table;
  for (unsigned k = 1; k <= 30; ++k)
    for (unsigned long n = 1; n <= 30; n += 7) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(evaluate(table.power_sum(k), EvaluationPoint(n)).is_integer());
    }
}

TEST_CASE("verification reports") {
  PowerSumTable table;
  const VerificationReport r9 = verify_power_sum(9, 50, table);
  CHECK(r9.pass);
  CHECK(r9.failures.empty());
  CHECK(r9.k == 9);
  CHECK(r9.n_max == 50);

  const VerificationReport r1 = verify_power_sum(1, 10, table);
  CHECK(r1.pass);
}

TEST_CASE("oracle catches a single perturbed coefficient") {
  PowerSumTable table;
  const ReducedPowerPoly s10 = table.power_sum(10);

  std::vector<ExactRational> coeffs(s10.b.coefficients().begin(), s10.b.coefficients().end());
  coeffs[2] += ExactRational(1);
  const ReducedPowerPoly perturbed{s10.a, PolyS1(std::move(coeffs))};

  const VerificationReport report = verify_polynomial(perturbed, 10, 5);
  CHECK(!report.pass);
  REQUIRE(!report.failures.empty());
  CHECK(report.failures.front().n <= 5);
  CHECK(report.failures.front().n == 1);
  CHECK(report.failures.front().expected != report.failures.front().got);
}

TEST_CASE("oracle completeness over both strategies") {
  for (const GeneratorKind kind : {GeneratorKind::standard, GeneratorKind::alternative}) {
    PowerSumTable table(kind);
    for (unsigned k = 1; k <= 30; ++k) {
      CAPTURE(static_cast<int>(kind));
      CAPTURE(k);
      CHECK(verify_power_sum(k, 60, table).pass);
    }
  }
}

TEST_CASE("Beardon relation") {
  CHECK(beardon_check(1));
  CHECK(beardon_check(2));
  for (unsigned long n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(beardon_check(n));
  }
}

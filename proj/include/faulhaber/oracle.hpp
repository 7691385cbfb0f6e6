#pragma once

#include <string>
#include <vector>

#include "faulhaber/generators.hpp"
#include "faulhaber/ring.hpp"

namespace faulhaber {

/// Concrete values (n, S_1(n), S_2(n)) at a positive integer n.
struct EvaluationPoint {
  explicit EvaluationPoint(unsigned long n);

  unsigned long n;
  ExactInteger s1;  // n(n+1)/2
  ExactInteger s2;  // n(n+1)(2n+1)/6
};

/// sum_{i=1}^{n} i^k by literal big-integer summation; the ground truth every
/// generated polynomial is checked against.
ExactInteger direct_power_sum(unsigned long n, unsigned long k);

ExactRational evaluate(const ReducedPowerPoly& p, const EvaluationPoint& pt);

struct VerificationFailure {
  unsigned long n = 0;
  std::string expected;
  std::string got;

  bool operator==(const VerificationFailure&) const = default;
};

/// Outcome of comparing a polynomial against direct summation at every
/// n in 1..n_max. Exact comparison, no tolerance; failures are content, not
/// errors.
struct VerificationReport {
  unsigned k = 0;
  unsigned long n_max = 0;
  bool pass = false;
  std::vector<VerificationFailure> failures;
};

VerificationReport verify_polynomial(const ReducedPowerPoly& p, unsigned k, unsigned long n_max);
VerificationReport verify_power_sum(unsigned k, unsigned long n_max, PowerSumTable& table);

/// True iff 8 S_1^3 + S_1^2 - 9 S_2^2 vanishes at n, i.e. the point
/// (S_1(n), S_2(n)) lies on Beardon's curve T(x, y) = 8x^3 + x^2 - 9y^2.
bool beardon_check(unsigned long n);

}  // namespace faulhaber

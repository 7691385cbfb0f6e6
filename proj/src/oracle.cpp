#include "faulhaber/oracle.hpp"

#include <stdexcept>

namespace faulhaber {

EvaluationPoint::EvaluationPoint(unsigned long n_in) : n(n_in) {
  if (n == 0) throw std::domain_error("evaluation point requires n >= 1");
  const mpz_class nn(n);
  const mpz_class base = nn * (nn + 1);
  s1 = ExactInteger(mpz_class(base / 2));
  s2 = ExactInteger(mpz_class(base * (2 * nn + 1) / 6));
}

ExactInteger direct_power_sum(unsigned long n, unsigned long k) {
  if (n == 0) throw std::domain_error("direct summation requires n >= 1");
  mpz_class sum = 0;
  mpz_class term;
  for (unsigned long i = 1; i <= n; ++i) {
    mpz_ui_pow_ui(term.get_mpz_t(), i, k);
    sum += term;
  }
  return ExactInteger(std::move(sum));
}

ExactRational evaluate(const ReducedPowerPoly& p, const EvaluationPoint& pt) {
  return p.evaluate(ExactRational(pt.s1), ExactRational(pt.s2));
}

VerificationReport verify_polynomial(const ReducedPowerPoly& p, unsigned k, unsigned long n_max) {
  if (n_max == 0) throw std::domain_error("verification requires n_max >= 1");
  VerificationReport report;
  report.k = k;
  report.n_max = n_max;

  mpz_class expected = 0;
  mpz_class term;
  for (unsigned long n = 1; n <= n_max; ++n) {
    mpz_ui_pow_ui(term.get_mpz_t(), n, k);
    expected += term;
    const ExactRational got = evaluate(p, EvaluationPoint(n));
    if (got != ExactRational(ExactInteger(expected)))
      report.failures.push_back({n, expected.get_str(), got.to_string()});
  }
  report.pass = report.failures.empty();
  return report;
}

VerificationReport verify_power_sum(unsigned k, unsigned long n_max, PowerSumTable& table) {
  return verify_polynomial(table.power_sum(k), k, n_max);
}

bool beardon_check(unsigned long n) {
  const EvaluationPoint pt(n);
  const mpz_class& x = pt.s1.raw();
  const mpz_class& y = pt.s2.raw();
  return 8 * x * x * x + x * x - 9 * y * y == 0;
}

}  // namespace faulhaber

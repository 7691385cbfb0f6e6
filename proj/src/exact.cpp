#include "faulhaber/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace faulhaber {

namespace {

// Strict integer syntax: optional '-', then one or more decimal digits.
// GMP's own parser is laxer (whitespace, '+'), so validate up front.
bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

ExactInteger::ExactInteger(std::string_view text) {
  auto parsed = parse(text);
  if (!parsed) throw std::invalid_argument("invalid integer literal: '" + std::string(text) + "'");
  *this = *std::move(parsed);
}

std::optional<ExactInteger> ExactInteger::parse(std::string_view text) {
  if (!is_integer_text(text)) return std::nullopt;
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  return ExactInteger(std::move(v));
}

ExactInteger ExactInteger::pow(const ExactInteger& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return ExactInteger(std::move(r));
}

ExactInteger& ExactInteger::operator+=(const ExactInteger& o) {
  value_ += o.value_;
  return *this;
}

ExactInteger& ExactInteger::operator-=(const ExactInteger& o) {
  value_ -= o.value_;
  return *this;
}

ExactInteger& ExactInteger::operator*=(const ExactInteger& o) {
  value_ *= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& v) {
  return os << v.value_.get_str();
}

ExactInteger binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return ExactInteger(std::move(r));
}

ExactRational::ExactRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den) {
  if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num.raw(), den.raw());
  value_.canonicalize();
}

ExactRational::ExactRational(std::string_view text) {
  auto parsed = parse(text);
  if (!parsed) throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
  *this = *std::move(parsed);
}

std::optional<ExactRational> ExactRational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    // the denominator carries no sign in the textual format
    if (den.empty() || den.front() == '-') return std::nullopt;
  }
  auto n = ExactInteger::parse(num);
  if (!n) return std::nullopt;
  ExactInteger d(1);
  if (!den.empty()) {
    auto parsed_den = ExactInteger::parse(den);
    if (!parsed_den || parsed_den->is_zero()) return std::nullopt;
    d = *parsed_den;
  }
  return ExactRational(*n, d);
}

ExactRational ExactRational::operator-() const {
  ExactRational r;
  r.value_ = -value_;
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
  detail::count_rational_op();
  value_ += o.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
  detail::count_rational_op();
  value_ -= o.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
  detail::count_rational_op();
  value_ *= o.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  detail::count_rational_op();
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) {
  return os << v.value_.get_str();
}

std::uint64_t rational_op_count() { return detail::rational_ops.load(std::memory_order_relaxed); }

void reset_rational_op_count() { detail::rational_ops.store(0, std::memory_order_relaxed); }

}  // namespace faulhaber

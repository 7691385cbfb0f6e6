#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace faulhaber {

/// Arbitrary-precision signed integer. Thin value wrapper around GMP's
/// mpz_class; zero is canonical (no negative zero) and arithmetic never
/// overflows.
class ExactInteger {
 public:
  ExactInteger() = default;
  ExactInteger(long v) : value_(v) {}
  explicit ExactInteger(mpz_class v) : value_(std::move(v)) {}

  /// Parses "-?[0-9]+". Throws std::invalid_argument on any other input.
  explicit ExactInteger(std::string_view text);

  static std::optional<ExactInteger> parse(std::string_view text);
  static ExactInteger pow(const ExactInteger& base, unsigned long exponent);

  int sign() const { return mpz_sgn(value_.get_mpz_t()); }
  bool is_zero() const { return sign() == 0; }
  std::string to_string() const { return value_.get_str(); }

  const mpz_class& raw() const { return value_; }

  ExactInteger operator-() const { return ExactInteger(mpz_class(-value_)); }

  ExactInteger& operator+=(const ExactInteger& o);
  ExactInteger& operator-=(const ExactInteger& o);
  ExactInteger& operator*=(const ExactInteger& o);

  friend ExactInteger operator+(ExactInteger a, const ExactInteger& b) { return a += b; }
  friend ExactInteger operator-(ExactInteger a, const ExactInteger& b) { return a -= b; }
  friend ExactInteger operator*(ExactInteger a, const ExactInteger& b) { return a *= b; }

  friend bool operator==(const ExactInteger& a, const ExactInteger& b) {
    return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) == 0;
  }
  friend bool operator<(const ExactInteger& a, const ExactInteger& b) {
    return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInteger& v);

 private:
  mpz_class value_;
};

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k > n.
ExactInteger binomial(unsigned long n, unsigned long k);

/// Arbitrary-precision rational in canonical lowest terms: denominator > 0,
/// gcd(|num|, den) = 1, sign carried by the numerator. Equality is structural
/// equality of canonical forms. Constructing with a zero denominator throws
/// std::invalid_argument.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long v) : value_(v) {}
  ExactRational(long num, long den);
  ExactRational(const ExactInteger& v) : value_(v.raw()) {}
  ExactRational(const ExactInteger& num, const ExactInteger& den);

  /// Parses "-?[0-9]+(/[0-9]+)?" with a positive denominator.
  /// Throws std::invalid_argument on any other input.
  explicit ExactRational(std::string_view text);

  static std::optional<ExactRational> parse(std::string_view text);

  ExactInteger numerator() const { return ExactInteger(mpz_class(value_.get_num())); }
  ExactInteger denominator() const { return ExactInteger(mpz_class(value_.get_den())); }

  int sign() const { return mpq_sgn(value_.get_mpq_t()); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return mpz_cmp_ui(value_.get_den().get_mpz_t(), 1) == 0; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const { return value_.get_str(); }

  ExactRational operator-() const;

  ExactRational& operator+=(const ExactRational& o);
  ExactRational& operator-=(const ExactRational& o);
  ExactRational& operator*=(const ExactRational& o);
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t()) < 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& v);

 private:
  mpq_class value_;
};

/// Number of rational add/sub/mul/div operations performed so far, process
/// wide. Used by the benchmark harness to compare generator strategies.
std::uint64_t rational_op_count();
void reset_rational_op_count();

namespace detail {
inline std::atomic<std::uint64_t> rational_ops{0};
inline void count_rational_op() { rational_ops.fetch_add(1, std::memory_order_relaxed); }
}  // namespace detail

}  // namespace faulhaber

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "faulhaber/exact.hpp"

using faulhaber::binomial;
using faulhaber::ExactInteger;
using faulhaber::ExactRational;

namespace {

ExactRational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-999, 999);
  std::uniform_int_distribution<long> den(1, 999);
  return ExactRational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational addition") {
  CHECK(ExactRational(1, 6) + ExactRational(-1, 30) == ExactRational(2, 15));
  const ExactRational x(7, 12);
  CHECK(x + ExactRational(0) == x);
  CHECK(ExactRational(1, 2) + ExactRational(1, 2) == ExactRational(1));
}

TEST_CASE("rational multiplication") {
  CHECK(ExactRational(2, 3) * ExactRational(3, 4) == ExactRational(1, 2));
  const ExactRational x(-5, 9);
  CHECK(x * ExactRational(1) == x);
  CHECK(ExactRational(1, 9) * ExactRational(8) == ExactRational(8, 9));
}

TEST_CASE("canonical form at construction") {
  CHECK(ExactRational(4, 6).numerator() == ExactInteger(2));
  CHECK(ExactRational(4, 6).denominator() == ExactInteger(3));
  // sign moves to the numerator
  CHECK(ExactRational(2, -4) == ExactRational(-1, 2));
  CHECK(ExactRational(2, -4).denominator() == ExactInteger(2));
  CHECK(ExactRational(0, 7) == ExactRational(0));
  CHECK(ExactRational(0).to_string() == "0");
}

TEST_CASE("zero denominator is a constructor error") {
  CHECK_THROWS_AS(ExactRational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational(ExactInteger(3), ExactInteger(0)), std::invalid_argument);
}

TEST_CASE("textual format") {
  CHECK(ExactRational(-4, 225).to_string() == "-4/225");
  CHECK(ExactRational(8).to_string() == "8");
  CHECK(ExactRational(16, 2).to_string() == "8");

  CHECK(ExactRational("-4/225") == ExactRational(-4, 225));
  CHECK(ExactRational("42") == ExactRational(42));

  std::ostringstream os;
  os << ExactRational(-1, 3) << " " << ExactInteger(-7);
  CHECK(os.str() == "-1/3 -7");
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "-", "1/", "/2", "+5", "1/-2", "1.5", "a", "1/2/3", " 1", "1 ",
                          "3/0", "--4", "0x10"}) {
    CAPTURE(bad);
    CHECK(!ExactRational::parse(bad).has_value());
  }
  CHECK_THROWS_AS(ExactRational("3/0"), std::invalid_argument);
  CHECK(!ExactInteger::parse("+5").has_value());
  CHECK(!ExactInteger::parse("5/1").has_value());
}

TEST_CASE("parse round-trips to_string") {
  std::mt19937 rng(20240901);
  for (int i = 0; i < 500; ++i) {
    const ExactRational x = random_rational(rng);
    auto back = ExactRational::parse(x.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == x);
  }
}

TEST_CASE("field laws on random values") {
  std::mt19937 rng(20240902);
  for (int i = 0; i < 300; ++i) {
    const ExactRational a = random_rational(rng);
    const ExactRational b = random_rational(rng);
    const ExactRational c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == ExactInteger(10));
  for (unsigned long n : {0ul, 1ul, 7ul, 40ul}) CHECK(binomial(n, 0) == ExactInteger(1));
  CHECK(binomial(3, 5) == ExactInteger(0));

  // Pascal's rule against an independent route
  std::mt19937 rng(20240903);
  std::uniform_int_distribution<unsigned long> dist(1, 60);
  for (int i = 0; i < 200; ++i) {
    const unsigned long n = dist(rng);
    const unsigned long k = dist(rng);
    CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    if (k <= n) CHECK(binomial(n, k) == binomial(n, n - k));
  }
}

TEST_CASE("integers are arbitrary precision") {
  const ExactInteger big = ExactInteger::pow(10, 30);
  CHECK(big.to_string().size() == 31);
  CHECK(ExactInteger::pow(2, 10) == ExactInteger(1024));
  CHECK(big * big == ExactInteger::pow(10, 60));
  CHECK(ExactInteger("-123456789012345678901234567890").sign() == -1);
  CHECK((ExactInteger(5) - ExactInteger(5)).sign() == 0);
}

TEST_CASE("rational op counter advances") {
  const std::uint64_t before = faulhaber::rational_op_count();
  const ExactRational r = ExactRational(1, 3) + ExactRational(1, 6);
  CHECK(r == ExactRational(1, 2));
  CHECK(faulhaber::rational_op_count() > before);
}

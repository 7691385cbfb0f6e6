#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "faulhaber/exact.hpp"

namespace faulhaber {

/// Dense univariate polynomial in S1 over ExactRational. Canonical form: the
/// highest stored coefficient is nonzero; the zero polynomial stores nothing
/// and has no degree.
class PolyS1 {
 public:
  PolyS1() = default;
  explicit PolyS1(std::vector<ExactRational> coeffs);
  PolyS1(std::initializer_list<ExactRational> coeffs);

  static PolyS1 monomial(unsigned degree, ExactRational coeff = ExactRational(1));

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  std::span<const ExactRational> coefficients() const { return coeffs_; }

  /// Coefficient of S1^i; zero beyond the stored degree.
  const ExactRational& coeff(unsigned i) const;
  const ExactRational& leading_coeff() const;

  /// Multiply by S1^m.
  PolyS1 shifted_up(unsigned m) const;
  /// Exact division by S1^m; nullopt if the m lowest coefficients are not all
  /// zero. The zero polynomial divides to itself.
  std::optional<PolyS1> shifted_down(unsigned m) const;

  ExactRational evaluate(const ExactRational& x) const;

  PolyS1 operator-() const;
  friend PolyS1 operator+(const PolyS1& p, const PolyS1& q);
  friend PolyS1 operator-(const PolyS1& p, const PolyS1& q);
  friend PolyS1 operator*(const PolyS1& p, const PolyS1& q);
  friend PolyS1 operator*(const ExactRational& c, const PolyS1& p);

  bool operator==(const PolyS1&) const = default;

 private:
  void normalize();

  std::vector<ExactRational> coeffs_;
};

/// Image of S2^2 under the reduction 9 S2^2 = S1^2 (1 + 8 S1), i.e. the
/// polynomial (1/9) S1^2 + (8/9) S1^3.
const PolyS1& s2_squared_image();

/// Canonical element a(S1) + S2 * b(S1) of Q[S1,S2]/(9 S2^2 - S1^2 (1+8 S1)).
/// No power of S2 above the first can be represented, so canonicity holds by
/// construction; equality of elements is structural equality of (a, b).
struct ReducedPowerPoly {
  PolyS1 a;  // S2-free part
  PolyS1 b;  // coefficient of S2

  static ReducedPowerPoly zero() { return {}; }
  static ReducedPowerPoly one() { return {PolyS1{ExactRational(1)}, PolyS1{}}; }
  static ReducedPowerPoly s1() { return {PolyS1::monomial(1), PolyS1{}}; }
  static ReducedPowerPoly s2() { return {PolyS1{}, PolyS1{ExactRational(1)}}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  ExactRational evaluate(const ExactRational& s1, const ExactRational& s2) const {
    return a.evaluate(s1) + s2 * b.evaluate(s1);
  }

  bool operator==(const ReducedPowerPoly&) const = default;
};

ReducedPowerPoly operator+(const ReducedPowerPoly& p, const ReducedPowerPoly& q);
ReducedPowerPoly operator-(const ReducedPowerPoly& p, const ReducedPowerPoly& q);
ReducedPowerPoly operator*(const ExactRational& c, const ReducedPowerPoly& p);

/// Product reduced back to canonical form:
/// (a_p + S2 b_p)(a_q + S2 b_q) = (a_p a_q + R b_p b_q) + S2 (a_p b_q + a_q b_p)
/// with R the image of S2^2.
ReducedPowerPoly operator*(const ReducedPowerPoly& p, const ReducedPowerPoly& q);

/// Repeated multiplication; base^0 = 1.
ReducedPowerPoly pow(const ReducedPowerPoly& base, unsigned exponent);

}  // namespace faulhaber

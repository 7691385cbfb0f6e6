#include "faulhaber/ring.hpp"

#include <stdexcept>
#include <utility>

namespace faulhaber {

namespace {
const ExactRational kZero;
}

PolyS1::PolyS1(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyS1::PolyS1(std::initializer_list<ExactRational> coeffs) : coeffs_(coeffs) { normalize(); }

PolyS1 PolyS1::monomial(unsigned degree, ExactRational coeff) {
  std::vector<ExactRational> c(degree + 1);
  c[degree] = std::move(coeff);
  return PolyS1(std::move(c));
}

void PolyS1::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<unsigned> PolyS1::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

const ExactRational& PolyS1::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const ExactRational& PolyS1::leading_coeff() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

PolyS1 PolyS1::shifted_up(unsigned m) const {
  if (m == 0 || is_zero()) return *this;
  std::vector<ExactRational> c(coeffs_.size() + m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + m] = coeffs_[i];
  return PolyS1(std::move(c));
}

std::optional<PolyS1> PolyS1::shifted_down(unsigned m) const {
  if (m == 0 || is_zero()) return *this;
  if (coeffs_.size() < m) return std::nullopt;
  for (unsigned i = 0; i < m; ++i)
    if (!coeffs_[i].is_zero()) return std::nullopt;
  return PolyS1(std::vector<ExactRational>(coeffs_.begin() + m, coeffs_.end()));
}

ExactRational PolyS1::evaluate(const ExactRational& x) const {
  ExactRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyS1 PolyS1::operator-() const {
  std::vector<ExactRational> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(-v);
  return PolyS1(std::move(c));
}

PolyS1 operator+(const PolyS1& p, const PolyS1& q) {
  std::vector<ExactRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
  return PolyS1(std::move(c));
}

PolyS1 operator-(const PolyS1& p, const PolyS1& q) {
  std::vector<ExactRational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
  return PolyS1(std::move(c));
}

PolyS1 operator*(const PolyS1& p, const PolyS1& q) {
  if (p.is_zero() || q.is_zero()) return PolyS1{};
  std::vector<ExactRational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return PolyS1(std::move(c));
}

PolyS1 operator*(const ExactRational& c, const PolyS1& p) {
  if (c.is_zero()) return PolyS1{};
  std::vector<ExactRational> out;
  out.reserve(p.coeffs_.size());
  for (const auto& v : p.coeffs_) out.push_back(c * v);
  return PolyS1(std::move(out));
}

const PolyS1& s2_squared_image() {
  static const PolyS1 image{ExactRational(0), ExactRational(0), ExactRational(1, 9),
                            ExactRational(8, 9)};
  return image;
}

ReducedPowerPoly operator+(const ReducedPowerPoly& p, const ReducedPowerPoly& q) {
  return {p.a + q.a, p.b + q.b};
}

ReducedPowerPoly operator-(const ReducedPowerPoly& p, const ReducedPowerPoly& q) {
  return {p.a - q.a, p.b - q.b};
}

ReducedPowerPoly operator*(const ExactRational& c, const ReducedPowerPoly& p) {
  return {c * p.a, c * p.b};
}

ReducedPowerPoly operator*(const ReducedPowerPoly& p, const ReducedPowerPoly& q) {
  return {p.a * q.a + s2_squared_image() * (p.b * q.b), p.a * q.b + q.a * p.b};
}

ReducedPowerPoly pow(const ReducedPowerPoly& base, unsigned exponent) {
  ReducedPowerPoly acc = ReducedPowerPoly::one();
  for (unsigned i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

}  // namespace faulhaber

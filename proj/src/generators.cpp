#include "faulhaber/generators.hpp"

#include <stdexcept>
#include <utility>

#include "faulhaber/bernoulli.hpp"

namespace faulhaber {

namespace {

void require_positive(unsigned index) {
  if (index == 0) throw std::domain_error("index must be >= 1");
}

}  // namespace

std::vector<PowerSumTerm> square_expansion(unsigned k) {
  require_positive(k);
  std::vector<PowerSumTerm> terms;
  const ExactRational scale(2, static_cast<long>(k) + 1);
  for (unsigned j = 0; 2 * j <= k; ++j) {
    ExactRational weight = scale * bernoulli(2 * j) * ExactRational(binomial(k + 1, 2 * j));
    if (!weight.is_zero()) terms.push_back({2 * k + 1 - 2 * j, std::move(weight)});
  }
  return terms;
}

std::vector<PowerSumTerm> product_expansion(unsigned k, unsigned m) {
  require_positive(k);
  require_positive(m);
  // collect the two sums by index; both contribute to indices of the same
  // parity, stepping down from k+m+1 by 2
  std::map<unsigned, ExactRational> collected;
  for (unsigned j = 0; 2 * j <= k; ++j)
    collected[k + m + 1 - 2 * j] +=
        ExactRational(binomial(k + 1, 2 * j), ExactInteger(static_cast<long>(k) + 1)) *
        bernoulli(2 * j);
  for (unsigned j = 0; 2 * j <= m; ++j)
    collected[k + m + 1 - 2 * j] +=
        ExactRational(binomial(m + 1, 2 * j), ExactInteger(static_cast<long>(m) + 1)) *
        bernoulli(2 * j);

  std::vector<PowerSumTerm> terms;
  for (auto it = collected.rbegin(); it != collected.rend(); ++it)
    if (!it->second.is_zero()) terms.push_back({it->first, it->second});
  return terms;
}

PowerSumTable::PowerSumTable(GeneratorKind kind, std::optional<unsigned> cache_max_k)
    : kind_(kind), cache_max_k_(cache_max_k) {
  entries_.emplace(1, ReducedPowerPoly::s1());
  entries_.emplace(2, ReducedPowerPoly::s2());
}

ReducedPowerPoly PowerSumTable::power_sum(unsigned k) {
  if (k == 0) throw std::domain_error("S_0 = n is not a polynomial in S_1, S_2");
  if (auto hit = lookup(k)) return *std::move(hit);

  const unsigned r = (k - 1) / 2;  // k = 2r+1 when odd, k = 2r+2 when even
  ReducedPowerPoly result;
  if (k % 2 == 1)
    result = kind_ == GeneratorKind::standard ? odd_from_square(r, *this)
                                              : odd_from_s1_power(r, *this);
  else
    result = kind_ == GeneratorKind::standard ? even_from_product(r, *this)
                                              : even_from_s2_power(r, *this);
  store(k, result);
  return result;
}

void PowerSumTable::store(unsigned k, const ReducedPowerPoly& value) {
  if (k > 2 && cache_max_k_ && k > *cache_max_k_) return;
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.emplace(k, value);
}

std::optional<ReducedPowerPoly> PowerSumTable::lookup(unsigned k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find(k);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t PowerSumTable::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

ReducedPowerPoly odd_from_square(unsigned r, PowerSumTable& table) {
  require_positive(r);
  const ReducedPowerPoly square = table.power_sum(r) * table.power_sum(r);
  ReducedPowerPoly acc = ExactRational(static_cast<long>(r) + 1, 2) * square;
  for (unsigned j = 1; 2 * j <= r; ++j) {
    const ExactRational weight = bernoulli(2 * j) * ExactRational(binomial(r + 1, 2 * j));
    acc = acc - weight * table.power_sum(2 * r + 1 - 2 * j);
  }
  table.store(2 * r + 1, acc);
  return acc;
}

ReducedPowerPoly even_from_product(unsigned r, PowerSumTable& table) {
  require_positive(r);
  ReducedPowerPoly acc = table.power_sum(r) * table.power_sum(r + 1);
  if ((r + 1) % 2 == 0) acc = acc - bernoulli(r + 1) * table.power_sum(r + 1);
  for (unsigned j = 1; 2 * j <= r; ++j) {
    const ExactRational h =
        ExactRational(binomial(r + 1, 2 * j), ExactInteger(static_cast<long>(r) + 1)) +
        ExactRational(binomial(r + 2, 2 * j), ExactInteger(static_cast<long>(r) + 2));
    acc = acc - h * bernoulli(2 * j) * table.power_sum(2 * r + 2 - 2 * j);
  }
  const ExactRational front(static_cast<long>(r + 1) * static_cast<long>(r + 2),
                            2 * static_cast<long>(r) + 3);
  ReducedPowerPoly result = front * acc;
  table.store(2 * r + 2, result);
  return result;
}

ReducedPowerPoly odd_from_s1_power(unsigned r, PowerSumTable& table) {
  require_positive(r);
  const ExactRational lead(ExactInteger::pow(2, r), ExactInteger(static_cast<long>(r) + 1));
  ReducedPowerPoly acc = lead * pow(ReducedPowerPoly::s1(), r + 1);
  const ExactRational inv(1, static_cast<long>(r) + 1);
  for (unsigned j = 1; 2 * j <= r; ++j)
    acc = acc - inv * ExactRational(binomial(r + 1, 2 * j + 1)) *
                    table.power_sum(2 * r + 1 - 2 * j);
  table.store(2 * r + 1, acc);
  return acc;
}

ReducedPowerPoly even_from_s2_power(unsigned r, PowerSumTable& table) {
  require_positive(r);
  ReducedPowerPoly acc = ExactRational(3) * (ReducedPowerPoly::s2() *
                                             pow(ExactRational(2) * ReducedPowerPoly::s1(), r));
  for (unsigned j = 1; 2 * j <= r + 1; ++j) {
    const ExactRational weight =
        ExactRational(2 * static_cast<long>(r) + 3 - 2 * static_cast<long>(j),
                      2 * static_cast<long>(j) + 1) *
        ExactRational(binomial(r + 1, 2 * j));
    acc = acc - weight * table.power_sum(2 * r + 2 - 2 * j);
  }
  ReducedPowerPoly result = ExactRational(1, 2 * static_cast<long>(r) + 3) * acc;
  table.store(2 * r + 2, result);
  return result;
}

bool s1_power_identity_holds(unsigned k, PowerSumTable& table) {
  require_positive(k);
  const ReducedPowerPoly lhs = pow(ReducedPowerPoly::s1(), k);
  ReducedPowerPoly rhs;
  for (unsigned j = 0; 2 * j <= k - 1; ++j)
    rhs = rhs + ExactRational(binomial(k, 2 * j + 1)) * table.power_sum(2 * k - 1 - 2 * j);
  rhs = ExactRational(ExactInteger(1), ExactInteger::pow(2, k - 1)) * rhs;
  return lhs == rhs;
}

bool s2_s1_power_identity_holds(unsigned k, PowerSumTable& table) {
  require_positive(k);
  const ReducedPowerPoly lhs = ReducedPowerPoly::s2() * pow(ReducedPowerPoly::s1(), k);
  ReducedPowerPoly rhs;
  for (unsigned j = 0; 2 * j <= k + 1; ++j) {
    const ExactRational weight =
        ExactRational(2 * static_cast<long>(k) + 3 - 2 * static_cast<long>(j),
                      2 * static_cast<long>(j) + 1) *
        ExactRational(binomial(k + 1, 2 * j));
    rhs = rhs + weight * table.power_sum(2 * k + 2 - 2 * j);
  }
  rhs = ExactRational(ExactInteger(1), ExactInteger(3) * ExactInteger::pow(2, k)) * rhs;
  return lhs == rhs;
}

}  // namespace faulhaber

#include "faulhaber/faulhaber_form.hpp"

#include <string>

namespace faulhaber {

FaulhaberForm::FaulhaberForm(unsigned k, const ReducedPowerPoly& p) : k_(k) {
  if (k < 2) throw StructureError("S_" + std::to_string(k) + " has no Faulhaber form");
  if (k % 2 == 0) {
    parity_ = Parity::even;
    if (!p.a.is_zero())
      throw StructureError("even-index S_" + std::to_string(k) + " has an S2-free component");
    f_ = p.b;
  } else {
    parity_ = Parity::odd;
    if (!p.b.is_zero())
      throw StructureError("odd-index S_" + std::to_string(k) + " has an S2 component");
    auto f = p.a.shifted_down(2);
    if (!f)
      throw StructureError("odd-index S_" + std::to_string(k) + " is not divisible by S1^2");
    f_ = *std::move(f);
  }

  // deg F = k'-1 for both k = 2k' and k = 2k'+1
  const unsigned expected_degree = k / 2 - 1;
  if (f_.degree() != std::optional<unsigned>(expected_degree))
    throw StructureError("Faulhaber polynomial of S_" + std::to_string(k) +
                         " has wrong degree");
  for (const auto& c : f_.coefficients())
    if (c.is_zero())
      throw StructureError("Faulhaber polynomial of S_" + std::to_string(k) +
                           " has a zero coefficient");
}

ReducedPowerPoly FaulhaberForm::reconstruct() const {
  if (parity_ == Parity::even) return {PolyS1{}, f_};
  return {f_.shifted_up(2), PolyS1{}};
}

FaulhaberForm to_faulhaber_form(unsigned k, const ReducedPowerPoly& p) {
  return FaulhaberForm(k, p);
}

}  // namespace faulhaber

#pragma once

#include <stdexcept>

#include "faulhaber/ring.hpp"

namespace faulhaber {

enum class Parity { even, odd };

/// A generated power sum failed to factor as the theory guarantees. Always a
/// generator bug, never user error.
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parity-tagged factored form of a power sum:
///   S_{2k} = S_2 F(S_1)        with deg F = k-1,
///   S_{2k+1} = S_1^2 F(S_1)    with deg F = k-1 (k >= 1),
/// where every coefficient of F is nonzero. Construction checks the shape and
/// throws StructureError on any violation.
class FaulhaberForm {
 public:
  FaulhaberForm(unsigned k, const ReducedPowerPoly& p);

  unsigned k() const { return k_; }
  Parity parity() const { return parity_; }
  const PolyS1& polynomial() const { return f_; }

  /// The reduced ring element S_2 F or S_1^2 F this form factors.
  ReducedPowerPoly reconstruct() const;

 private:
  unsigned k_;
  Parity parity_;
  PolyS1 f_;
};

FaulhaberForm to_faulhaber_form(unsigned k, const ReducedPowerPoly& p);

}  // namespace faulhaber

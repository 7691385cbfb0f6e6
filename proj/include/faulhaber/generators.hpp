#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "faulhaber/ring.hpp"

namespace faulhaber {

/// The two independent recursion families that produce S_k.
///   standard:    S_{2r+1} from the square expansion of S_r,
///                S_{2r+2} from the product expansion of S_r S_{r+1}.
///   alternative: S_{2r+1} from powers of S_1,
///                S_{2r+2} from S_2 (2 S_1)^r.
enum class GeneratorKind { standard, alternative };

/// One term weight * S_index of a linear combination of power sums.
struct PowerSumTerm {
  unsigned index;
  ExactRational weight;

  bool operator==(const PowerSumTerm&) const = default;
};

/// S_k^2 = sum 2/(k+1) B_{2j} C(k+1, 2j) S_{2k+1-2j} over j = 0..floor(k/2).
/// Every returned index is odd; zero-weight terms are omitted.
std::vector<PowerSumTerm> square_expansion(unsigned k);

/// S_k S_m = sum_{j=0}^{floor(k/2)} 1/(k+1) B_{2j} C(k+1, 2j) S_{k+m+1-2j}
///         + sum_{j=0}^{floor(m/2)} 1/(m+1) B_{2j} C(m+1, 2j) S_{k+m+1-2j},
/// with equal indices collected. Terms are returned in descending index
/// order; zero-weight terms are omitted. Symmetric in (k, m).
std::vector<PowerSumTerm> product_expansion(unsigned k, unsigned m);

/// Memoized map k -> S_k as a reduced ring element, built by one generator
/// family. Entries 1 and 2 are the ground values S_1 and S_2. Each table
/// caches only results produced by its own generator kind, so two tables
/// never share intermediates. Safe for concurrent use: lookups see finished
/// values only and inserts are idempotent.
class PowerSumTable {
 public:
  explicit PowerSumTable(GeneratorKind kind = GeneratorKind::standard,
                         std::optional<unsigned> cache_max_k = std::nullopt);

  GeneratorKind kind() const { return kind_; }
  std::optional<unsigned> cache_max_k() const { return cache_max_k_; }

  /// S_k in canonical reduced form, generating and memoizing every missing
  /// lower entry on the way. Throws std::domain_error for k = 0 (S_0 = n is
  /// not a polynomial in S_1, S_2).
  ReducedPowerPoly power_sum(unsigned k);

  /// Idempotent: an existing entry is never overwritten. Entries above the
  /// cache limit are dropped (ground entries 1 and 2 are always kept).
  void store(unsigned k, const ReducedPowerPoly& value);
  std::optional<ReducedPowerPoly> lookup(unsigned k) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<unsigned, ReducedPowerPoly> entries_;
  GeneratorKind kind_;
  std::optional<unsigned> cache_max_k_;
};

/// S_{2r+1} = (r+1)/2 S_r^2 - sum_{j=1}^{floor(r/2)} B_{2j} C(r+1, 2j) S_{2r+1-2j},
/// the square S_r^2 taken in the reduced ring. Requires r >= 1.
ReducedPowerPoly odd_from_square(unsigned r, PowerSumTable& table);

/// S_{2r+2} = (r+1)(r+2)/(2r+3) (S_r S_{r+1} - B_{r+1} S_{r+1}
///            - sum_{j=1}^{floor(r/2)} h_{r,j} B_{2j} S_{2r+2-2j}),
/// h_{r,j} = C(r+1, 2j)/(r+1) + C(r+2, 2j)/(r+2); the B_{r+1} S_{r+1} term
/// survives only for even r+1. Requires r >= 1.
ReducedPowerPoly even_from_product(unsigned r, PowerSumTable& table);

/// S_{2r+1} = 2^r/(r+1) S_1^{r+1}
///            - 1/(r+1) sum_{j=1}^{floor(r/2)} C(r+1, 2j+1) S_{2r+1-2j}.
/// Requires r >= 1.
ReducedPowerPoly odd_from_s1_power(unsigned r, PowerSumTable& table);

/// S_{2r+2} = 1/(2r+3) (3 S_2 (2 S_1)^r
///            - sum_{j=1}^{floor((r+1)/2)} (2r+3-2j)/(2j+1) C(r+1, 2j) S_{2r+2-2j}).
/// Requires r >= 1.
ReducedPowerPoly even_from_s2_power(unsigned r, PowerSumTable& table);

/// True iff S_1^k = 1/2^{k-1} sum_{j=0}^{floor((k-1)/2)} C(k, 2j+1) S_{2k-1-2j}
/// holds in the reduced ring, both sides expanded independently. k >= 1.
bool s1_power_identity_holds(unsigned k, PowerSumTable& table);

/// True iff S_2 S_1^k = 1/(3 2^k) sum_{j=0}^{floor((k+1)/2)}
/// (2k+3-2j)/(2j+1) C(k+1, 2j) S_{2k+2-2j} holds in the reduced ring. k >= 1.
bool s2_s1_power_identity_holds(unsigned k, PowerSumTable& table);

}  // namespace faulhaber

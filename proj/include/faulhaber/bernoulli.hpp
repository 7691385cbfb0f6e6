#pragma once

#include <cstdint>

#include "faulhaber/exact.hpp"

namespace faulhaber {

/// Bernoulli number B_j under the convention B_1 = -1/2, i.e. the values
/// defined by B_0 = 1 and sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1.
/// Exact, memoized and thread safe; B_j = 0 for odd j >= 3.
ExactRational bernoulli(unsigned j);

/// How many times bernoulli(1) has been queried. The generators only ever
/// consume even-index values, so this stays at zero during generation.
std::uint64_t bernoulli_b1_queries();

}  // namespace faulhaber

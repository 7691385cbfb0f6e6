#include "faulhaber/bernoulli.hpp"

#include <atomic>
#include <mutex>
#include <vector>

namespace faulhaber {

namespace {
std::atomic<std::uint64_t> b1_queries{0};
}

ExactRational bernoulli(unsigned j) {
  if (j == 1) b1_queries.fetch_add(1, std::memory_order_relaxed);

  static std::mutex mutex;
  static std::vector<ExactRational> cache{ExactRational(1)};

  std::lock_guard<std::mutex> lock(mutex);
  // extend the cached prefix with the defining recurrence
  // B_m = -1/(m+1) * sum_{i=0}^{m-1} C(m+1, i) B_i
  while (cache.size() <= j) {
    const unsigned long m = cache.size();
    ExactRational sum;
    for (unsigned long i = 0; i < m; ++i) sum += ExactRational(binomial(m + 1, i)) * cache[i];
    cache.push_back(-(sum / ExactRational(static_cast<long>(m) + 1)));
  }
  return cache[j];
}

std::uint64_t bernoulli_b1_queries() { return b1_queries.load(std::memory_order_relaxed); }

}  // namespace faulhaber

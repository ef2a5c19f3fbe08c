#include "oligo/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oligo {

void MarketShares::validate() const {
  double sum = 0.0;
  for (double share : shares) {
    if (!(share >= 0.0)) {
      throw std::domain_error("shares must be >= 0");
    }
    sum += share;
  }
  if (sum > 1.0 + 1e-9) {
    throw std::domain_error("shares must sum to at most 1");
  }
}

double concentration_ratio(const MarketShares& shares, int k) {
  if (k < 1) {
    throw std::domain_error("k must be >= 1");
  }
  shares.validate();
  std::vector<double> sorted = shares.shares;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t take = std::min<std::size_t>(k, sorted.size());
  return std::accumulate(sorted.begin(), sorted.begin() + take, 0.0);
}

double herfindahl(const MarketShares& shares) {
  shares.validate();
  double sum = 0.0;
  for (double share : shares.shares) sum += share * share;
  return sum;
}

}  // namespace oligo

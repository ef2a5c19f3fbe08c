#pragma once

#include <vector>

namespace oligo {

// Per-firm sales shares as fractions of the whole market. Shares may sum to
// less than one; the remainder is the implied fringe of small firms.
struct MarketShares {
  std::vector<double> shares;

  // Throws std::domain_error when a share is negative or the sum exceeds 1
  // (tolerance 1e-9).
  void validate() const;
};

// Combined share of the k largest firms (all firms when k exceeds the
// count). Throws std::domain_error for k < 1 or invalid shares.
double concentration_ratio(const MarketShares& shares, int k);

// Sum of squared shares.
double herfindahl(const MarketShares& shares);

}  // namespace oligo

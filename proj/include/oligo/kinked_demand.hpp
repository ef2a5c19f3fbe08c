#pragma once

namespace oligo {

// One linear demand segment Q(p) = intercept - slope * p.
struct DemandSegment {
  double intercept = 0.0;
  double slope = 0.0;

  double quantity_at(double price) const { return intercept - slope * price; }
  double price_at(double quantity) const {
    return (intercept - quantity) / slope;
  }
  // d(q * p(q))/dq for the segment's inverse demand.
  double marginal_revenue_at(double quantity) const {
    return (intercept - 2.0 * quantity) / slope;
  }
};

// Demand made of two linear segments meeting at the kink: the upper segment
// (prices at or above the kink) is more price-responsive than the lower one,
// so marginal revenue jumps down across the kink.
struct KinkedDemand {
  double kink_price = 0.0;
  double kink_quantity = 0.0;
  DemandSegment upper;  // valid for price >= kink_price
  DemandSegment lower;  // valid for price <= kink_price

  // Segments from their slopes, intercepts chosen to pass through the kink.
  static KinkedDemand from_slopes(double kink_price, double kink_quantity,
                                  double upper_slope, double lower_slope);

  // Throws std::domain_error naming the violated condition: positive kink
  // coordinates, both segments through the kink (within 1e-9), and
  // upper.slope > lower.slope > 0.
  void validate() const;

  double quantity_at(double price) const;
};

// Segment slopes chosen so the point elasticity at the kink matches the
// given values (slope = |e| * q_k / p_k); elasticity signs are ignored.
// Requires |elasticity_upper| > 1 > |elasticity_lower| > 0.
KinkedDemand build_kinked(double kink_price, double kink_quantity,
                          double elasticity_upper, double elasticity_lower);

// Marginal revenue evaluated at the kink quantity on each segment. The
// upper value exceeds the lower one, leaving the gap [lower, upper] where
// marginal cost can move without shifting the profit-maximizing price.
struct MarginalRevenueGap {
  double mr_upper = 0.0;
  double mr_lower = 0.0;
};

MarginalRevenueGap mr_gap(const KinkedDemand& kinked);

enum class PriceBranch { at_kink, upper_segment, lower_segment };

struct OptimalPrice {
  double price = 0.0;
  double quantity = 0.0;
  bool rigid = false;  // marginal cost fell inside the MR gap
  PriceBranch branch = PriceBranch::at_kink;
  bool zero_output = false;  // cost too high for any positive quantity
};

// Profit-maximizing price for a firm facing this demand at constant
// marginal cost. Costs inside the MR gap (closed at both endpoints) pin the
// price to the kink; costs above it move to the interior solution on the
// upper segment, costs below it to the lower segment. When even the upper
// segment cannot cover cost, the choke price with zero output is returned
// and flagged. Throws std::domain_error for negative marginal cost.
OptimalPrice optimal_price(const KinkedDemand& kinked, double marginal_cost);

struct ArcElasticity {
  double elasticity = 0.0;
  double price_change = 0.0;     // fractional, e.g. -1/6
  double quantity_change = 0.0;  // fractional
};

enum class ElasticityConvention { simple, midpoint };

// Elasticity of the move (p0, q0) -> (p1, q1). The simple convention takes
// percentage changes against the initial point; midpoint uses the average
// of the endpoints as the base. Throws std::domain_error when any value is
// not positive or the prices are equal.
ArcElasticity arc_elasticity(
    double p0, double q0, double p1, double q1,
    ElasticityConvention convention = ElasticityConvention::simple);

}  // namespace oligo

#include "oligo/kinked_demand.hpp"

#include <cmath>
#include <stdexcept>

namespace oligo {

KinkedDemand KinkedDemand::from_slopes(double kink_price, double kink_quantity,
                                       double upper_slope,
                                       double lower_slope) {
  KinkedDemand k;
  k.kink_price = kink_price;
  k.kink_quantity = kink_quantity;
  k.upper = {kink_quantity + upper_slope * kink_price, upper_slope};
  k.lower = {kink_quantity + lower_slope * kink_price, lower_slope};
  k.validate();
  return k;
}

void KinkedDemand::validate() const {
  if (!(kink_price > 0.0) || !(kink_quantity > 0.0)) {
    throw std::domain_error("kink price and quantity must be > 0");
  }
  if (!(lower.slope > 0.0) || !(upper.slope > lower.slope)) {
    throw std::domain_error(
        "upper segment must be more price-responsive: slopes need "
        "upper > lower > 0");
  }
  const double scale = std::max(1.0, kink_quantity);
  if (std::abs(upper.quantity_at(kink_price) - kink_quantity) > 1e-9 * scale ||
      std::abs(lower.quantity_at(kink_price) - kink_quantity) > 1e-9 * scale) {
    throw std::domain_error("segments must pass through the kink point");
  }
}

double KinkedDemand::quantity_at(double price) const {
  const DemandSegment& seg = price >= kink_price ? upper : lower;
  return std::max(0.0, seg.quantity_at(price));
}

KinkedDemand build_kinked(double kink_price, double kink_quantity,
                          double elasticity_upper, double elasticity_lower) {
  if (!(kink_price > 0.0) || !(kink_quantity > 0.0)) {
    throw std::domain_error("kink price and quantity must be > 0");
  }
  const double eu = std::abs(elasticity_upper);
  const double el = std::abs(elasticity_lower);
  if (!(eu > 1.0)) {
    throw std::domain_error(
        "upper segment must be elastic (|elasticity| > 1)");
  }
  if (!(el > 0.0 && el < 1.0)) {
    throw std::domain_error(
        "lower segment must be inelastic (0 < |elasticity| < 1)");
  }
  const double ratio = kink_quantity / kink_price;
  return KinkedDemand::from_slopes(kink_price, kink_quantity, eu * ratio,
                                   el * ratio);
}

MarginalRevenueGap mr_gap(const KinkedDemand& kinked) {
  kinked.validate();
  return {kinked.upper.marginal_revenue_at(kinked.kink_quantity),
          kinked.lower.marginal_revenue_at(kinked.kink_quantity)};
}

OptimalPrice optimal_price(const KinkedDemand& kinked, double marginal_cost) {
  kinked.validate();
  if (!(marginal_cost >= 0.0)) {
    throw std::domain_error("marginal cost must be >= 0");
  }
  const MarginalRevenueGap gap = mr_gap(kinked);
  OptimalPrice result;
  if (marginal_cost >= gap.mr_lower && marginal_cost <= gap.mr_upper) {
    result.price = kinked.kink_price;
    result.quantity = kinked.kink_quantity;
    result.rigid = true;
    result.branch = PriceBranch::at_kink;
    return result;
  }

  const bool above = marginal_cost > gap.mr_upper;
  const DemandSegment& seg = above ? kinked.upper : kinked.lower;
  result.branch = above ? PriceBranch::upper_segment : PriceBranch::lower_segment;
  // Interior solution of MR(q) = mc on the segment.
  const double quantity = (seg.intercept - seg.slope * marginal_cost) / 2.0;
  if (quantity <= 0.0) {
    result.price = seg.price_at(0.0);
    result.quantity = 0.0;
    result.zero_output = true;
    return result;
  }
  result.price = seg.price_at(quantity);
  result.quantity = quantity;
  return result;
}

ArcElasticity arc_elasticity(double p0, double q0, double p1, double q1,
                             ElasticityConvention convention) {
  if (!(p0 > 0.0) || !(q0 > 0.0) || !(p1 > 0.0) || !(q1 > 0.0)) {
    throw std::domain_error("prices and quantities must be > 0");
  }
  if (p0 == p1) {
    throw std::domain_error("price change must be nonzero");
  }
  const double price_base =
      convention == ElasticityConvention::simple ? p0 : 0.5 * (p0 + p1);
  const double quantity_base =
      convention == ElasticityConvention::simple ? q0 : 0.5 * (q0 + q1);
  ArcElasticity result;
  result.price_change = (p1 - p0) / price_base;
  result.quantity_change = (q1 - q0) / quantity_base;
  result.elasticity = result.quantity_change / result.price_change;
  return result;
}

}  // namespace oligo

#include "chemoweb/kinetics.hpp"

#include <cmath>

namespace chemoweb {

double GrowthKinetics::mu2_inverse(double alpha) const {
  if (!(alpha > 0.0) || alpha >= mu2_sup())
    throw std::domain_error("mu2_inverse: alpha outside (0, sup mu2)");
  // Bracket: mu2 is increasing, mu2(0) = 0.
  double hi = 1.0;
  while (mu2(hi) < alpha) {
    hi *= 2.0;
    if (hi > 1e30) throw std::domain_error("mu2_inverse: no preimage found");
  }
  double lo = 0.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-16 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (mu2(mid) < alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {
void check_nonneg(double s0, double s1, double s2) {
  if (!(s0 >= 0.0) || !(s1 >= 0.0) || !(s2 >= 0.0) ||
      !std::isfinite(s0) || !std::isfinite(s1) || !std::isfinite(s2))
    throw std::domain_error("growth evaluation requires finite non-negative substrates");
}
}  // namespace

GrowthRates eval_growth(const GrowthKinetics& k, double s0, double s1, double s2) {
  check_nonneg(s0, s1, s2);
  return GrowthRates{k.mu0(s0, s2), k.mu1(s1, s2), k.mu2(s2)};
}

GrowthPartials eval_growth_partials(const GrowthKinetics& k, double s0, double s1, double s2) {
  check_nonneg(s0, s1, s2);
  return k.partials(s0, s1, s2);
}

}  // namespace chemoweb

#include "chemoweb/model.hpp"

#include <algorithm>
#include <cmath>

namespace chemoweb {

namespace {
constexpr double kClipTol = 1e-12;
constexpr double kReportTol = 1e-8;
}  // namespace

double OmegaRegion::violation(const ReducedState& x) const {
  double m = std::min({s0(x), s1(x), s2(x), x.x0, x.x1, x.x2});
  return std::min(m, 0.0);
}

bool OmegaRegion::contains(const ReducedState& x, double tol) const {
  return violation(x) >= -tol;
}

Vec6 rhs_full(const ModelParams& p, const GrowthKinetics& k, const FullState& y) {
  return rhs_full(p, k, y.vec());
}

Vec6 rhs_full(const ModelParams& p, const GrowthKinetics& k, const Vec6& y) {
  const double x0 = y[0], x1 = y[1], x2 = y[2];
  const double s0 = std::max(y[3], 0.0), s1 = std::max(y[4], 0.0), s2 = std::max(y[5], 0.0);
  const double m0 = k.mu0(s0, s2), m1 = k.mu1(s1, s2), m2 = k.mu2(s2);
  Vec6 f;
  f[0] = -p.alpha * x0 + m0 * x0 - p.k_A * x0;
  f[1] = -p.alpha * x1 + m1 * x1 - p.k_B * x1;
  f[2] = -p.alpha * x2 + m2 * x2 - p.k_C * x2;
  f[3] = p.alpha * (p.u_f - y[3]) - m0 * x0;
  f[4] = p.alpha * (p.u_g - y[4]) + p.omega0 * m0 * x0 - m1 * x1;
  f[5] = p.alpha * (p.u_h - y[5]) - p.omega2 * m0 * x0 + p.omega1 * m1 * x1 - m2 * x2;
  return f;
}

Vec3 rhs_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x,
                 RegionStatus* status) {
  return rhs_reduced(p, k, x.vec(), status);
}

Vec3 rhs_reduced(const ModelParams& p, const GrowthKinetics& k, const Vec3& x,
                 RegionStatus* status) {
  const OmegaRegion omega(p);
  const ReducedState xs = ReducedState::from_vec(x);
  double s0 = omega.s0(xs), s1 = omega.s1(xs), s2 = omega.s2(xs);
  if (status) {
    const double worst = std::min({s0, s1, s2});
    if (worst < -kReportTol) {
      status->violated = true;
      status->worst = std::min(status->worst, worst);
    }
  }
  s0 = std::max(s0, 0.0);
  s1 = std::max(s1, 0.0);
  s2 = std::max(s2, 0.0);
  const double m0 = k.mu0(s0, s2), m1 = k.mu1(s1, s2), m2 = k.mu2(s2);
  return Vec3(x[0] * (m0 - p.alpha), x[1] * (m1 - p.alpha), x[2] * (m2 - p.alpha));
}

FullState lift(const ModelParams& p, const ReducedState& x) {
  const OmegaRegion omega(p);
  const double s0 = omega.s0(x), s1 = omega.s1(x), s2 = omega.s2(x);
  if (s0 < -kClipTol || s1 < -kClipTol || s2 < -kClipTol)
    throw OutsideOmega("lift: substrate expression negative");
  FullState y;
  y.x0 = x.x0;
  y.x1 = x.x1;
  y.x2 = x.x2;
  y.s0 = std::max(s0, 0.0);
  y.s1 = std::max(s1, 0.0);
  y.s2 = std::max(s2, 0.0);
  return y;
}

ReducedState project(const FullState& y) { return {y.x0, y.x1, y.x2}; }

Vec3 residual_conservation(const ModelParams& p, const FullState& y) {
  return residual_conservation(p, y.vec());
}

Vec3 residual_conservation(const ModelParams& p, const Vec6& y) {
  Vec3 r;
  r[0] = y[0] + y[3] - p.u_f;
  r[1] = y[1] + p.omega0 * y[3] + y[4] - p.omega0 * p.u_f - p.u_g;
  r[2] = p.omega2 * y[0] + y[2] + p.omega0 * p.omega1 * y[3] + p.omega1 * y[4] + y[5] -
         p.omega0 * p.omega1 * p.u_f - p.omega1 * p.u_g - p.u_h;
  return r;
}

Mat6 jacobian_full(const ModelParams& p, const GrowthKinetics& k, const Vec6& y) {
  const double x0 = y[0], x1 = y[1], x2 = y[2];
  const double s0 = std::max(y[3], 0.0), s1 = std::max(y[4], 0.0), s2 = std::max(y[5], 0.0);
  const double m0 = k.mu0(s0, s2), m1 = k.mu1(s1, s2), m2 = k.mu2(s2);
  const GrowthPartials d = k.partials(s0, s1, s2);
  Mat6 J = Mat6::Zero();
  // biomass rows
  J(0, 0) = m0 - p.alpha - p.k_A;
  J(0, 3) = x0 * d.dmu0_ds0;
  J(0, 5) = x0 * d.dmu0_ds2;
  J(1, 1) = m1 - p.alpha - p.k_B;
  J(1, 4) = x1 * d.dmu1_ds1;
  J(1, 5) = x1 * d.dmu1_ds2;
  J(2, 2) = m2 - p.alpha - p.k_C;
  J(2, 5) = x2 * d.dmu2_ds2;
  // substrate rows
  J(3, 0) = -m0;
  J(3, 3) = -p.alpha - x0 * d.dmu0_ds0;
  J(3, 5) = -x0 * d.dmu0_ds2;
  J(4, 0) = p.omega0 * m0;
  J(4, 1) = -m1;
  J(4, 3) = p.omega0 * x0 * d.dmu0_ds0;
  J(4, 4) = -p.alpha - x1 * d.dmu1_ds1;
  J(4, 5) = p.omega0 * x0 * d.dmu0_ds2 - x1 * d.dmu1_ds2;
  J(5, 0) = -p.omega2 * m0;
  J(5, 1) = p.omega1 * m1;
  J(5, 2) = -m2;
  J(5, 3) = -p.omega2 * x0 * d.dmu0_ds0;
  J(5, 4) = p.omega1 * x1 * d.dmu1_ds1;
  J(5, 5) = -p.alpha - p.omega2 * x0 * d.dmu0_ds2 + p.omega1 * x1 * d.dmu1_ds2 - x2 * d.dmu2_ds2;
  return J;
}

}  // namespace chemoweb

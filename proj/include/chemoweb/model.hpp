#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "chemoweb/kinetics.hpp"
#include "chemoweb/params.hpp"

namespace chemoweb {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Biomasses and substrates of the six-dimensional system.
struct FullState {
  double x0 = 0, x1 = 0, x2 = 0;  // chlorophenol degrader, phenol degrader, methanogen
  double s0 = 0, s1 = 0, s2 = 0;  // chlorophenol, phenol, hydrogen

  Vec6 vec() const {
    Vec6 v;
    v << x0, x1, x2, s0, s1, s2;
    return v;
  }
  static FullState from_vec(const Vec6& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
};

/// Biomasses of the reduced three-dimensional system on the invariant set.
struct ReducedState {
  double x0 = 0, x1 = 0, x2 = 0;

  Vec3 vec() const { return Vec3(x0, x1, x2); }
  static ReducedState from_vec(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

class OutsideOmega : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The affine conservation identities defining the invariant region.
struct OmegaRegion {
  explicit OmegaRegion(const ModelParams& p) : p_(p) {}

  double s0(const ReducedState& x) const { return p_.u_f - x.x0; }
  double s1(const ReducedState& x) const { return p_.omega0 * x.x0 - x.x1 + p_.u_g; }
  double s2(const ReducedState& x) const {
    return -p_.omega2 * x.x0 + p_.omega1 * x.x1 - x.x2 + p_.u_h;
  }
  /// Most negative of the substrate expressions (0 when inside).
  double violation(const ReducedState& x) const;
  bool contains(const ReducedState& x, double tol = 0.0) const;

 private:
  ModelParams p_;
};

/// Set when an evaluation had to clamp a substrate expression below -1e-8.
struct RegionStatus {
  bool violated = false;
  double worst = 0.0;  // most negative substrate expression seen
};

/// Right-hand side of the six-dimensional system (decay terms included).
Vec6 rhs_full(const ModelParams& p, const GrowthKinetics& k, const FullState& y);
Vec6 rhs_full(const ModelParams& p, const GrowthKinetics& k, const Vec6& y);

/// Right-hand side of the reduced system. Substrate expressions are clamped
/// at zero before kinetics evaluation; excursions beyond -1e-8 are reported
/// through `status` (not fatal, for integrator internals).
Vec3 rhs_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x,
                 RegionStatus* status = nullptr);
Vec3 rhs_reduced(const ModelParams& p, const GrowthKinetics& k, const Vec3& x,
                 RegionStatus* status = nullptr);

/// Substrates from the conservation identities. Throws OutsideOmega when a
/// substrate would be negative (tolerance 1e-12).
FullState lift(const ModelParams& p, const ReducedState& x);

/// x-components of a full state.
ReducedState project(const FullState& y);

/// The three conservation residuals (zero exactly on the invariant set).
Vec3 residual_conservation(const ModelParams& p, const FullState& y);
Vec3 residual_conservation(const ModelParams& p, const Vec6& y);

/// Analytic Jacobian of rhs_full (used by the stiff integrator).
Mat6 jacobian_full(const ModelParams& p, const GrowthKinetics& k, const Vec6& y);

}  // namespace chemoweb

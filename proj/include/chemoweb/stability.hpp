#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "chemoweb/equilibria.hpp"
#include "chemoweb/model.hpp"

namespace chemoweb {

/// Routh-Hurwitz data of the cubic characteristic polynomial
/// lambda^3 + a2 lambda^2 + a1 lambda + a0 at an interior equilibrium.
struct RHCubic {
  double a2 = 0, a1 = 0, a0 = 0;
  bool stable() const { return a2 > 0 && a0 > 0 && a2 * a1 > a0; }
  double hopf_function() const { return a2 * a1 - a0; }
};

/// Quadratic block lambda^2 + a1 lambda + a0 of a two-species boundary pattern.
struct RHQuadratic {
  double a1 = 0, a0 = 0;
};

enum class StabilityClass {
  StableNode,
  AsymptoticallyStable,  // stable with a complex pair
  Saddle,
  UnstableNode,
  Nonhyperbolic,
};

std::string to_string(StabilityClass c);

struct StabilityReport {
  std::array<std::complex<double>, 3> eigenvalues{};
  int n_pos = 0, n_neg = 0, n_zero = 0;
  StabilityClass classification = StabilityClass::Nonhyperbolic;
  std::optional<RHCubic> rh_cubic;          // interior equilibria
  std::optional<RHQuadratic> rh_quadratic;  // 110/101/011 block
  std::optional<bool> mu2_condition;        // pattern 110: alpha > mu2 at the steady state

  bool stable() const { return n_pos == 0 && n_zero == 0; }
  bool hyperbolic() const { return n_zero == 0; }
};

/// Real-part tolerance used to call an eigenvalue zero.
inline constexpr double kHyperbolicTol = 1e-9;

/// Analytic Jacobian of the reduced system at x. Throws OutsideOmega when a
/// substrate expression is below -1e-8.
Mat3 jacobian_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x);

/// Non-throwing variant for integrator internals: substrate expressions are
/// clamped at zero unconditionally.
Mat3 jacobian_reduced_clipped(const ModelParams& p, const GrowthKinetics& k,
                              const ReducedState& x);

/// Characteristic coefficients (a2, a1, a0) at an interior point. Throws
/// std::invalid_argument when some component of x is not strictly positive.
RHCubic rh_coefficients_interior(const ModelParams& p, const GrowthKinetics& k,
                                 const ReducedState& x);

/// Quadratic block coefficients for the 110 / 101 / 011 patterns.
RHQuadratic rh_coefficients_pattern(const ModelParams& p, const GrowthKinetics& k,
                                    const Equilibrium& e);

/// Deterministic eigenvalues of a 3x3 matrix via the closed-form cubic, with
/// an iterative fallback when the discriminant is near-degenerate.
std::array<std::complex<double>, 3> eigenvalues_of(const Mat3& J);

StabilityReport classify(const ModelParams& p, const GrowthKinetics& k, const Equilibrium& e);

/// (n_pos, n_neg). Throws std::domain_error when the equilibrium is
/// nonhyperbolic (signature undefined).
std::pair<int, int> eigen_signature(const ModelParams& p, const GrowthKinetics& k,
                                    const Equilibrium& e);

}  // namespace chemoweb

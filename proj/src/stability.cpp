#include "chemoweb/stability.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "chemoweb/rootfind.hpp"

namespace chemoweb {

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::StableNode: return "stable-node";
    case StabilityClass::AsymptoticallyStable: return "asymptotically-stable";
    case StabilityClass::Saddle: return "saddle";
    case StabilityClass::UnstableNode: return "unstable-node";
    case StabilityClass::Nonhyperbolic: return "nonhyperbolic";
  }
  return "?";
}

namespace {
Mat3 jacobian_reduced_at(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x,
                         double s0, double s1, double s2);
}  // namespace

Mat3 jacobian_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x) {
  const OmegaRegion omega(p);
  const double s0 = omega.s0(x), s1 = omega.s1(x), s2 = omega.s2(x);
  if (s0 < -1e-8 || s1 < -1e-8 || s2 < -1e-8)
    throw OutsideOmega("jacobian_reduced: state outside the invariant region");
  return jacobian_reduced_at(p, k, x, std::max(s0, 0.0), std::max(s1, 0.0), std::max(s2, 0.0));
}

Mat3 jacobian_reduced_clipped(const ModelParams& p, const GrowthKinetics& k,
                              const ReducedState& x) {
  const OmegaRegion omega(p);
  return jacobian_reduced_at(p, k, x, std::max(omega.s0(x), 0.0), std::max(omega.s1(x), 0.0),
                             std::max(omega.s2(x), 0.0));
}

namespace {
Mat3 jacobian_reduced_at(const ModelParams& p, const GrowthKinetics& k, const ReducedState& x,
                         double s0, double s1, double s2) {
  const double m0 = k.mu0(s0, s2), m1 = k.mu1(s1, s2), m2 = k.mu2(s2);
  const GrowthPartials d = k.partials(s0, s1, s2);
  Mat3 J;
  J(0, 0) = m0 - p.alpha + x.x0 * (-d.dmu0_ds0 - p.omega2 * d.dmu0_ds2);
  J(0, 1) = p.omega1 * x.x0 * d.dmu0_ds2;
  J(0, 2) = -x.x0 * d.dmu0_ds2;
  J(1, 0) = x.x1 * (p.omega0 * d.dmu1_ds1 - p.omega2 * d.dmu1_ds2);
  J(1, 1) = m1 - p.alpha + x.x1 * (-d.dmu1_ds1 + p.omega1 * d.dmu1_ds2);
  J(1, 2) = -x.x1 * d.dmu1_ds2;
  J(2, 0) = -p.omega2 * x.x2 * d.dmu2_ds2;
  J(2, 1) = p.omega1 * x.x2 * d.dmu2_ds2;
  J(2, 2) = m2 - p.alpha - x.x2 * d.dmu2_ds2;
  return J;
}
}  // namespace

RHCubic rh_coefficients_interior(const ModelParams& p, const GrowthKinetics& k,
                                 const ReducedState& x) {
  if (!(x.x0 > 0.0) || !(x.x1 > 0.0) || !(x.x2 > 0.0))
    throw std::invalid_argument("rh_coefficients_interior: point is not interior");
  const OmegaRegion omega(p);
  const double s0 = std::max(omega.s0(x), 0.0);
  const double s1 = std::max(omega.s1(x), 0.0);
  const double s2 = std::max(omega.s2(x), 0.0);
  const GrowthPartials d = k.partials(s0, s1, s2);
  const double A = d.dmu0_ds0, B = d.dmu0_ds2, C = d.dmu1_ds1, E = d.dmu1_ds2, M = d.dmu2_ds2;
  RHCubic r;
  r.a2 = -x.x0 * (-A - p.omega2 * B) - x.x1 * (-C + p.omega1 * E) + x.x2 * M;
  r.a1 = x.x1 * C * (x.x0 * A - (p.omega0 * p.omega1 - p.omega2) * x.x0 * B + x.x2 * M) +
         x.x0 * A * (-p.omega1 * x.x1 * E + x.x2 * M);
  r.a0 = x.x0 * x.x1 * x.x2 * A * C * M;
  return r;
}

RHQuadratic rh_coefficients_pattern(const ModelParams& p, const GrowthKinetics& k,
                                    const Equilibrium& e) {
  const OmegaRegion omega(p);
  const ReducedState& x = e.x;
  const double s0 = std::max(omega.s0(x), 0.0);
  const double s1 = std::max(omega.s1(x), 0.0);
  const double s2 = std::max(omega.s2(x), 0.0);
  const GrowthPartials d = k.partials(s0, s1, s2);
  const std::string lab = e.pattern.label();
  RHQuadratic r;
  if (lab == "110") {
    r.a1 = x.x0 * (d.dmu0_ds0 + p.omega2 * d.dmu0_ds2) +
           x.x1 * (d.dmu1_ds1 - p.omega1 * d.dmu1_ds2);
    r.a0 = x.x0 * x.x1 * (d.dmu0_ds0 + p.omega2 * d.dmu0_ds2) *
               (d.dmu1_ds1 - p.omega1 * d.dmu1_ds2) -
           p.omega1 * x.x0 * x.x1 * d.dmu0_ds2 *
               (p.omega0 * d.dmu1_ds1 - p.omega2 * d.dmu1_ds2);
  } else if (lab == "101") {
    r.a1 = x.x0 * (d.dmu0_ds0 + p.omega2 * d.dmu0_ds2) + x.x2 * d.dmu2_ds2;
    r.a0 = x.x0 * x.x2 * d.dmu0_ds0 * d.dmu2_ds2;
  } else if (lab == "011") {
    r.a1 = x.x1 * (d.dmu1_ds1 - p.omega1 * d.dmu1_ds2) + x.x2 * d.dmu2_ds2;
    r.a0 = x.x1 * x.x2 * d.dmu1_ds1 * d.dmu2_ds2;
  } else {
    throw std::invalid_argument("rh_coefficients_pattern: pattern has no quadratic block");
  }
  return r;
}

std::array<std::complex<double>, 3> eigenvalues_of(const Mat3& J) {
  const double c2 = -J.trace();
  const double c1 = (J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0)) +
                    (J(0, 0) * J(2, 2) - J(0, 2) * J(2, 0)) +
                    (J(1, 1) * J(2, 2) - J(1, 2) * J(2, 1));
  const double c0 = -J.determinant();
  auto roots = cubic_roots(c2, c1, c0);
  // Verify the characteristic residual; switch to the iterative solver when
  // the closed form is near-degenerate.
  double scale = std::max({std::fabs(c2), std::fabs(c1), std::fabs(c0), 1.0});
  for (const auto& l : roots) {
    const std::complex<double> r = ((l + c2) * l + c1) * l + c0;
    if (std::abs(r) > 1e-7 * scale * std::max(1.0, std::norm(l))) {
      Eigen::EigenSolver<Mat3> es(J, false);
      std::array<std::complex<double>, 3> out;
      for (int i = 0; i < 3; ++i) out[i] = es.eigenvalues()[i];
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      return out;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

StabilityReport classify(const ModelParams& p, const GrowthKinetics& k, const Equilibrium& e) {
  StabilityReport rep;
  const Mat3 J = jacobian_reduced(p, k, e.x);
  rep.eigenvalues = eigenvalues_of(J);
  bool any_complex = false;
  for (const auto& l : rep.eigenvalues) {
    if (std::fabs(l.imag()) > kHyperbolicTol) any_complex = true;
    if (l.real() > kHyperbolicTol) ++rep.n_pos;
    else if (l.real() < -kHyperbolicTol) ++rep.n_neg;
    else ++rep.n_zero;
  }
  if (rep.n_zero > 0) rep.classification = StabilityClass::Nonhyperbolic;
  else if (rep.n_pos == 0) rep.classification = any_complex ? StabilityClass::AsymptoticallyStable
                                                            : StabilityClass::StableNode;
  else if (rep.n_pos == 3) rep.classification = StabilityClass::UnstableNode;
  else rep.classification = StabilityClass::Saddle;

  if (e.pattern.interior()) {
    rep.rh_cubic = rh_coefficients_interior(p, k, e.x);
  } else {
    const std::string lab = e.pattern.label();
    if (lab == "110" || lab == "101" || lab == "011")
      rep.rh_quadratic = rh_coefficients_pattern(p, k, e);
    if (lab == "110") {
      const OmegaRegion omega(p);
      rep.mu2_condition = p.alpha > k.mu2(std::max(omega.s2(e.x), 0.0));
    }
  }
  return rep;
}

std::pair<int, int> eigen_signature(const ModelParams& p, const GrowthKinetics& k,
                                    const Equilibrium& e) {
  const StabilityReport rep = classify(p, k, e);
  if (!rep.hyperbolic())
    throw std::domain_error("eigen_signature: equilibrium is nonhyperbolic");
  return {rep.n_pos, rep.n_neg};
}

}  // namespace chemoweb

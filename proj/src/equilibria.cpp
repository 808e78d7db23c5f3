#include "chemoweb/equilibria.hpp"

#include <algorithm>
#include <cmath>

#include "chemoweb/rootfind.hpp"

namespace chemoweb {

namespace {

constexpr double kBoundaryTol = 1e-10;

Equilibrium make_eq(const ModelParams& p, PresencePattern pat, double x0, double x1, double x2,
                    Provenance prov) {
  Equilibrium e;
  e.pattern = pat;
  e.x = {x0, x1, x2};
  e.provenance = prov;
  const OmegaRegion omega(p);
  const double viol = omega.violation(e.x);
  e.existence_ok = viol >= -kBoundaryTol;
  e.on_boundary = e.existence_ok && viol < 0.0;
  if (e.existence_ok) {
    ReducedState xc = e.x;  // clamp roundoff-negative components
    xc.x0 = std::max(xc.x0, 0.0);
    xc.x1 = std::max(xc.x1, 0.0);
    xc.x2 = std::max(xc.x2, 0.0);
    e.lifted = lift(p, xc);
  }
  return e;
}

/// Decreasing continuous map on [lo, hi]; returns the root of f = 0 if the
/// bracket straddles zero.
std::optional<double> root_of_decreasing(const std::function<double(double)>& f, double lo,
                                         double hi) {
  const double flo = f(lo), fhi = f(hi);
  if (!(flo > 0.0)) return std::nullopt;  // no crossing: starts below
  if (fhi > 0.0) return std::nullopt;     // stays above on the whole window
  return brent_root(f, lo, hi, 1e-15);
}

}  // namespace

int PresencePattern::order_index() const {
  static constexpr int kOrder[8] = {
      // indexed by p0*4 + p1*2 + p2
      0,  // 000
      3,  // 001
      2,  // 010
      5,  // 011
      1,  // 100
      4,  // 101
      6,  // 110
      7,  // 111
  };
  return kOrder[(p0 ? 4 : 0) + (p1 ? 2 : 0) + (p2 ? 1 : 0)];
}

Equilibrium eq_000(const ModelParams& p) {
  return make_eq(p, {false, false, false}, 0.0, 0.0, 0.0, Provenance::ClosedForm);
}

std::optional<Equilibrium> eq_100(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0) return std::nullopt;
  const double hi = std::min(p.u_f, p.u_h / p.omega2);
  if (!(hi > 0.0)) return std::nullopt;
  if (!(p.alpha < k.mu0(p.u_f, p.u_h))) return std::nullopt;
  auto f = [&](double x0) { return k.mu0(p.u_f - x0, p.u_h - p.omega2 * x0) - p.alpha; };
  auto root = root_of_decreasing(f, 0.0, hi);
  if (!root) return std::nullopt;
  return make_eq(p, {true, false, false}, *root, 0.0, 0.0, Provenance::NumericRefined);
}

std::optional<Equilibrium> eq_010(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0 || !(p.u_g > 0.0)) return std::nullopt;
  if (!(p.alpha < k.mu1(p.u_g, p.u_h))) return std::nullopt;
  auto f = [&](double x1) { return k.mu1(p.u_g - x1, p.omega1 * x1 + p.u_h) - p.alpha; };
  auto root = root_of_decreasing(f, 0.0, p.u_g);
  if (!root) return std::nullopt;
  return make_eq(p, {false, true, false}, 0.0, *root, 0.0, Provenance::NumericRefined);
}

std::optional<Equilibrium> eq_001(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0 || !(p.alpha < k.mu2(p.u_h))) return std::nullopt;
  const double x2 = p.u_h - k.mu2_inverse(p.alpha);
  if (!(x2 > 0.0)) return std::nullopt;
  return make_eq(p, {false, false, true}, 0.0, 0.0, x2, Provenance::ClosedForm);
}

std::optional<Equilibrium> eq_101(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0 || p.alpha >= k.mu2_sup()) return std::nullopt;
  if (!(p.alpha < k.mu2(p.u_h))) return std::nullopt;
  const double m = k.mu2_inverse(p.alpha);
  const double den = p.alpha * (p.K_P + m) - m;
  if (den == 0.0) return std::nullopt;
  const double x0 = (p.alpha * (1.0 + p.u_f) * (p.K_P + m) - p.u_f * m) / den;
  const double x2 = -p.omega2 * x0 + p.u_h - m;
  if (!(x0 > 0.0) || x0 > p.u_f + kBoundaryTol || !(x2 > 0.0)) return std::nullopt;
  return make_eq(p, {true, false, true}, x0, 0.0, x2, Provenance::ClosedForm);
}

std::optional<Equilibrium> eq_011(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0 || p.alpha >= k.mu2_sup()) return std::nullopt;
  if (!(p.alpha < k.mu2(p.omega1 * p.u_g + p.u_h))) return std::nullopt;
  const double m = k.mu2_inverse(p.alpha);
  const double den = p.alpha * (1.0 + p.K_I * m) - p.phi1;
  if (den == 0.0) return std::nullopt;
  const double x1 = (p.alpha * (1.0 + p.u_g) * (1.0 + p.K_I * m) - p.u_g * p.phi1) / den;
  const double x2 = p.omega1 * x1 + p.u_h - m;
  if (!(x1 > 0.0) || x1 > p.u_g + kBoundaryTol || !(x2 > 0.0)) return std::nullopt;
  return make_eq(p, {false, true, true}, 0.0, x1, x2, Provenance::ClosedForm);
}

std::vector<Equilibrium> eq_110_all(const ModelParams& p, const GrowthKinetics& k) {
  std::vector<Equilibrium> out;
  if (p.alpha <= 0.0) return out;
  // On the x2 = 0 face with s2 = S(x0) solved from the first balance:
  //   S = N/D,  N = alpha K_P (1 + u_f - x0),  D = (1-alpha)(u_f - x0) - alpha,
  // then x1 = (S + omega2 x0 - u_h)/omega1 and the second balance becomes
  //   phi1 (beta D - N) D = alpha (omega1 D + beta D - N)(D + K_I N),
  // with beta = (omega0 omega1 - omega2) x0 + omega1 u_g + u_h.
  const Poly N = Poly::linear(p.alpha * p.K_P * (1.0 + p.u_f), -p.alpha * p.K_P);
  const Poly D = Poly::linear((1.0 - p.alpha) * p.u_f - p.alpha, -(1.0 - p.alpha));
  const Poly beta =
      Poly::linear(p.omega1 * p.u_g + p.u_h, p.omega0 * p.omega1 - p.omega2);
  const Poly lhs = p.phi1 * ((beta * D - N) * D);
  const Poly rhs = p.alpha * ((p.omega1 * D + beta * D - N) * (D + p.K_I * N));
  Poly q = lhs - rhs;
  q.trim(1e-14);

  for (double x0 : poly_real_roots(q)) {
    if (!(x0 > 0.0) || !(x0 < p.u_f)) continue;
    const double Dv = D.eval(x0);
    if (Dv == 0.0) continue;
    const double S = N.eval(x0) / Dv;
    double x1 = (S + p.omega2 * x0 - p.u_h) / p.omega1;
    const double lo = std::max(0.0, (p.omega2 * x0 - p.u_h) / p.omega1);
    const double hi = p.u_g + p.omega0 * x0;
    if (!(x1 > lo) || !(x1 < hi)) continue;

    // 2-D Newton polish on (mu0 - alpha, mu1 - alpha).
    double y0 = x0, y1 = x1;
    for (int it = 0; it < 40; ++it) {
      const double s0 = p.u_f - y0;
      const double s1 = p.omega0 * y0 - y1 + p.u_g;
      const double s2 = -p.omega2 * y0 + p.omega1 * y1 + p.u_h;
      if (s0 < 0 || s1 < 0 || s2 < 0) break;
      const double g0 = k.mu0(s0, s2) - p.alpha;
      const double g1 = k.mu1(s1, s2) - p.alpha;
      const GrowthPartials d = k.partials(s0, s1, s2);
      const double a = -d.dmu0_ds0 - p.omega2 * d.dmu0_ds2;   // dg0/dx0
      const double b = p.omega1 * d.dmu0_ds2;                  // dg0/dx1
      const double c = p.omega0 * d.dmu1_ds1 - p.omega2 * d.dmu1_ds2;  // dg1/dx0
      const double e = -d.dmu1_ds1 + p.omega1 * d.dmu1_ds2;    // dg1/dx1
      const double det = a * e - b * c;
      if (det == 0.0) break;
      const double dx0 = (g0 * e - b * g1) / det;
      const double dx1 = (a * g1 - g0 * c) / det;
      y0 -= dx0;
      y1 -= dx1;
      if (std::fabs(dx0) + std::fabs(dx1) < 1e-15 * (1.0 + std::fabs(y0) + std::fabs(y1))) break;
    }
    {
      const double s0 = p.u_f - y0, s1 = p.omega0 * y0 - y1 + p.u_g,
                   s2 = -p.omega2 * y0 + p.omega1 * y1 + p.u_h;
      if (!(s0 >= -kBoundaryTol) || !(s1 >= -kBoundaryTol) || !(s2 >= -kBoundaryTol)) continue;
      const double r0 = k.mu0(std::max(s0, 0.0), std::max(s2, 0.0)) - p.alpha;
      const double r1 = k.mu1(std::max(s1, 0.0), std::max(s2, 0.0)) - p.alpha;
      if (std::fabs(r0) > 1e-9 || std::fabs(r1) > 1e-9) continue;
    }
    bool dup = false;
    for (const auto& e : out)
      if (std::fabs(e.x.x0 - y0) < 1e-9 * (1.0 + std::fabs(y0))) dup = true;
    if (dup) continue;
    out.push_back(make_eq(p, {true, true, false}, y0, y1, 0.0, Provenance::PolynomialRoot));
  }
  std::sort(out.begin(), out.end(),
            [](const Equilibrium& a, const Equilibrium& b) { return a.x.x0 < b.x.x0; });
  return out;
}

std::optional<Equilibrium> eq_111(const ModelParams& p, const GrowthKinetics& k) {
  if (p.alpha <= 0.0 || p.alpha >= k.mu2_sup()) return std::nullopt;
  const double m = k.mu2_inverse(p.alpha);
  const double den0 = p.K_P * (p.phi2 - p.alpha) + p.alpha - 1.0;
  const double den1 = p.alpha * (1.0 + p.K_I * m) - p.phi1;
  if (den0 == 0.0 || den1 == 0.0) return std::nullopt;
  const double x0 = 1.0 + p.u_f + 1.0 / den0;
  const double x1 = p.omega0 * x0 + p.u_g + 1.0 + p.phi1 / den1;
  const double x2 = -p.omega2 * x0 + p.omega1 * x1 + p.u_h - m;
  if (!(x0 > 0.0) || !(x1 > 0.0) || !(x2 > 0.0)) return std::nullopt;
  Equilibrium e = make_eq(p, {true, true, true}, x0, x1, x2, Provenance::ClosedForm);
  if (!e.existence_ok) return std::nullopt;
  return e;
}

std::vector<Equilibrium> enumerate_equilibria(const ModelParams& p, const GrowthKinetics& k) {
  std::vector<Equilibrium> out;
  out.push_back(eq_000(p));
  if (auto e = eq_100(p, k)) out.push_back(*e);
  if (auto e = eq_010(p, k)) out.push_back(*e);
  if (auto e = eq_001(p, k)) out.push_back(*e);
  if (auto e = eq_101(p, k)) out.push_back(*e);
  if (auto e = eq_011(p, k)) out.push_back(*e);
  for (const auto& e : eq_110_all(p, k)) out.push_back(e);
  if (auto e = eq_111(p, k)) out.push_back(*e);
  std::stable_sort(out.begin(), out.end(), [](const Equilibrium& a, const Equilibrium& b) {
    if (a.pattern.order_index() != b.pattern.order_index())
      return a.pattern.order_index() < b.pattern.order_index();
    return a.x.x0 < b.x.x0;
  });
  return out;
}

}  // namespace chemoweb

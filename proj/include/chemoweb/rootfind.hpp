#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace chemoweb {

/// Brent's method on a sign-changing bracket [lo, hi].
/// Requires f(lo) and f(hi) of opposite sign (or one of them zero).
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double xtol = 1e-14, int max_iter = 200);

/// Dense univariate polynomial, ascending coefficients: c[0] + c[1] x + ...
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}
  static Poly constant(double a) { return Poly({a}); }
  static Poly linear(double a0, double a1) { return Poly({a0, a1}); }

  int degree() const;
  double eval(double x) const;
  Poly deriv() const;
  Poly& trim(double rel_eps = 0.0);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(double s, const Poly& a);
};

/// All complex roots via the companion-matrix eigenvalue method.
std::vector<std::complex<double>> poly_roots(const Poly& p);

/// Real roots: companion-matrix roots with |Im| <= im_tol * scale, then
/// Newton-polished on the polynomial; duplicates merged.
std::vector<double> poly_real_roots(const Poly& p, double im_tol = 1e-9);

/// Roots of x^3 + c2 x^2 + c1 x + c0 in closed form (trigonometric/Cardano),
/// templated so the quad-precision Lyapunov path can reuse it.
template <typename R>
std::array<std::complex<double>, 3> cubic_roots_d(double c2, double c1, double c0);

/// Double-precision instantiation used everywhere in the library.
std::array<std::complex<double>, 3> cubic_roots(double c2, double c1, double c0);

/// Solve the Vandermonde system for polynomial interpolation through
/// (xs[i], ys[i]); returns ascending coefficients, size xs.size().
std::vector<double> fit_polynomial(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace chemoweb

#include "chemoweb/rootfind.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>

namespace chemoweb {

double brent_root(const std::function<double(double)>& f, double lo, double hi, double xtol,
                  int max_iter) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) throw std::invalid_argument("brent_root: no sign change on bracket");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a; fc = fa; d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::fabs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
        e = d; d = p / q;
      } else {
        d = xm; e = d;
      }
    } else {
      d = xm; e = d;
    }
    a = b; fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

int Poly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0.0) return i;
  return -1;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::deriv() const {
  if (c.size() <= 1) return Poly({0.0});
  std::vector<double> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
  return Poly(std::move(d));
}

Poly& Poly::trim(double rel_eps) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  while (c.size() > 1 && std::fabs(c.back()) <= rel_eps * scale) c.pop_back();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return Poly({0.0});
  std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

Poly operator*(double s, const Poly& a) {
  Poly r = a;
  for (double& v : r.c) v *= s;
  return r;
}

std::vector<std::complex<double>> poly_roots(const Poly& p) {
  Poly q = p;
  q.trim(1e-14);
  const int n = q.degree();
  if (n <= 0) return {};
  if (n == 1) return {std::complex<double>(-q.c[0] / q.c[1], 0.0)};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -q.c[i] / q.c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

std::vector<double> poly_real_roots(const Poly& p, double im_tol) {
  std::vector<double> out;
  double scale = 0.0;
  for (const auto& z : poly_roots(p)) scale = std::max(scale, std::abs(z));
  const Poly dp = p.deriv();
  for (const auto& z : poly_roots(p)) {
    if (std::fabs(z.imag()) > im_tol * std::max(1.0, scale)) continue;
    double x = z.real();
    for (int it = 0; it < 8; ++it) {  // Newton polish
      const double f = p.eval(x), df = dp.eval(x);
      if (df == 0.0) break;
      const double step = f / df;
      x -= step;
      if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
    }
    bool dup = false;
    for (double r : out)
      if (std::fabs(r - x) <= 1e-9 * std::max(1.0, std::fabs(x))) dup = true;
    if (!dup) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename R>
std::array<std::complex<double>, 3> cubic_roots_d(double c2d, double c1d, double c0d) {
  // x^3 + c2 x^2 + c1 x + c0; depressed via x = t - c2/3.
  const R c2 = R(c2d), c1 = R(c1d), c0 = R(c0d);
  const R third = R(1) / R(3);
  const R sh = c2 * third;
  const R p = c1 - c2 * c2 * third;
  const R q = c0 - c1 * sh + R(2) * sh * sh * sh;
  const R disc = q * q / R(4) + p * p * p / R(27);
  std::array<std::complex<double>, 3> out;
  using std::sqrt;
  using std::cbrt;
  using std::acos;
  using std::cos;
  using std::fabs;
  if (disc > R(0)) {
    const R sd = sqrt(disc);
    const R u = cbrt(-q / R(2) + sd);
    const R v = cbrt(-q / R(2) - sd);
    const R re = -(u + v) / R(2) - sh;
    const R im = (u - v) * sqrt(R(3)) / R(2);
    out[0] = std::complex<double>(static_cast<double>(u + v - sh), 0.0);
    out[1] = std::complex<double>(static_cast<double>(re), static_cast<double>(im));
    out[2] = std::conj(out[1]);
  } else if (p == R(0) && q == R(0)) {
    out[0] = out[1] = out[2] = std::complex<double>(static_cast<double>(-sh), 0.0);
  } else {
    // three real roots, trigonometric form
    const R rr = sqrt(-p * third);
    R arg = -q / (R(2) * rr * rr * rr);
    if (arg > R(1)) arg = R(1);
    if (arg < R(-1)) arg = R(-1);
    const R phi = acos(arg);
    const R pi = R(3.14159265358979323846264338327950288L);
    for (int k = 0; k < 3; ++k) {
      const R t = R(2) * rr * cos((phi + R(2) * pi * R(k)) * third);
      out[k] = std::complex<double>(static_cast<double>(t - sh), 0.0);
    }
  }
  return out;
}

template std::array<std::complex<double>, 3> cubic_roots_d<double>(double, double, double);
template std::array<std::complex<double>, 3> cubic_roots_d<long double>(double, double, double);

std::array<std::complex<double>, 3> cubic_roots(double c2, double c1, double c0) {
  return cubic_roots_d<long double>(c2, c1, c0);
}

std::vector<double> fit_polynomial(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  if (ys.size() != xs.size() || n == 0) throw std::invalid_argument("fit_polynomial: size mismatch");
  Eigen::MatrixXd V(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    double pw = 1.0;
    for (int j = 0; j < n; ++j) {
      V(i, j) = pw;
      pw *= xs[i];
    }
    rhs[i] = ys[i];
  }
  Eigen::VectorXd sol = V.fullPivLu().solve(rhs);
  return std::vector<double>(sol.data(), sol.data() + n);
}

}  // namespace chemoweb

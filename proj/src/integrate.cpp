#include "chemoweb/integrate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>

#include "chemoweb/stability.hpp"

namespace chemoweb {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192,
                 kB5 = -2187.0 / 6784, kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

template <int N>
using VecN = Eigen::Matrix<double, N, 1>;
template <int N>
using MatN = Eigen::Matrix<double, N, N>;

template <int N, class F, class J>
class Stepper {
 public:
  Stepper(F rhs, J jac, const IntegratorOptions& opt) : rhs_(rhs), jac_(jac), opt_(opt) {}

  Trajectory run(VecN<N> y, double t_end, IntegratorStats& st, Trajectory* partial) {
    Trajectory traj;
    traj.dim = N;
    auto store = [&](double t, const VecN<N>& v) {
      traj.t.push_back(t);
      for (int i = 0; i < N; ++i) traj.states.push_back(v[i]);
    };
    double t = 0.0;
    store(t, y);
    if (t_end <= 0.0) {
      traj.stats = st;
      return traj;
    }
    double h = std::min({opt_.h_init, t_end, opt_.h_max});
    bool stiff = false;
    std::deque<bool> window;  // recent accept(true)/reject(false) outcomes
    VecN<N> f0 = rhs_(y);
    ++st.n_rhs;
    while (t < t_end) {
      if (traj.t.size() > 4 && st.n_accepted + st.n_rejected > opt_.max_steps) {
        traj.stats = st;
        if (partial) *partial = traj;
        throw IntegrationFailure("integrate: step budget exhausted");
      }
      h = std::min(h, t_end - t);
      VecN<N> ynew;
      double err;
      if (!stiff) {
        err = dopri_step(y, f0, h, ynew, st);
      } else {
        err = ros23_step(y, f0, h, ynew, st);
      }
      const bool accept = err <= 1.0 && ynew.allFinite();
      window.push_back(accept);
      if (window.size() > 20) window.pop_front();
      if (accept) {
        ++st.n_accepted;
        st.max_residual = std::max(st.max_residual, err);
        t += h;
        y = ynew;
        f0 = rhs_(y);
        ++st.n_rhs;
        store(t, y);
      } else {
        ++st.n_rejected;
      }
      if (!stiff && opt_.allow_stiff_switch && window.size() == 20) {
        int rejects = 0;
        for (bool a : window)
          if (!a) ++rejects;
        if (rejects > 10) {
          stiff = true;
          st.stiff_switched = true;
          window.clear();
        }
      }
      const double order = stiff ? 3.0 : 5.0;
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -1.0 / order);
      fac = std::clamp(fac, 0.2, 5.0);
      h = std::clamp(h * fac, opt_.h_min, opt_.h_max);
      if (h <= opt_.h_min && err > 1.0) {
        traj.stats = st;
        if (partial) *partial = traj;
        throw IntegrationFailure("integrate: step size collapsed");
      }
    }
    traj.stats = st;
    subsample(traj);
    return traj;
  }

 private:
  double error_norm(const VecN<N>& y, const VecN<N>& ynew, const VecN<N>& e) const {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
      const double sc = opt_.abs_tol + opt_.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      const double q = e[i] / sc;
      acc += q * q;
    }
    return std::sqrt(acc / N);
  }

  double dopri_step(const VecN<N>& y, const VecN<N>& k1, double h, VecN<N>& out,
                    IntegratorStats& st) {
    const VecN<N> k2 = rhs_(y + h * (kA21 * k1));
    const VecN<N> k3 = rhs_(y + h * (kA31 * k1 + kA32 * k2));
    const VecN<N> k4 = rhs_(y + h * (kA41 * k1 + kA42 * k2 + kA43 * k3));
    const VecN<N> k5 = rhs_(y + h * (kA51 * k1 + kA52 * k2 + kA53 * k3 + kA54 * k4));
    const VecN<N> k6 = rhs_(y + h * (kA61 * k1 + kA62 * k2 + kA63 * k3 + kA64 * k4 + kA65 * k5));
    out = y + h * (kB1 * k1 + kB3 * k3 + kB4 * k4 + kB5 * k5 + kB6 * k6);
    const VecN<N> k7 = rhs_(out);
    st.n_rhs += 6;
    const VecN<N> e =
        h * (kE1 * k1 + kE3 * k3 + kE4 * k4 + kE5 * k5 + kE6 * k6 + kE7 * k7);
    return error_norm(y, out, e);
  }

  double ros23_step(const VecN<N>& y, const VecN<N>& f0, double h, VecN<N>& out,
                    IntegratorStats& st) {
    const double d = 1.0 / (2.0 + std::sqrt(2.0));
    const double e32 = 6.0 + std::sqrt(2.0);
    const MatN<N> Jm = jac_(y);
    MatN<N> W = MatN<N>::Identity() - h * d * Jm;
    Eigen::PartialPivLU<MatN<N>> lu(W);
    const VecN<N> k1 = lu.solve(f0);
    const VecN<N> f1 = rhs_(y + 0.5 * h * k1);
    const VecN<N> k2 = lu.solve(f1 - k1) + k1;
    out = y + h * k2;
    const VecN<N> f2 = rhs_(out);
    st.n_rhs += 2;
    const VecN<N> k3 = lu.solve(f2 - e32 * (k2 - f1) - 2.0 * (k1 - f0));
    const VecN<N> e = (h / 6.0) * (k1 - 2.0 * k2 + k3);
    return error_norm(y, out, e);
  }

  void subsample(Trajectory& traj) const {
    if (opt_.max_store == 0 || traj.t.size() <= opt_.max_store) return;
    const std::size_t n = traj.t.size();
    const std::size_t m = opt_.max_store;
    std::vector<double> t2;
    std::vector<double> s2;
    t2.reserve(m);
    s2.reserve(m * N);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t i = (j == m - 1) ? n - 1 : j * (n - 1) / (m - 1);
      t2.push_back(traj.t[i]);
      for (int c = 0; c < N; ++c) s2.push_back(traj.states[i * N + c]);
    }
    traj.t = std::move(t2);
    traj.states = std::move(s2);
  }

  F rhs_;
  J jac_;
  IntegratorOptions opt_;
};

}  // namespace

Trajectory integrate_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& y0,
                             double t_end, const IntegratorOptions& opt, Trajectory* partial) {
  IntegratorStats st;
  double worst = 0.0;
  auto rhs = [&](const Vec3& y) {
    RegionStatus rs;
    Vec3 f = rhs_reduced(p, k, y, &rs);
    if (rs.violated) worst = std::min(worst, rs.worst);
    return f;
  };
  auto jac = [&](const Vec3& y) {
    return jacobian_reduced_clipped(p, k, ReducedState::from_vec(y));
  };
  Stepper<3, decltype(rhs), decltype(jac)> stepper(rhs, jac, opt);
  Trajectory traj = stepper.run(y0.vec(), t_end, st, partial);
  traj.stats.max_region_violation = -worst;
  return traj;
}

Trajectory integrate_full(const ModelParams& p, const GrowthKinetics& k, const FullState& y0,
                          double t_end, const IntegratorOptions& opt, Trajectory* partial) {
  IntegratorStats st;
  auto rhs = [&](const Vec6& y) { return rhs_full(p, k, y); };
  auto jac = [&](const Vec6& y) { return jacobian_full(p, k, y); };
  Stepper<6, decltype(rhs), decltype(jac)> stepper(rhs, jac, opt);
  return stepper.run(y0.vec(), t_end, st, partial);
}

}  // namespace chemoweb

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "chemoweb/model.hpp"

namespace chemoweb {

struct IntegratorOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double h_init = 1e-3;
  double h_min = 1e-12;
  double h_max = std::numeric_limits<double>::infinity();
  std::uint64_t max_steps = 200'000'000;
  bool allow_stiff_switch = true;
  /// Record at most this many states (subsampling keeps ends exact); 0 = all.
  std::size_t max_store = 0;
};

struct IntegratorStats {
  std::uint64_t n_accepted = 0;
  std::uint64_t n_rejected = 0;
  std::uint64_t n_rhs = 0;
  bool stiff_switched = false;
  double max_residual = 0.0;       // largest error-norm of an accepted step
  double max_region_violation = 0.0;
};

class IntegrationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time series on a non-uniform grid; rows are states of dimension `dim`.
struct Trajectory {
  int dim = 0;
  std::vector<double> t;
  std::vector<double> states;  // row-major, t.size() * dim
  IntegratorStats stats;

  std::size_t size() const { return t.size(); }
  const double* row(std::size_t i) const { return states.data() + i * dim; }
  double value(std::size_t i, int j) const { return states[i * dim + j]; }
  Vec3 row3(std::size_t i) const {
    return Vec3(value(i, 0), value(i, 1), value(i, 2));
  }
};

/// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) with an automatic
/// switch to a linearly implicit Rosenbrock(2,3) scheme driven by the
/// analytic Jacobian when the step-rejection rate exceeds 50% over a
/// 20-step window. Throws IntegrationFailure on step collapse; the partial
/// trajectory is returned through `partial` when provided.
Trajectory integrate_reduced(const ModelParams& p, const GrowthKinetics& k, const ReducedState& y0,
                             double t_end, const IntegratorOptions& opt = {},
                             Trajectory* partial = nullptr);

Trajectory integrate_full(const ModelParams& p, const GrowthKinetics& k, const FullState& y0,
                          double t_end, const IntegratorOptions& opt = {},
                          Trajectory* partial = nullptr);

}  // namespace chemoweb

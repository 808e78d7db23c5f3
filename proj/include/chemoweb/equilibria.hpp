#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chemoweb/model.hpp"

namespace chemoweb {

/// Which of the three populations are nonzero at a steady state.
struct PresencePattern {
  bool p0 = false, p1 = false, p2 = false;

  std::string label() const {
    return std::string() + (p0 ? '1' : '0') + (p1 ? '1' : '0') + (p2 ? '1' : '0');
  }
  /// Canonical enumeration order: 000,100,010,001,101,011,110,111.
  int order_index() const;
  bool interior() const { return p0 && p1 && p2; }
  bool operator==(const PresencePattern&) const = default;
};

enum class Provenance { ClosedForm, PolynomialRoot, NumericRefined };

struct Equilibrium {
  PresencePattern pattern;
  ReducedState x;
  FullState lifted;
  bool existence_ok = true;   // inside the invariant region
  bool on_boundary = false;   // within 1e-10 of an existence boundary
  Provenance provenance = Provenance::ClosedForm;
};

/// Washout steady state; always exists.
Equilibrium eq_000(const ModelParams& p);

/// Chlorophenol degrader only. Root of mu0(u_f - x0, u_h - omega2 x0) = alpha
/// on (0, min(u_f, u_h/omega2)]; the map is strictly decreasing there.
std::optional<Equilibrium> eq_100(const ModelParams& p, const GrowthKinetics& k);

/// Phenol degrader only. Root of mu1(u_g - x1, omega1 x1 + u_h) = alpha on (0, u_g].
std::optional<Equilibrium> eq_010(const ModelParams& p, const GrowthKinetics& k);

/// Methanogen only: x2 = u_h - mu2^{-1}(alpha); exists iff alpha < mu2(u_h).
std::optional<Equilibrium> eq_001(const ModelParams& p, const GrowthKinetics& k);

/// Chlorophenol degrader + methanogen (closed form for the Monod prototype).
std::optional<Equilibrium> eq_101(const ModelParams& p, const GrowthKinetics& k);

/// Phenol degrader + methanogen (closed form for the Monod prototype).
std::optional<Equilibrium> eq_011(const ModelParams& p, const GrowthKinetics& k);

/// Chlorophenol + phenol degraders, methanogen washed out. Eliminating x1
/// yields a polynomial in x0; all feasible roots are returned (up to four),
/// each polished by 2-D Newton on the defining system.
std::vector<Equilibrium> eq_110_all(const ModelParams& p, const GrowthKinetics& k);

/// Interior equilibrium (closed forms for the Monod prototype).
std::optional<Equilibrium> eq_111(const ModelParams& p, const GrowthKinetics& k);

/// All equilibria present at p, ordered by pattern then x0.
std::vector<Equilibrium> enumerate_equilibria(const ModelParams& p, const GrowthKinetics& k);

}  // namespace chemoweb

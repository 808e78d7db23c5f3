#pragma once

#include <stdexcept>

#include "chemoweb/params.hpp"

namespace chemoweb {

/// First partial derivatives of the three growth functions.
struct GrowthPartials {
  double dmu0_ds0 = 0, dmu0_ds2 = 0;
  double dmu1_ds1 = 0, dmu1_ds2 = 0;
  double dmu2_ds2 = 0;
};

/// Growth-rate interface: mu0(s0,s2) for the chlorophenol degrader,
/// mu1(s1,s2) for the (hydrogen-inhibited) phenol degrader, mu2(s2) for the
/// methanogen. Implementations must satisfy the qualitative conditions
///   mu0(0,.) = mu0(.,0) = 0, mu1(0,.) = 0, mu2(0) = 0,
///   dmu0/ds0 > 0, dmu0/ds2 > 0, dmu1/ds1 > 0, dmu1/ds2 < 0, dmu2/ds2 > 0
/// on the positive orthant.
class GrowthKinetics {
 public:
  virtual ~GrowthKinetics() = default;

  virtual double mu0(double s0, double s2) const = 0;
  virtual double mu1(double s1, double s2) const = 0;
  virtual double mu2(double s2) const = 0;
  virtual GrowthPartials partials(double s0, double s1, double s2) const = 0;

  /// Supremum of mu2 over s2 >= 0 (phi2 for the Monod prototype).
  virtual double mu2_sup() const = 0;

  /// Preimage of alpha on the increasing branch of mu2. Default: safeguarded
  /// bisection. Throws std::domain_error when alpha is out of range.
  virtual double mu2_inverse(double alpha) const;
};

/// Monod prototype growth functions:
///   mu0 = s0/(1+s0) * s2/(K_P+s2)
///   mu1 = phi1 * s1/(1+s1) * 1/(1+K_I*s2)
///   mu2 = phi2 * s2/(1+s2)
class MonodKinetics final : public GrowthKinetics {
 public:
  explicit MonodKinetics(const ModelParams& p)
      : phi1_(p.phi1), phi2_(p.phi2), K_P_(p.K_P), K_I_(p.K_I) {}
  MonodKinetics(double phi1, double phi2, double K_P, double K_I)
      : phi1_(phi1), phi2_(phi2), K_P_(K_P), K_I_(K_I) {}

  double mu0(double s0, double s2) const override {
    return s0 / (1.0 + s0) * s2 / (K_P_ + s2);
  }
  double mu1(double s1, double s2) const override {
    return phi1_ * s1 / (1.0 + s1) / (1.0 + K_I_ * s2);
  }
  double mu2(double s2) const override { return phi2_ * s2 / (1.0 + s2); }

  GrowthPartials partials(double s0, double s1, double s2) const override {
    GrowthPartials d;
    const double i0 = 1.0 / (1.0 + s0), i1 = 1.0 / (1.0 + s1), i2 = 1.0 / (1.0 + s2);
    const double ip = 1.0 / (K_P_ + s2), ii = 1.0 / (1.0 + K_I_ * s2);
    d.dmu0_ds0 = i0 * i0 * s2 * ip;
    d.dmu0_ds2 = s0 * i0 * K_P_ * ip * ip;
    d.dmu1_ds1 = phi1_ * i1 * i1 * ii;
    d.dmu1_ds2 = -phi1_ * s1 * i1 * K_I_ * ii * ii;
    d.dmu2_ds2 = phi2_ * i2 * i2;
    return d;
  }

  double mu2_sup() const override { return phi2_; }

  /// Closed form: s2 = alpha / (phi2 - alpha).
  double mu2_inverse(double alpha) const override {
    if (!(alpha > 0.0) || alpha >= phi2_)
      throw std::domain_error("mu2_inverse: alpha outside (0, phi2)");
    return alpha / (phi2_ - alpha);
  }

  double phi1() const { return phi1_; }
  double phi2() const { return phi2_; }
  double K_P() const { return K_P_; }
  double K_I() const { return K_I_; }

 private:
  double phi1_, phi2_, K_P_, K_I_;
};

/// Checked evaluation of all three growth rates. Negative input -> domain error.
struct GrowthRates {
  double mu0, mu1, mu2;
};
GrowthRates eval_growth(const GrowthKinetics& k, double s0, double s1, double s2);

/// Checked evaluation of the five first partials. Negative input -> domain error.
GrowthPartials eval_growth_partials(const GrowthKinetics& k, double s0, double s1, double s2);

}  // namespace chemoweb

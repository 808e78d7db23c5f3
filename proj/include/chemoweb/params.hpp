#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace chemoweb {

/// Thrown when a parameter set violates its invariants or a file cannot be parsed.
class InvalidParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensionless parameters of the scaled three-species chemostat model.
/// Single source of parameter truth for the whole toolkit.
struct ModelParams {
  double alpha = 0.0;  // dilution rate
  double u_f = 0.0;    // chlorophenol inflow
  double u_g = 0.0;    // phenol inflow
  double u_h = 0.0;    // hydrogen inflow

  double omega0 = 0.0;  // phenol produced per chlorophenol consumed
  double omega1 = 0.0;  // hydrogen produced per phenol consumed
  double omega2 = 0.0;  // hydrogen consumed per chlorophenol consumed
  double phi1 = 0.0;    // phenol degrader max growth ratio
  double phi2 = 0.0;    // methanogen max growth ratio
  double K_P = 0.0;     // hydrogen half-saturation of the chlorophenol degrader
  double K_I = 0.0;     // hydrogen inhibition constant

  double k_A = 0.0;  // decay rates; zero for the reduced analysis
  double k_B = 0.0;
  double k_C = 0.0;

  // Throws InvalidParameter when an invariant fails.
  void validate() const;
};

/// Dimensional parameters prior to scaling.
struct UnscaledParams {
  double D = 0.0;  // dilution rate, 1/time
  double S_ch_in = 0.0, S_ph_in = 0.0, S_H2_in = 0.0;
  double k_m_ch = 0.0, k_m_ph = 0.0, k_m_H2 = 0.0;
  double K_S_ch = 0.0, K_S_ph = 0.0, K_S_H2 = 0.0, K_S_H2_c = 0.0;
  double Y_ch = 0.0, Y_ph = 0.0, Y_H2 = 0.0;  // yields in (0,1)
  double K_I_H2 = 0.0;
  double k_dec_ch = 0.0, k_dec_ph = 0.0, k_dec_H2 = 0.0;

  void validate() const;
};

/// Nondimensionalisation. Throws InvalidParameter on non-finite results.
ModelParams scale_parameters(const UnscaledParams& u);

/// Canonical dimensional parameter set whose scaling reproduces the standard
/// kinetic constants (omega0=0.1854..., phi2=3.8113..., etc).
UnscaledParams canonical_unscaled();

/// Flat "name = value" text format, '#' comments.
ModelParams load_params(std::istream& in);
ModelParams load_params_file(const std::string& path);
void save_params(std::ostream& out, const ModelParams& p);

/// Built-in presets: table1, fig1, fig2, fig4, fig6, perst1, perst2.
bool is_preset(const std::string& name);
ModelParams preset(const std::string& name);

/// Resolves either a preset name or a parameter file path.
ModelParams params_from_spec(const std::string& file_or_preset);

/// Serialises to the flat text format (for reproducibility headers).
std::string params_to_string(const ModelParams& p);

}  // namespace chemoweb

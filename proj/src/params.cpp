#include "chemoweb/params.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chemoweb {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void ModelParams::validate() const {
  if (!finite_nonneg(alpha) || !finite_nonneg(u_f) || !finite_nonneg(u_g) || !finite_nonneg(u_h))
    throw InvalidParameter("alpha and inflows must be finite and non-negative");
  if (!finite_pos(omega0) || !finite_pos(omega1) || !finite_pos(omega2))
    throw InvalidParameter("omega0, omega1, omega2 must be positive");
  if (!finite_pos(phi1) || !finite_pos(phi2))
    throw InvalidParameter("phi1 and phi2 must be positive");
  if (!finite_pos(K_P) || !finite_pos(K_I))
    throw InvalidParameter("K_P and K_I must be positive");
  if (!finite_nonneg(k_A) || !finite_nonneg(k_B) || !finite_nonneg(k_C))
    throw InvalidParameter("decay rates must be finite and non-negative");
}

void UnscaledParams::validate() const {
  const double pos[] = {D,      S_ch_in, S_ph_in, S_H2_in, k_m_ch, k_m_ph,
                        k_m_H2, K_S_ch,  K_S_ph,  K_S_H2,  K_S_H2_c, K_I_H2};
  for (double v : pos)
    if (!std::isfinite(v)) throw InvalidParameter("unscaled parameter not finite");
  if (!finite_pos(k_m_ch) || !finite_pos(k_m_ph) || !finite_pos(k_m_H2))
    throw InvalidParameter("maximum growth rates must be positive");
  if (!finite_pos(K_S_ch) || !finite_pos(K_S_ph) || !finite_pos(K_S_H2) || !finite_pos(K_S_H2_c))
    throw InvalidParameter("half-saturations must be positive");
  if (!finite_pos(K_I_H2)) throw InvalidParameter("K_I_H2 must be positive");
  if (!(Y_ch > 0 && Y_ch < 1) || !(Y_ph > 0 && Y_ph < 1) || !(Y_H2 > 0 && Y_H2 < 1))
    throw InvalidParameter("yields must lie in (0,1)");
  if (!finite_nonneg(D) || !finite_nonneg(S_ch_in) || !finite_nonneg(S_ph_in) || !finite_nonneg(S_H2_in))
    throw InvalidParameter("dilution and inflows must be non-negative");
  if (!finite_nonneg(k_dec_ch) || !finite_nonneg(k_dec_ph) || !finite_nonneg(k_dec_H2))
    throw InvalidParameter("decay rates must be non-negative");
}

ModelParams scale_parameters(const UnscaledParams& u) {
  u.validate();
  const double base = u.k_m_ch * u.Y_ch;
  ModelParams p;
  p.alpha = u.D / base;
  p.u_f = u.S_ch_in / u.K_S_ch;
  p.u_g = u.S_ph_in / u.K_S_ph;
  p.u_h = u.S_H2_in / u.K_S_H2;
  p.omega0 = (u.K_S_ch / u.K_S_ph) * (224.0 / 208.0) * (1.0 - u.Y_ch);
  p.omega1 = (u.K_S_ph / u.K_S_H2) * (32.0 / 224.0) * (1.0 - u.Y_ph);
  p.omega2 = (16.0 / 208.0) * (u.K_S_ch / u.K_S_H2);
  p.phi1 = u.k_m_ph * u.Y_ph / base;
  p.phi2 = u.k_m_H2 * u.Y_H2 / base;
  p.K_P = u.K_S_H2_c / u.K_S_H2;
  p.K_I = u.K_S_H2 / u.K_I_H2;
  p.k_A = u.k_dec_ch / base;
  p.k_B = u.k_dec_ph / base;
  p.k_C = u.k_dec_H2 / base;
  const double all[] = {p.alpha, p.u_f, p.u_g, p.u_h, p.omega0, p.omega1, p.omega2,
                        p.phi1,  p.phi2, p.K_P, p.K_I, p.k_A,   p.k_B,    p.k_C};
  for (double v : all)
    if (!std::isfinite(v)) throw InvalidParameter("scaling produced a non-finite value");
  p.validate();
  return p;
}

UnscaledParams canonical_unscaled() {
  UnscaledParams u;
  u.D = 0.00551;  // alpha = 0.01 under the canonical kinetics
  u.S_ch_in = 0.0265;
  u.S_ph_in = 0.0;
  u.S_H2_in = 0.0;
  u.k_m_ch = 29.0;
  u.k_m_ph = 26.0;
  u.k_m_H2 = 35.0;
  u.K_S_ch = 0.053;
  u.K_S_ph = 0.302;
  u.K_S_H2 = 2.5e-5;
  u.K_S_H2_c = 1.0e-6;
  u.Y_ch = 0.019;
  u.Y_ph = 0.04;
  u.Y_H2 = 0.06;
  u.K_I_H2 = 3.5e-6;
  u.k_dec_ch = u.k_dec_ph = u.k_dec_H2 = 0.0;
  return u;
}

namespace {

ModelParams base_table1() {
  ModelParams p = scale_parameters(canonical_unscaled());
  p.alpha = 0.01;
  p.u_f = p.u_g = p.u_h = 0.0;
  p.k_A = p.k_B = p.k_C = 0.0;
  return p;
}

void set_field(ModelParams& p, const std::string& key, double v, const std::string& where) {
  if (key == "alpha") p.alpha = v;
  else if (key == "u_f") p.u_f = v;
  else if (key == "u_g") p.u_g = v;
  else if (key == "u_h") p.u_h = v;
  else if (key == "omega0") p.omega0 = v;
  else if (key == "omega1") p.omega1 = v;
  else if (key == "omega2") p.omega2 = v;
  else if (key == "phi1") p.phi1 = v;
  else if (key == "phi2") p.phi2 = v;
  else if (key == "K_P") p.K_P = v;
  else if (key == "K_I") p.K_I = v;
  else if (key == "k_A") p.k_A = v;
  else if (key == "k_B") p.k_B = v;
  else if (key == "k_C") p.k_C = v;
  else throw InvalidParameter("unknown parameter '" + key + "' " + where);
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ModelParams load_params(std::istream& in) {
  ModelParams p = base_table1();  // file entries override the defaults
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidParameter("line " + std::to_string(lineno) + ": expected 'name = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw InvalidParameter("line " + std::to_string(lineno) + ": bad numeric value '" + val + "'");
    }
    if (used != val.size())
      throw InvalidParameter("line " + std::to_string(lineno) + ": trailing junk in value '" + val + "'");
    set_field(p, key, v, "(line " + std::to_string(lineno) + ")");
  }
  p.validate();
  return p;
}

ModelParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open parameter file: " + path);
  return load_params(in);
}

void save_params(std::ostream& out, const ModelParams& p) {
  out << params_to_string(p);
}

std::string params_to_string(const ModelParams& p) {
  char buf[4096];
  std::snprintf(buf, sizeof buf,
                "alpha = %.17g\nu_f = %.17g\nu_g = %.17g\nu_h = %.17g\n"
                "omega0 = %.17g\nomega1 = %.17g\nomega2 = %.17g\n"
                "phi1 = %.17g\nphi2 = %.17g\nK_P = %.17g\nK_I = %.17g\n"
                "k_A = %.17g\nk_B = %.17g\nk_C = %.17g\n",
                p.alpha, p.u_f, p.u_g, p.u_h, p.omega0, p.omega1, p.omega2, p.phi1, p.phi2,
                p.K_P, p.K_I, p.k_A, p.k_B, p.k_C);
  return buf;
}

bool is_preset(const std::string& name) {
  return name == "table1" || name == "fig1" || name == "fig2" || name == "fig4" ||
         name == "fig6" || name == "perst1" || name == "perst2";
}

ModelParams preset(const std::string& name) {
  ModelParams p = base_table1();
  if (name == "table1") {
    // kinetic constants only; alpha = 0.01, zero inflows
  } else if (name == "fig1") {
    p.alpha = 0.01; p.u_f = 0.5; p.u_g = 0.0006; p.u_h = 0.05;
  } else if (name == "fig2") {
    p.alpha = 0.01; p.u_f = 0.5; p.u_g = 0.0006; p.u_h = 0.3;
  } else if (name == "fig4") {
    p.alpha = 0.01; p.u_f = 2.0; p.u_g = 0.0; p.u_h = 0.0;
  } else if (name == "fig6") {
    p.alpha = 0.01; p.u_f = 1.0; p.u_g = 0.0; p.u_h = 0.1;
  } else if (name == "perst1") {
    p.alpha = 0.0002; p.u_f = 0.6; p.u_g = 0.0; p.u_h = 0.1;
  } else if (name == "perst2") {
    p.alpha = 0.0002; p.u_f = 0.6; p.u_g = 0.00015; p.u_h = 0.1;
  } else {
    throw InvalidParameter("unknown preset: " + name);
  }
  p.validate();
  return p;
}

ModelParams params_from_spec(const std::string& file_or_preset) {
  if (is_preset(file_or_preset)) return preset(file_or_preset);
  return load_params_file(file_or_preset);
}

}  // namespace chemoweb

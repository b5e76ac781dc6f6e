#pragma once

#include <utility>

namespace multispace::cosmology {

enum class KasnerBranch { plus, minus };

// Power-law exponents (mu for the three large axes, nu for the m extra axes)
// satisfying the vacuum constraints 3 mu + m nu = 1 and 3 mu^2 + m nu^2 = 1.
struct KasnerSolution {
  int m = 0;
  KasnerBranch branch = KasnerBranch::plus;
  double mu = 0.0;
  double nu = 0.0;
};

// Scale factor with its first two time derivatives at one instant.
struct ScaleFactorProbe {
  double a = 0.0;
  double da_dt = 0.0;
  double d2a_dt2 = 0.0;
};

// Parameters of the hyperbolic-compactification cosmology with m extra
// dimensions: coupling lambda0, curvature radius r_c, time shift t1, and the
// derived constant zeta = sqrt(3 + 6/m). Construct via make_tw_cosmology so
// zeta is always consistent. The state functions are valid for
// t + t1 in (0, pi / (lambda0 * zeta)) (one branch of the sine).
struct TWCosmology {
  int m = 2;
  double lambda0 = 1.0;
  double r_c = 1.0;
  double t1 = 0.0;
  double zeta = 0.0;
};

TWCosmology make_tw_cosmology(int m, double lambda0, double r_c, double t1);

// Closed-form state at one time: K(t) = lambda0 zeta r_c / ((m-1) sin(lambda0
// zeta (t+t1))), phi = (ln K - 3 lambda0 t)/(m-1), S = positive root of
// S^2 = K^{m/(m-1)} exp(-((m+2)/(m-1)) lambda0 t).
struct TWState {
  double t = 0.0;
  double K = 0.0;
  double phi = 0.0;
  double S = 0.0;
};

// Maximal interval where the proper-time expansion rate dS/d(sigma) and its
// proper-time derivative are both positive, with the ratio of scale factors
// across it.
struct AccelerationWindow {
  double t_enter = 0.0;
  double t_exit = 0.0;
  double expansion_factor = 1.0;
};

// Exponents mu = (3 +/- sqrt(3m(m+2)))/(3(m+3)) and nu = (m -/+
// sqrt(3m(m+2)))/(m(m+3)); the nu form is the one forced by the two vacuum
// constraints (both hold to 1e-12 for every m). Requires m >= 1.
KasnerSolution kasner_exponents(int m, KasnerBranch branch);

// a = t^mu with closed-form derivatives. Requires t > 0.
ScaleFactorProbe kasner_acceleration_check(double mu, double t);

// Time-shifted profile a = (t_inf - t)^mu with closed-form derivatives; with
// mu < 0 both derivatives are positive (accelerating expansion). Requires
// t < t_inf.
ScaleFactorProbe time_shift_scale(double mu, double t_inf, double t);

// Open validity interval (lo, hi) in t for the state functions of cfg.
std::pair<double, double> tw_domain(const TWCosmology& cfg);

// Evaluates the closed forms at t. Throws std::domain_error outside the valid
// sine branch.
TWState tw_state(const TWCosmology& cfg, double t);

// Proper time across coordinate times [t0, t1]: integral of S^3 dt by
// adaptive quadrature (relative tolerance 1e-8, subdivision cap 2^20).
// Requires t0 <= t1, both strictly inside the valid domain.
double proper_time(const TWCosmology& cfg, double t0, double t1);

// Scans scan_resolution grid points of the valid domain for the maximal
// interval where both dS/d(sigma) and d^2S/d(sigma)^2 are positive
// (derivatives of S by central differences with step 1e-6 * domain width on
// the closed form), refines the endpoints by bisection to 1e-8 in t, and
// reports expansion_factor = S(t_exit)/S(t_enter). Requires scan_resolution
// >= 1000; throws std::runtime_error when no accelerating interval is found.
AccelerationWindow tw_acceleration_window(const TWCosmology& cfg, long scan_resolution);

}  // namespace multispace::cosmology

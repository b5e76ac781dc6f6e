#include "multispace/cosmology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "multispace/quadrature.hpp"

namespace multispace::cosmology {
namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

KasnerSolution kasner_exponents(int m, KasnerBranch branch) {
  require(m >= 1, "kasner_exponents: m must be >= 1");
  const double md = static_cast<double>(m);
  const double s = std::sqrt(3.0 * md * (md + 2.0));
  KasnerSolution sol;
  sol.m = m;
  sol.branch = branch;
  if (branch == KasnerBranch::plus) {
    sol.mu = (3.0 + s) / (3.0 * (md + 3.0));
    sol.nu = (md - s) / (md * (md + 3.0));
  } else {
    sol.mu = (3.0 - s) / (3.0 * (md + 3.0));
    sol.nu = (md + s) / (md * (md + 3.0));
  }
  return sol;
}

ScaleFactorProbe kasner_acceleration_check(double mu, double t) {
  if (!(t > 0.0)) {
    throw std::domain_error("kasner_acceleration_check: t must be positive");
  }
  return ScaleFactorProbe{std::pow(t, mu), mu * std::pow(t, mu - 1.0),
                          mu * (mu - 1.0) * std::pow(t, mu - 2.0)};
}

ScaleFactorProbe time_shift_scale(double mu, double t_inf, double t) {
  if (!(t < t_inf)) {
    throw std::domain_error("time_shift_scale: t must be below t_inf");
  }
  const double tau = t_inf - t;
  return ScaleFactorProbe{std::pow(tau, mu), -mu * std::pow(tau, mu - 1.0),
                          mu * (mu - 1.0) * std::pow(tau, mu - 2.0)};
}

TWCosmology make_tw_cosmology(int m, double lambda0, double r_c, double t1) {
  require(m >= 2, "make_tw_cosmology: m must be >= 2");
  require(lambda0 > 0.0, "make_tw_cosmology: lambda0 must be positive");
  require(r_c > 0.0, "make_tw_cosmology: r_c must be positive");
  TWCosmology cfg;
  cfg.m = m;
  cfg.lambda0 = lambda0;
  cfg.r_c = r_c;
  cfg.t1 = t1;
  cfg.zeta = std::sqrt(3.0 + 6.0 / static_cast<double>(m));
  return cfg;
}

std::pair<double, double> tw_domain(const TWCosmology& cfg) {
  require(cfg.m >= 2 && cfg.lambda0 > 0.0 && cfg.r_c > 0.0 && cfg.zeta > 0.0,
          "tw_domain: malformed cosmology parameters");
  const double width = std::numbers::pi / (cfg.lambda0 * cfg.zeta);
  return {-cfg.t1, width - cfg.t1};
}

TWState tw_state(const TWCosmology& cfg, double t) {
  const auto [lo, hi] = tw_domain(cfg);
  if (!(t > lo && t < hi)) {
    throw std::domain_error("tw_state: t is outside the valid sine branch");
  }
  const double md = static_cast<double>(cfg.m);
  const double arg = cfg.lambda0 * cfg.zeta * (t + cfg.t1);
  const double K = cfg.lambda0 * cfg.zeta * cfg.r_c / ((md - 1.0) * std::sin(arg));
  const double ln_K = std::log(K);
  const double phi = (ln_K - 3.0 * cfg.lambda0 * t) / (md - 1.0);
  // S computed in log space: S^2 = K^{m/(m-1)} exp(-((m+2)/(m-1)) lambda0 t),
  // positive by construction.
  const double ln_S_sq =
      md / (md - 1.0) * ln_K - (md + 2.0) / (md - 1.0) * cfg.lambda0 * t;
  const double S = std::exp(0.5 * ln_S_sq);
  return TWState{t, K, phi, S};
}

double proper_time(const TWCosmology& cfg, double t0, double t1) {
  const auto [lo, hi] = tw_domain(cfg);
  require(t0 <= t1, "proper_time: t0 must not exceed t1");
  if (!(t0 > lo && t1 < hi)) {
    throw std::domain_error("proper_time: [t0, t1] leaves the valid domain");
  }
  const auto integrand = [&cfg](double t) {
    const TWState st = tw_state(cfg, t);
    return st.S * st.S * st.S;
  };
  return adaptive_simpson(integrand, t0, t1, 1e-8, std::size_t{1} << 20);
}

AccelerationWindow tw_acceleration_window(const TWCosmology& cfg, long scan_resolution) {
  require(scan_resolution >= 1000, "tw_acceleration_window: scan_resolution must be >= 1000");
  const auto [lo, hi] = tw_domain(cfg);
  const double width = hi - lo;
  const double h = 1e-6 * width;

  const auto S_at = [&cfg](double t) { return tw_state(cfg, t).S; };
  // Expansion rate against proper time: dS/d(sigma) = S'(t) / S^3.
  const auto rate = [&](double t) {
    const double s = S_at(t);
    return (S_at(t + h) - S_at(t - h)) / (2.0 * h) / (s * s * s);
  };
  // Proper-time acceleration: d/d(sigma) of the rate = rate'(t) / S^3.
  const auto accel = [&](double t) {
    const double s = S_at(t);
    return (rate(t + h) - rate(t - h)) / (2.0 * h) / (s * s * s);
  };
  // Both conditions; evaluation points need a 2h margin inside the domain.
  const auto both_positive = [&](double t) { return rate(t) > 0.0 && accel(t) > 0.0; };

  const double margin = 3.0 * h;
  const double a = lo + margin;
  const double b = hi - margin;
  const long n = scan_resolution;
  std::vector<bool> ok(static_cast<std::size_t>(n));
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    const double t = a + (b - a) * static_cast<double>(j) / static_cast<double>(n - 1);
    grid[static_cast<std::size_t>(j)] = t;
    ok[static_cast<std::size_t>(j)] = both_positive(t);
  }

  // Longest run of consecutive grid points where both conditions hold.
  long best_start = -1, best_len = 0;
  long run_start = -1;
  for (long j = 0; j <= n; ++j) {
    const bool v = (j < n) && ok[static_cast<std::size_t>(j)];
    if (v && run_start < 0) run_start = j;
    if (!v && run_start >= 0) {
      const long len = j - run_start;
      if (len > best_len) {
        best_len = len;
        best_start = run_start;
      }
      run_start = -1;
    }
  }
  if (best_len == 0) {
    throw std::runtime_error(
        "tw_acceleration_window: no accelerating interval found at this resolution");
  }
  const long first = best_start;
  const long last = best_start + best_len - 1;

  // Bisection on the boolean predicate to 1e-8 in t at each end. When the run
  // touches the scanned range's edge the edge itself is the best estimate.
  const auto bisect = [&](double f, double tr) {
    // invariant: predicate false at f, true at tr (or vice versa; only the
    // change matters)
    double lo_t = f, hi_t = tr;
    const bool at_lo = both_positive(lo_t);
    while (hi_t - lo_t > 1e-8) {
      const double mid = 0.5 * (lo_t + hi_t);
      if (both_positive(mid) == at_lo) {
        lo_t = mid;
      } else {
        hi_t = mid;
      }
    }
    return 0.5 * (lo_t + hi_t);
  };

  double t_enter = grid[static_cast<std::size_t>(first)];
  if (first > 0) t_enter = bisect(grid[static_cast<std::size_t>(first - 1)], t_enter);
  double t_exit = grid[static_cast<std::size_t>(last)];
  if (last + 1 < n) t_exit = bisect(t_exit, grid[static_cast<std::size_t>(last + 1)]);

  return AccelerationWindow{t_enter, t_exit, S_at(t_exit) / S_at(t_enter)};
}

}  // namespace multispace::cosmology

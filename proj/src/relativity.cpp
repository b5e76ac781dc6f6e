#include "multispace/relativity.hpp"

#include <cmath>
#include <stdexcept>

namespace multispace::relativity {
namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void validate_boost(const BoostParams& b) {
  require(b.c > 0.0, "boost: light speed c must be positive");
  require(std::fabs(b.v) < b.c, "boost: |v| must be below the light speed");
}

}  // namespace

const char* to_string(CosmosClass c) {
  switch (c) {
    case CosmosClass::Static: return "Static";
    case CosmosClass::Contracting: return "Contracting";
    case CosmosClass::Expanding: return "Expanding";
  }
  return "Unknown";
}

IntervalAbsolute interval_absolute(const AbsoluteEvent& a1, const AbsoluteEvent& a2) {
  double d_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = a1.x[i] - a2.x[i];
    d_sq += d * d;
  }
  return IntervalAbsolute{a1.t - a2.t, std::sqrt(d_sq)};
}

double spacetime_interval_sq(const RelativeEvent& b1, const RelativeEvent& b2, double c) {
  require(c > 0.0, "spacetime_interval_sq: light speed c must be positive");
  const double dt = b1.t - b2.t;
  double d_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = b1.x[i] - b2.x[i];
    d_sq += d * d;
  }
  return -c * c * dt * dt + d_sq;
}

RelativeEvent lorentz_boost(const RelativeEvent& e, const BoostParams& b) {
  validate_boost(b);
  const double beta = b.v / b.c;
  const double inv_gamma = std::sqrt(1.0 - beta * beta);
  RelativeEvent out = e;
  // With v = 0 these expressions reduce to x/1 and t/1 exactly (the
  // subtracted terms are +/-0.0), so the identity boost has no rounding.
  out.x[0] = (e.x[0] - b.v * e.t) / inv_gamma;
  out.t = (e.t - (b.v / (b.c * b.c)) * e.x[0]) / inv_gamma;
  return out;
}

std::array<double, 3> velocity_transform(const std::array<double, 3>& u,
                                         const BoostParams& b) {
  validate_boost(b);
  const double beta = b.v / b.c;
  const double denom = 1.0 - b.v * u[0] / (b.c * b.c);
  if (denom == 0.0) {
    throw std::domain_error("velocity_transform: composition denominator vanished");
  }
  const double inv_gamma = std::sqrt(1.0 - beta * beta);
  return {(u[0] - b.v) / denom, u[1] * inv_gamma / denom, u[2] * inv_gamma / denom};
}

double general_interval_sq(const MetricForm& m, const std::vector<double>& x,
                           const std::vector<double>& dx) {
  require(m.dimension >= 1, "general_interval_sq: dimension must be positive");
  require(static_cast<bool>(m.g), "general_interval_sq: metric callable is absent");
  const std::size_t d = static_cast<std::size_t>(m.dimension);
  require(x.size() == d && dx.size() == d,
          "general_interval_sq: coordinate/displacement dimension mismatch");
  const std::vector<double> g = m.g(x);
  require(g.size() == d * d, "general_interval_sq: metric matrix has the wrong size");

  double scale = 0.0;
  for (double v : g) scale = std::fmax(scale, std::fabs(v));
  const double tol = 1e-12 * std::fmax(1.0, scale);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (std::fabs(g[i * d + j] - g[j * d + i]) > tol) {
        throw std::invalid_argument("general_interval_sq: metric matrix is not symmetric");
      }
    }
  }

  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += g[i * d + j] * dx[j];
    s += dx[i] * row;
  }
  return s;
}

double friedmann_interval_sq(const FriedmannParams& p, const std::array<double, 4>& coords,
                             const std::array<double, 4>& d) {
  require(p.c > 0.0, "friedmann_interval_sq: light speed c must be positive");
  require(static_cast<bool>(p.a), "friedmann_interval_sq: scale factor callable is absent");
  const double t = coords[0], r = coords[1], theta = coords[2];
  const double curved = 1.0 - p.K * r * r;
  if (!(curved > 0.0)) {
    throw std::domain_error("friedmann_interval_sq: 1 - K r^2 must stay positive");
  }
  const double a = p.a(t);
  if (!std::isfinite(a) || a <= 0.0) {
    throw std::domain_error("friedmann_interval_sq: scale factor must be finite and positive");
  }
  const double sin_theta = std::sin(theta);
  const double a_sq = a * a;
  return -p.c * p.c * d[0] * d[0] +
         a_sq * (d[1] * d[1] / curved +
                 r * r * (d[2] * d[2] + sin_theta * sin_theta * d[3] * d[3]));
}

MetricForm friedmann_metric(const FriedmannParams& p) {
  require(p.c > 0.0, "friedmann_metric: light speed c must be positive");
  require(static_cast<bool>(p.a), "friedmann_metric: scale factor callable is absent");
  MetricForm m;
  m.dimension = 4;
  m.g = [p](const std::vector<double>& x) {
    const double t = x[0], r = x[1], theta = x[2];
    const double curved = 1.0 - p.K * r * r;
    if (!(curved > 0.0)) {
      throw std::domain_error("friedmann_metric: 1 - K r^2 must stay positive");
    }
    const double a = p.a(t);
    if (!std::isfinite(a) || a <= 0.0) {
      throw std::domain_error("friedmann_metric: scale factor must be finite and positive");
    }
    const double a_sq = a * a;
    const double sin_theta = std::sin(theta);
    std::vector<double> g(16, 0.0);
    g[0] = -p.c * p.c;
    g[5] = a_sq / curved;
    g[10] = a_sq * r * r;
    g[15] = a_sq * r * r * sin_theta * sin_theta;
    return g;
  };
  return m;
}

CosmosClass classify_cosmos(const std::function<double(double)>& a, double t, double h,
                            double zero_band) {
  require(static_cast<bool>(a), "classify_cosmos: scale factor callable is absent");
  require(h > 0.0, "classify_cosmos: step h must be positive");
  require(zero_band >= 0.0, "classify_cosmos: zero_band must be nonnegative");
  const double forward = a(t + h);
  const double backward = a(t - h);
  if (!std::isfinite(forward) || !std::isfinite(backward)) {
    throw std::domain_error("classify_cosmos: scale factor returned a non-finite value");
  }
  const double slope = (forward - backward) / (2.0 * h);
  if (std::fabs(slope) <= zero_band) return CosmosClass::Static;
  return slope > 0.0 ? CosmosClass::Expanding : CosmosClass::Contracting;
}

CosmosClass classify_cosmos(const std::function<double(double)>& a, double t) {
  const double h = 1e-5 * std::fmax(1.0, std::fabs(t));
  return classify_cosmos(a, t, h, 1e-7);
}

std::vector<double> anti_vector(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace multispace::relativity

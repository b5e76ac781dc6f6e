#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace multispace::relativity {

// Event in the absolute picture: spatial position with time as an independent
// parameter.
struct AbsoluteEvent {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  double t = 0.0;
};

// Event in the relative picture: time is a coordinate on the same footing as
// space.
struct RelativeEvent {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  double t = 0.0;
};

// Boost along the x-axis with velocity v in a universe with light speed c.
struct BoostParams {
  double v = 0.0;
  double c = 1.0;
};

// General quadratic-form metric: g maps a coordinate d-vector to a symmetric
// d x d matrix in row-major order.
struct MetricForm {
  int dimension = 0;
  std::function<std::vector<double>(const std::vector<double>&)> g;
};

// Homogeneous-isotropic line-element parameters: curvature sign K, scale
// factor a(t), light speed c.
struct FriedmannParams {
  double K = 0.0;
  std::function<double(double)> a;
  double c = 1.0;
};

enum class CosmosClass { Static, Contracting, Expanding };

const char* to_string(CosmosClass c);

// Signed time interval t1 - t2 and the Euclidean space interval.
struct IntervalAbsolute {
  double dt = 0.0;
  double distance = 0.0;
};

IntervalAbsolute interval_absolute(const AbsoluteEvent& a1, const AbsoluteEvent& a2);

// Squared spacetime interval -c^2 (t1-t2)^2 + ||x1-x2||^2 (signature -+++).
double spacetime_interval_sq(const RelativeEvent& b1, const RelativeEvent& b2, double c);

// Boost along x: x' = (x - v t) / sqrt(1-(v/c)^2), t' = (t - v x / c^2) /
// sqrt(1-(v/c)^2), y and z unchanged. v = 0 is the exact identity. Requires
// |v| < c.
RelativeEvent lorentz_boost(const RelativeEvent& e, const BoostParams& b);

// Relativistic velocity composition for a boost along x:
// u'_x = (u_x - v)/(1 - v u_x / c^2), u'_{y,z} = u_{y,z} sqrt(1-(v/c)^2) /
// (1 - v u_x / c^2). Throws when the denominator vanishes.
std::array<double, 3> velocity_transform(const std::array<double, 3>& u, const BoostParams& b);

// Quadratic form dx^T g(x) dx. The returned matrix must be symmetric within
// 1e-12 componentwise (relative to the largest entry), else
// std::invalid_argument.
double general_interval_sq(const MetricForm& m, const std::vector<double>& x,
                           const std::vector<double>& dx);

// Line element ds^2 = -c^2 dt^2 + a(t)^2 [ dr^2/(1-K r^2) + r^2 (dtheta^2 +
// sin^2(theta) dphi^2) ] evaluated on coords (t, r, theta, phi) and
// displacements d. Requires 1 - K r^2 > 0 (std::domain_error otherwise).
double friedmann_interval_sq(const FriedmannParams& p, const std::array<double, 4>& coords,
                             const std::array<double, 4>& d);

// The same line element packaged as a MetricForm over (t, r, theta, phi), for
// cross-checking against general_interval_sq.
MetricForm friedmann_metric(const FriedmannParams& p);

// Classifies the cosmos at time t by a central-difference estimate of da/dt
// with step h: Static when |estimate| <= zero_band, otherwise the sign
// decides. Throws std::domain_error on non-finite scale-factor values.
CosmosClass classify_cosmos(const std::function<double(double)>& a, double t, double h,
                            double zero_band);

// Same with the default step h = 1e-5 * max(1, |t|) and zero_band = 1e-7.
CosmosClass classify_cosmos(const std::function<double(double)>& a, double t);

// Componentwise negation; v + anti_vector(v) is exactly zero.
std::vector<double> anti_vector(const std::vector<double>& v);

}  // namespace multispace::relativity

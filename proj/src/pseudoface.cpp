#include "multispace/pseudoface.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace multispace::pseudoface {
namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double sq_distance(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace

Vec evaluate_pseudo_face(const PseudoFaceMap& map, const Vec& point) {
  require(map.source_dim >= 1 && map.target_dim >= 1,
          "evaluate_pseudo_face: dimensions must be positive");
  require(static_cast<int>(point.size()) == map.source_dim,
          "evaluate_pseudo_face: point length differs from source_dim");
  require(static_cast<bool>(map.p) && static_cast<bool>(map.omega),
          "evaluate_pseudo_face: map requires both p and omega callables");
  Vec image = map.p(point);
  require(static_cast<int>(image.size()) == map.target_dim,
          "evaluate_pseudo_face: p produced a vector of the wrong dimension");
  Vec deformed = map.omega(image);
  require(static_cast<int>(deformed.size()) == map.target_dim,
          "evaluate_pseudo_face: omega produced a vector of the wrong dimension");
  return deformed;
}

ContinuityReport check_uniform_continuity(const PseudoFaceMap& map, const DomainBox& box,
                                          double epsilon) {
  require(epsilon > 0.0, "check_uniform_continuity: epsilon must be positive");
  const int m = map.source_dim;
  require(m >= 1, "check_uniform_continuity: source_dim must be positive");
  require(static_cast<int>(box.lower.size()) == m && static_cast<int>(box.upper.size()) == m,
          "check_uniform_continuity: box dimension differs from source_dim");
  require(box.grid_resolution >= 2, "check_uniform_continuity: grid_resolution must be >= 2");
  for (int i = 0; i < m; ++i) {
    require(box.lower[i] < box.upper[i],
            "check_uniform_continuity: box lower bound must be below upper bound");
  }

  // Total sample count res^m, guarded so the pair scan stays tractable.
  const std::uint64_t res = static_cast<std::uint64_t>(box.grid_resolution);
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > 20000u / res + 1u) {
      total = 20001;
      break;
    }
    total *= res;
  }
  require(total <= 20000, "check_uniform_continuity: grid exceeds the 20000-sample budget");
  const std::size_t n_samples = static_cast<std::size_t>(total);

  // Lay the grid (odometer order: last axis fastest) and evaluate all images.
  std::vector<Vec> points(n_samples, Vec(m));
  std::vector<Vec> images;
  images.reserve(n_samples);
  std::vector<double> step(m);
  for (int i = 0; i < m; ++i) {
    step[i] = (box.upper[i] - box.lower[i]) / static_cast<double>(box.grid_resolution - 1);
  }
  std::vector<std::uint64_t> idx(m, 0);
  for (std::size_t k = 0; k < n_samples; ++k) {
    for (int i = 0; i < m; ++i) {
      points[k][i] = box.lower[i] + step[i] * static_cast<double>(idx[i]);
    }
    for (int i = m - 1; i >= 0; --i) {
      if (++idx[i] < res) break;
      idx[i] = 0;
    }
    Vec img = evaluate_pseudo_face(map, points[k]);
    for (double c : img) {
      if (!std::isfinite(c)) {
        throw std::domain_error(
            "check_uniform_continuity: map produced a non-finite value inside the box");
      }
    }
    images.push_back(std::move(img));
  }

  // Closest violating pair: the smallest ||u - v|| whose images are >= epsilon
  // apart. Deterministic i < j traversal with strict improvement keeps the
  // reported pair stable across runs.
  const double eps_sq = epsilon * epsilon;
  double best_sq = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0, best_j = 0;
  double best_gap = 0.0;
  bool found = false;
  for (std::size_t i = 0; i + 1 < n_samples; ++i) {
    for (std::size_t j = i + 1; j < n_samples; ++j) {
      const double d_sq = sq_distance(points[i], points[j]);
      if (d_sq >= best_sq) continue;
      const double gap_sq = sq_distance(images[i], images[j]);
      if (gap_sq >= eps_sq) {
        best_sq = d_sq;
        best_i = i;
        best_j = j;
        best_gap = std::sqrt(gap_sq);
        found = true;
      }
    }
  }

  double h_diag_sq = 0.0;
  double diam_sq = 0.0;
  for (int i = 0; i < m; ++i) {
    h_diag_sq += step[i] * step[i];
    diam_sq += (box.upper[i] - box.lower[i]) * (box.upper[i] - box.lower[i]);
  }

  ContinuityReport report;
  report.epsilon = epsilon;
  report.grid_resolution = box.grid_resolution;
  if (!found) {
    // No sampled pair reaches an epsilon image gap anywhere in the box.
    report.passed = true;
    report.delta_estimate = std::sqrt(diam_sq);
  } else if (best_sq > h_diag_sq) {
    // The closest violating pair is farther apart than one grid-cell
    // diagonal: any delta below that distance is consistent with all samples.
    report.passed = true;
    report.delta_estimate = std::sqrt(best_sq);
  } else {
    // Adjacent samples already violate: report the pair, and a delta that the
    // pair concretely refutes (their distance is strictly below it).
    report.passed = false;
    report.delta_estimate = 2.0 * std::sqrt(best_sq);
    report.counterexample =
        ContinuityCounterexample{points[best_i], points[best_j], best_gap};
  }
  return report;
}

bool section_is_right_inverse(const PseudoFaceMap& map, const std::vector<Vec>& samples,
                              double tol) {
  require(map.has_section(), "section_is_right_inverse: map has no section");
  require(tol >= 0.0, "section_is_right_inverse: tol must be nonnegative");
  for (const Vec& y : samples) {
    require(static_cast<int>(y.size()) == map.target_dim,
            "section_is_right_inverse: sample length differs from target_dim");
    Vec back = map.p(map.section(y));
    if (static_cast<int>(back.size()) != map.target_dim) return false;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!(std::fabs(back[i] - y[i]) <= tol)) return false;
    }
  }
  return true;
}

VecMap conjugate_transport(const VecMap& g, const PseudoFaceMap& map) {
  require(static_cast<bool>(g), "conjugate_transport: g must be callable");
  require(static_cast<bool>(map.p), "conjugate_transport: map requires p");
  require(map.has_section(), "conjugate_transport: map has no section");
  const VecMap p = map.p;
  const VecMap section = map.section;
  return [p, g, section](const Vec& y) { return p(g(section(y))); };
}

PseudoShapeSlice ball_pseudo_shape_scaled(double R, double t, double sigma) {
  require(R > 0.0, "ball_pseudo_shape_scaled: R must be positive");
  require(sigma > 0.0, "ball_pseudo_shape_scaled: sigma must be positive");
  if (std::fabs(t) > R) {
    throw std::domain_error("ball_pseudo_shape_scaled: |t| > R selects an empty slice");
  }
  if (t == 0.0) {
    throw std::domain_error("ball_pseudo_shape_scaled: t = 0 is the singular slice");
  }
  const double inner = std::fmax(R * R - t * t, 0.0);
  return PseudoShapeSlice{t, std::sqrt(inner) / (sigma * std::fabs(t))};
}

std::vector<PseudoShapeSlice> ball_profile_scaled(double R, double sigma, int sample_count,
                                                  bool paper_figure_mode) {
  require(R > 0.0, "ball_profile_scaled: R must be positive");
  require(sigma > 0.0, "ball_profile_scaled: sigma must be positive");
  require(sample_count >= 3, "ball_profile_scaled: sample_count must be >= 3");
  std::vector<PseudoShapeSlice> out;
  out.reserve(static_cast<std::size_t>(sample_count));
  for (int j = 0; j < sample_count; ++j) {
    const double t = -R + 2.0 * R * static_cast<double>(j) / (sample_count - 1);
    if (t == 0.0) continue;  // singular slice of the general closed form
    if (paper_figure_mode) {
      out.push_back(ball_pseudo_shape_angle(R, t));
    } else {
      out.push_back(ball_pseudo_shape_scaled(R, t, sigma));
    }
  }
  return out;
}

PseudoShapeSlice ball_pseudo_shape_angle(double R, double t) {
  require(R > 0.0, "ball_pseudo_shape_angle: R must be positive");
  if (std::fabs(t) > R) {
    throw std::domain_error("ball_pseudo_shape_angle: |t| > R selects an empty slice");
  }
  const double inner = std::fmax(R * R - t * t, 0.0);
  return PseudoShapeSlice{t, std::sqrt(inner)};
}

double angle_field_sample(const Vec& point_with_time) {
  require(point_with_time.size() >= 2,
          "angle_field_sample: point needs at least one spatial and one time coordinate");
  const double t = point_with_time.back();
  double norm_sq = 0.0;
  bool spatial_zero = true;
  for (std::size_t i = 0; i + 1 < point_with_time.size(); ++i) {
    if (point_with_time[i] != 0.0) spatial_zero = false;
    norm_sq += point_with_time[i] * point_with_time[i];
  }
  norm_sq += t * t;
  if (norm_sq == 0.0) {
    throw std::invalid_argument("angle_field_sample: the zero vector has no direction");
  }
  if (spatial_zero) {
    // On the t-axis the doubled angle is exactly 0 (positive side) or 2*pi
    // (negative side); special-casing avoids rounding in t/||P||.
    return t > 0.0 ? 0.0 : 2.0 * std::numbers::pi;
  }
  double ratio = t / std::sqrt(norm_sq);
  ratio = std::fmin(1.0, std::fmax(-1.0, ratio));
  return 2.0 * std::acos(ratio);
}

std::array<double, 2> sphere_pseudo_plane(const std::array<double, 3>& point, double t) {
  const double norm =
      std::sqrt(point[0] * point[0] + point[1] * point[1] + point[2] * point[2]);
  if (std::fabs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("sphere_pseudo_plane: point is off the unit sphere");
  }
  return {point[2], t};
}

SubspaceChain subspace_chain(const Vec& anchor) {
  const int n = static_cast<int>(anchor.size());
  require(n >= 1, "subspace_chain: anchor must have dimension >= 1");
  SubspaceChain chain;
  chain.anchor = anchor;
  chain.links.reserve(static_cast<std::size_t>(n) + 1);
  for (int dim = n; dim >= 0; --dim) {
    SubspaceLink link;
    link.dimension = dim;
    for (int i = 0; i < dim; ++i) link.basis_indices.insert(i);
    chain.links.push_back(std::move(link));
  }
  return chain;
}

bool chain_contains(const SubspaceChain& chain, std::size_t link_index, const Vec& v,
                    double tol) {
  require(link_index < chain.links.size(), "chain_contains: link index out of range");
  require(v.size() == chain.anchor.size(),
          "chain_contains: vector dimension differs from the anchor");
  require(tol >= 0.0, "chain_contains: tol must be nonnegative");
  const SubspaceLink& link = chain.links[link_index];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (link.basis_indices.count(static_cast<int>(i)) != 0) continue;
    if (!(std::fabs(v[i] - chain.anchor[i]) <= tol)) return false;
  }
  return true;
}

}  // namespace multispace::pseudoface

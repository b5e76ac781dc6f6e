#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace multispace::pseudoface {

using Vec = std::vector<double>;
using VecMap = std::function<Vec(const Vec&)>;

// A continuous map p from an m-dimensional space into an n-dimensional
// pseudo-metric space, together with the deformation omega acting on the
// target and an optional right inverse of p (used to transport maps through
// the face). omega and p must be total on the domains they are queried on.
struct PseudoFaceMap {
  int source_dim = 0;  // m >= 1
  int target_dim = 0;  // n >= 1
  VecMap omega;        // deformation on the target space
  VecMap p;            // map from the source into the target space
  VecMap section;      // optional right inverse of p; empty when absent

  bool has_section() const { return static_cast<bool>(section); }
};

// Axis-aligned sampling region for the continuity certificate. The grid lays
// grid_resolution samples per axis, endpoints included.
struct DomainBox {
  Vec lower;
  Vec upper;
  int grid_resolution = 64;
};

struct ContinuityCounterexample {
  Vec u;
  Vec v;
  double image_distance = 0.0;
};

// Result of the empirical uniform-continuity certificate. `passed` means the
// grid found no pair closer than one grid-cell diagonal whose images are at
// least epsilon apart; delta_estimate is the certified (or refuted) delta.
// This is a certificate at the stated grid scale, not a proof.
struct ContinuityReport {
  bool passed = false;
  double epsilon = 0.0;
  double delta_estimate = 0.0;
  int grid_resolution = 0;
  std::optional<ContinuityCounterexample> counterexample;
};

// One slice of a ball's pseudo-shape: slice parameter t and the slice radius.
struct PseudoShapeSlice {
  double t = 0.0;
  double radius = 0.0;
};

// One link of a subspace chain: a formal subspace through the anchor spanned
// by the coordinate axes listed in basis_indices (0-based).
struct SubspaceLink {
  int dimension = 0;
  std::set<int> basis_indices;
};

// Chain of n+1 nested formal subspaces through `anchor`, with dimensions
// n, n-1, ..., 0; each link is spanned by a prefix of the coordinate basis.
struct SubspaceChain {
  Vec anchor;
  std::vector<SubspaceLink> links;
};

// Applies the deformed map omega(p(point)). Validates that `point` has length
// map.source_dim and that p/omega produce target_dim-vectors.
Vec evaluate_pseudo_face(const PseudoFaceMap& map, const Vec& point);

// Grid-searches sample pairs inside `box`. Let d_c be the smallest distance
// between two samples whose images under omega(p(.)) are at least epsilon
// apart (infinite when no such pair exists). The certificate passes when d_c
// exceeds one grid-cell diagonal, i.e. the modulus is resolvable at the grid
// scale; delta_estimate is then d_c (or the box diameter when no pair
// violates). On failure the minimal-distance violating pair is reported and
// delta_estimate = 2*d_c is a concretely refuted delta. Throws
// std::domain_error when omega(p(.)) is non-finite somewhere on the grid, and
// std::invalid_argument on malformed boxes or oversized grids.
ContinuityReport check_uniform_continuity(const PseudoFaceMap& map, const DomainBox& box,
                                          double epsilon);

// Returns true when p(section(y)) == y within `tol` for every y in `samples`.
bool section_is_right_inverse(const PseudoFaceMap& map, const std::vector<Vec>& samples,
                              double tol = 1e-9);

// Transports a self-map g of the source space through the face: returns the
// composite p o g o section acting on the target space. Requires a section.
VecMap conjugate_transport(const VecMap& g, const PseudoFaceMap& map);

// Slice radius sqrt(R^2 - t^2) / (sigma * |t|) of the scaled-deformation ball
// pseudo-shape. t == 0 is the singular slice and |t| > R the empty slice;
// both raise std::domain_error.
PseudoShapeSlice ball_pseudo_shape_scaled(double R, double t, double sigma);

// Uniform profile of slices for t spanning [-R, R] with the exact t == 0
// sample dropped (it is the singular slice). When paper_figure_mode is true
// the radius is sqrt(R^2 - t^2) (the figure's special-case statement);
// otherwise the general scaled closed form is used. sample_count >= 3.
std::vector<PseudoShapeSlice> ball_profile_scaled(double R, double sigma, int sample_count,
                                                  bool paper_figure_mode);

// Slice radius sqrt(R^2 - t^2) of the angle-deformation ball pseudo-shape.
// |t| > R raises std::domain_error (empty slice).
PseudoShapeSlice ball_pseudo_shape_angle(double R, double t);

// Twice the angle between OP and the positive t-axis, in [0, 2*pi], where the
// last coordinate of `point_with_time` is t. Exactly 0 on the positive t-axis
// and 2*pi on the negative t-axis. The zero vector raises
// std::invalid_argument.
double angle_field_sample(const Vec& point_with_time);

// Projects a point of the unit 2-sphere to the pseudo-plane (z, t), z being
// the vertical component of the unit normal at the point. Points further than
// 1e-9 from the sphere raise std::invalid_argument.
std::array<double, 2> sphere_pseudo_plane(const std::array<double, 3>& point, double t);

// Builds the canonical chain of n+1 nested subspaces through `anchor`
// (dimensions n down to 0, coordinate-prefix bases).
SubspaceChain subspace_chain(const Vec& anchor);

// Membership predicate for one chain link: v belongs iff it differs from the
// anchor only in coordinates listed in the link's basis (within tol).
bool chain_contains(const SubspaceChain& chain, std::size_t link_index, const Vec& v,
                    double tol = 0.0);

}  // namespace multispace::pseudoface

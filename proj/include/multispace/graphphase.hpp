#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multispace::graphphase {

using Label = std::vector<double>;
using VertexId = std::string;
// Canonical unordered pair: first < second lexicographically.
using EdgeKey = std::pair<VertexId, VertexId>;

// A brane to be placed as a vertex, with its vibration label.
struct Brane {
  VertexId id;
  Label omega;
};

// A force interaction between two branes, with its force label.
struct Interaction {
  VertexId a;
  VertexId b;
  Label lambda;
};

// Finite simple undirected graph with p-vector vertex labels (omega) and
// q-vector edge labels (lambda). Vertices and edges are kept sorted so every
// downstream traversal is deterministic.
struct GraphPhase {
  std::vector<VertexId> vertices;
  std::vector<EdgeKey> edges;
  std::map<VertexId, Label> omega;
  std::map<EdgeKey, Label> lambda;
  int p_dim = 0;
  int q_dim = 0;
};

// Planar witness: the cyclic order of neighbors around each vertex induced by
// an embedding in the plane.
struct RotationSystem {
  std::map<VertexId, std::vector<VertexId>> order;
};

enum class ObstructionKind { k5, k33 };

// A subdivided K5 or K3,3 contained in the graph: the edge set of the
// subdivision (its non-isolated endpoints are the subdivision's vertices).
// Every edge of the subdivision is critical: deleting any one makes it planar.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::k5;
  std::vector<EdgeKey> edges;
};

// Result of the embeddability test. For target dimension 2 exactly one of
// witness/obstruction is present; for other dimensions both are absent.
struct EmbeddingVerdict {
  bool embeddable = false;
  std::optional<RotationSystem> witness;
  std::optional<Obstruction> obstruction;
};

// Raised when a transformation is attempted on a phase that does not embed in
// the target dimension; carries the verdict (with the obstruction for n = 2).
class NotEmbeddable : public std::runtime_error {
 public:
  NotEmbeddable(const std::string& msg, EmbeddingVerdict verdict)
      : std::runtime_error(msg), verdict_(std::move(verdict)) {}
  const EmbeddingVerdict& verdict() const { return verdict_; }

 private:
  EmbeddingVerdict verdict_;
};

// Label maps applied to every vertex label (tau_omega) and every edge label
// (tau_lambda). Both must be total on the labels they receive.
struct LabelTransform {
  std::function<Label(const Label&)> tau_omega;
  std::function<Label(const Label&)> tau_lambda;
};

// Builds the labeled graph. Rejects duplicate brane ids, self-interactions,
// duplicate interactions for the same unordered pair, endpoints that name no
// declared brane, and ragged label lengths (all omega labels must share one
// length, likewise all lambda labels).
GraphPhase build_graph_phase(const std::vector<Brane>& branes,
                             const std::vector<Interaction>& interactions);

// Embeddability in R^n: n >= 3 always embeds (no witness produced); n == 2 is
// the planarity test, yielding a rotation-system witness or a subdivided
// K5/K3,3 obstruction; n == 1 tests for a disjoint union of paths (max degree
// <= 2 and acyclic). Deterministic for a fixed input.
EmbeddingVerdict is_embeddable(const GraphPhase& g, int n);

// Number of faces the rotation system induces (trace-walk orbit count, with
// one face per edgeless component).
int count_faces(const GraphPhase& g, const RotationSystem& rs);

// Checks Euler's relation V - E + F = 2 on every connected component.
bool euler_check(const GraphPhase& g, const RotationSystem& rs);

// Applies the label maps to an embeddable phase; the underlying graph is
// unchanged. Throws NotEmbeddable (with the verdict) when is_embeddable(g, n)
// fails, and std::invalid_argument when a transform is absent or produces
// ragged label lengths. Label dimensions of empty vertex/edge sets are
// preserved from the input.
GraphPhase transform_phase(const GraphPhase& g, const LabelTransform& tau, int n);

// True iff applying tau then tau_inverse reproduces g's labels within 1e-9
// componentwise (and label dimensions survive the round trip). Embeddability
// errors propagate.
bool round_trip_check(const GraphPhase& g, const LabelTransform& tau,
                      const LabelTransform& tau_inverse, int n);

}  // namespace multispace::graphphase

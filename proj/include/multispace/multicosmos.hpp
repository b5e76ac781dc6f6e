#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace multispace::multicosmos {

using Id = std::string;
using Element = std::string;

// One sub-cosmos: a finite carrier of element identifiers plus an opaque time
// index.
struct SubCosmos {
  Id id;
  std::vector<Element> carrier;
  int time_tag = 0;
};

// Total map carrier(src) -> carrier(dst) attached to the order pair src > dst.
struct Restriction {
  Id src;
  Id dst;
  std::map<Element, Element> map;
};

// Optional binary operation on one carrier, given as a total table; when two
// related carriers both declare one, their restriction must be a homomorphism
// for it.
struct OpTable {
  std::map<std::pair<Element, Element>, Element> table;
};

// A finite poset of sub-cosmoses with restriction maps; the stage on which
// the composition / separatedness / gluing conditions are checked.
//  - order holds (super, sub) pairs and must be transitive and irreflexive;
//  - restrictions exist exactly for the order pairs;
//  - intersections optionally name, for an unordered pair {a, b}, a declared
//    sub-cosmos that lies at or below both (carriers of distinct sub-cosmoses
//    are disjoint namespaces, so meets are declared, never computed);
//  - operations optionally attach an OpTable to a carrier.
struct MultiCosmosModel {
  std::vector<SubCosmos> subcosmoses;
  std::set<std::pair<Id, Id>> order;
  std::vector<Restriction> restrictions;
  std::map<std::pair<Id, Id>, Id> intersections;  // key: minmax-canonical pair
  std::map<Id, OpTable> operations;
};

// Partial assignment of one carrier element per sub-cosmos (the local data to
// glue).
struct SectionFamily {
  std::map<Id, Element> assignments;
};

struct CompositionViolation {
  Id a, b, c;  // chain a > b > c
  Element x;   // witness element of carrier(a)
};

struct CompositionReport {
  bool passed = true;
  std::vector<CompositionViolation> violations;  // first violation per chain
};

struct SeparationViolation {
  Element g, h;  // indistinguishable pair in the top carrier
};

struct SeparationReport {
  bool passed = true;
  std::vector<SeparationViolation> violations;
};

// Outcome of the seeded gluing trials. ran is false when trials == 0 (gluing
// explicitly skipped).
struct GluingTrialReport {
  bool ran = false;
  int trials = 0;
  int succeeded = 0;
  std::vector<std::string> failures;  // one human-readable note per failed trial

  bool passed() const { return !ran || succeeded == trials; }
};

struct SheafReport {
  CompositionReport composition;
  SeparationReport separation;
  GluingTrialReport gluing;
};

// A gluing family whose sections disagree on a declared intersection.
class IncompatibleFamily : public std::runtime_error {
 public:
  IncompatibleFamily(const std::string& msg, Id first, Id second)
      : std::runtime_error(msg), first_(std::move(first)), second_(std::move(second)) {}
  const Id& first() const { return first_; }
  const Id& second() const { return second_; }

 private:
  Id first_, second_;
};

// The exhaustive search found no element of the top carrier restricting to
// the family.
class NoAmalgam : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An empty family over a non-singleton top carrier pins down nothing.
class UnderdeterminedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural validation: unique ids, nonempty duplicate-free carriers,
// transitive irreflexive order between declared ids, exactly one total
// well-typed restriction per order pair, declared intersections at-or-below
// both arguments, and (when operation tables are supplied) table totality
// plus the homomorphism law on every restriction between two carriers that
// both declare tables. Throws std::invalid_argument with a narrative message.
void validate_model(const MultiCosmosModel& m);

const SubCosmos& find_subcosmos(const MultiCosmosModel& m, const Id& id);
const Restriction& find_restriction(const MultiCosmosModel& m, const Id& src, const Id& dst);

// Ids strictly below `id` in the order, sorted.
std::vector<Id> below(const MultiCosmosModel& m, const Id& id);

bool is_maximal(const MultiCosmosModel& m, const Id& id);

// Applies the declared restriction from `src` to `dst` (identity when they
// coincide). Throws std::invalid_argument when the pair has no restriction or
// x is not in the carrier of src.
Element restrict_element(const MultiCosmosModel& m, const Id& src, const Id& dst,
                         const Element& x);

// For every chain a > b > c and every x in carrier(a), checks that the direct
// restriction equals the two-step one; records the first violating element
// per chain. Chains are scanned in sorted order, so reports are
// deterministic.
CompositionReport validate_composition(const MultiCosmosModel& m);

// For every pair g != h in carrier(top), checks that some sub-cosmos below
// top separates them (maps them to different elements). `top` must be maximal
// in the order.
SeparationReport validate_separated(const MultiCosmosModel& m, const Id& top);

// All elements f of carrier(top) with restrict(f) == family on every assigned
// id, in carrier order. Family ids must lie strictly below top and assigned
// elements must belong to their carriers.
std::vector<Element> amalgams(const MultiCosmosModel& m, const Id& top,
                              const SectionFamily& family);

// Exhaustively searches carrier(top) for an element restricting to the
// family. Checks pairwise compatibility on declared intersections first
// (IncompatibleFamily names the offending pair). An empty family is accepted
// only when carrier(top) is a singleton (UnderdeterminedFamily otherwise).
// Throws NoAmalgam when the search exhausts the carrier. When several
// amalgams exist (possible for partial families), the first in carrier order
// is returned; uniqueness for full families under separatedness is asserted
// by validate_sheaf_conditions.
Element glue(const MultiCosmosModel& m, const Id& top, const SectionFamily& family);

// Runs the composition and separatedness checks, then `trials` seeded gluing
// trials: each draws a random top element f and a random nonempty subset of
// the sub-cosmoses below top, restricts f onto it, and glues the family back.
// A trial succeeds when glue returns an element that restricts to the family
// everywhere (and, when the family covers everything below top and
// separatedness holds, when the amalgam is exactly f and unique). trials == 0
// skips gluing with ran == false. Deterministic for a fixed seed.
SheafReport validate_sheaf_conditions(const MultiCosmosModel& m, const Id& top, int trials,
                                      std::uint64_t seed = 1);

}  // namespace multispace::multicosmos

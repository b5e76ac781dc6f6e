#include "multispace/multicosmos.hpp"

#include <algorithm>

#include "multispace/rng.hpp"

namespace multispace::multicosmos {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::pair<Id, Id> canonical_pair(const Id& a, const Id& b) {
  return a < b ? std::pair<Id, Id>{a, b} : std::pair<Id, Id>{b, a};
}

bool ordered(const MultiCosmosModel& m, const Id& super, const Id& sub) {
  return m.order.count({super, sub}) == 1;
}

// At-or-below: equality counts.
bool at_or_below(const MultiCosmosModel& m, const Id& what, const Id& anchor) {
  return what == anchor || ordered(m, anchor, what);
}

}  // namespace

const SubCosmos& find_subcosmos(const MultiCosmosModel& m, const Id& id) {
  for (const SubCosmos& s : m.subcosmoses) {
    if (s.id == id) return s;
  }
  throw std::invalid_argument("multicosmos: unknown sub-cosmos id '" + id + "'");
}

const Restriction& find_restriction(const MultiCosmosModel& m, const Id& src, const Id& dst) {
  for (const Restriction& r : m.restrictions) {
    if (r.src == src && r.dst == dst) return r;
  }
  throw std::invalid_argument("multicosmos: no restriction from '" + src + "' to '" + dst +
                              "'");
}

void validate_model(const MultiCosmosModel& m) {
  std::set<Id> ids;
  for (const SubCosmos& s : m.subcosmoses) {
    require(ids.insert(s.id).second, "multicosmos model: duplicate sub-cosmos id '" + s.id + "'");
    require(!s.carrier.empty(), "multicosmos model: carrier of '" + s.id + "' is empty");
    std::set<Element> seen;
    for (const Element& e : s.carrier) {
      require(seen.insert(e).second,
              "multicosmos model: carrier of '" + s.id + "' repeats element '" + e + "'");
    }
  }

  for (const auto& [super, sub] : m.order) {
    require(ids.count(super) == 1 && ids.count(sub) == 1,
            "multicosmos model: order names an unknown id");
    require(super != sub, "multicosmos model: order must be irreflexive");
  }
  for (const auto& [a, b] : m.order) {
    for (const auto& [c, d] : m.order) {
      if (b == c) {
        require(ordered(m, a, d), "multicosmos model: order is not transitive ('" + a +
                                      "' > '" + b + "' > '" + d + "')");
      }
    }
  }

  std::set<std::pair<Id, Id>> covered;
  for (const Restriction& r : m.restrictions) {
    require(ordered(m, r.src, r.dst), "multicosmos model: restriction '" + r.src + "' -> '" +
                                          r.dst + "' has no matching order pair");
    require(covered.insert({r.src, r.dst}).second,
            "multicosmos model: duplicate restriction '" + r.src + "' -> '" + r.dst + "'");
    const SubCosmos& src = find_subcosmos(m, r.src);
    const SubCosmos& dst = find_subcosmos(m, r.dst);
    const std::set<Element> dst_carrier(dst.carrier.begin(), dst.carrier.end());
    for (const Element& x : src.carrier) {
      const auto it = r.map.find(x);
      require(it != r.map.end(), "multicosmos model: restriction '" + r.src + "' -> '" +
                                     r.dst + "' is not total (misses '" + x + "')");
      require(dst_carrier.count(it->second) == 1,
              "multicosmos model: restriction '" + r.src + "' -> '" + r.dst +
                  "' maps '" + x + "' outside the target carrier");
    }
    require(r.map.size() == src.carrier.size(),
            "multicosmos model: restriction '" + r.src + "' -> '" + r.dst +
                "' maps elements missing from the source carrier");
  }
  require(covered.size() == m.order.size(),
          "multicosmos model: some order pair has no restriction");

  for (const auto& [pair, meet] : m.intersections) {
    const auto& [a, b] = pair;
    require(ids.count(a) == 1 && ids.count(b) == 1 && ids.count(meet) == 1,
            "multicosmos model: intersection names an unknown id");
    require(pair == canonical_pair(a, b),
            "multicosmos model: intersection pair key must be in canonical order");
    require(at_or_below(m, meet, a) && at_or_below(m, meet, b),
            "multicosmos model: declared intersection '" + meet +
                "' is not at-or-below both '" + a + "' and '" + b + "'");
  }

  for (const auto& [id, op] : m.operations) {
    require(ids.count(id) == 1, "multicosmos model: operation table names an unknown id");
    const SubCosmos& s = find_subcosmos(m, id);
    const std::set<Element> carrier(s.carrier.begin(), s.carrier.end());
    for (const Element& x : s.carrier) {
      for (const Element& y : s.carrier) {
        const auto it = op.table.find({x, y});
        require(it != op.table.end(), "multicosmos model: operation table on '" + id +
                                          "' is not total (misses ('" + x + "','" + y + "'))");
        require(carrier.count(it->second) == 1,
                "multicosmos model: operation table on '" + id + "' leaves the carrier");
      }
    }
  }
  // Homomorphism law on every restriction whose endpoints both carry tables.
  for (const Restriction& r : m.restrictions) {
    const auto src_op = m.operations.find(r.src);
    const auto dst_op = m.operations.find(r.dst);
    if (src_op == m.operations.end() || dst_op == m.operations.end()) continue;
    const SubCosmos& src = find_subcosmos(m, r.src);
    for (const Element& x : src.carrier) {
      for (const Element& y : src.carrier) {
        const Element lhs = r.map.at(src_op->second.table.at({x, y}));
        const Element rhs = dst_op->second.table.at({r.map.at(x), r.map.at(y)});
        require(lhs == rhs, "multicosmos model: restriction '" + r.src + "' -> '" + r.dst +
                                "' is not a homomorphism at ('" + x + "','" + y + "')");
      }
    }
  }
}

std::vector<Id> below(const MultiCosmosModel& m, const Id& id) {
  std::vector<Id> out;
  for (const auto& [super, sub] : m.order) {
    if (super == id) out.push_back(sub);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_maximal(const MultiCosmosModel& m, const Id& id) {
  find_subcosmos(m, id);
  for (const auto& [super, sub] : m.order) {
    (void)super;
    if (sub == id) return false;
  }
  return true;
}

Element restrict_element(const MultiCosmosModel& m, const Id& src, const Id& dst,
                         const Element& x) {
  if (src == dst) return x;
  const auto& map = find_restriction(m, src, dst).map;
  const auto it = map.find(x);
  require(it != map.end(),
          "restrict_element: '" + x + "' is not in the carrier of '" + src + "'");
  return it->second;
}

CompositionReport validate_composition(const MultiCosmosModel& m) {
  validate_model(m);
  CompositionReport report;
  // Chains in sorted (a, b, c) order for deterministic reporting.
  std::vector<std::tuple<Id, Id, Id>> chains;
  for (const auto& [a, b] : m.order) {
    for (const auto& [b2, c] : m.order) {
      if (b == b2) chains.emplace_back(a, b, c);
    }
  }
  std::sort(chains.begin(), chains.end());
  for (const auto& [a, b, c] : chains) {
    const Restriction& ab = find_restriction(m, a, b);
    const Restriction& bc = find_restriction(m, b, c);
    const Restriction& ac = find_restriction(m, a, c);
    for (const Element& x : find_subcosmos(m, a).carrier) {
      if (ac.map.at(x) != bc.map.at(ab.map.at(x))) {
        report.passed = false;
        report.violations.push_back(CompositionViolation{a, b, c, x});
        break;  // first violation per chain
      }
    }
  }
  return report;
}

SeparationReport validate_separated(const MultiCosmosModel& m, const Id& top) {
  validate_model(m);
  require(is_maximal(m, top), "validate_separated: '" + top + "' is not maximal");
  SeparationReport report;
  const SubCosmos& t = find_subcosmos(m, top);
  const std::vector<Id> subs = below(m, top);
  for (std::size_t i = 0; i < t.carrier.size(); ++i) {
    for (std::size_t j = i + 1; j < t.carrier.size(); ++j) {
      const Element& g = t.carrier[i];
      const Element& h = t.carrier[j];
      bool distinguished = false;
      for (const Id& s : subs) {
        const Restriction& r = find_restriction(m, top, s);
        if (r.map.at(g) != r.map.at(h)) {
          distinguished = true;
          break;
        }
      }
      if (!distinguished) {
        report.passed = false;
        report.violations.push_back(SeparationViolation{g, h});
      }
    }
  }
  return report;
}

std::vector<Element> amalgams(const MultiCosmosModel& m, const Id& top,
                              const SectionFamily& family) {
  const SubCosmos& t = find_subcosmos(m, top);
  for (const auto& [id, elem] : family.assignments) {
    require(ordered(m, top, id),
            "glue: family id '" + id + "' is not strictly below '" + top + "'");
    const SubCosmos& s = find_subcosmos(m, id);
    require(std::find(s.carrier.begin(), s.carrier.end(), elem) != s.carrier.end(),
            "glue: family assigns '" + elem + "' outside the carrier of '" + id + "'");
  }
  std::vector<Element> found;
  for (const Element& f : t.carrier) {
    bool matches = true;
    for (const auto& [id, elem] : family.assignments) {
      if (find_restriction(m, top, id).map.at(f) != elem) {
        matches = false;
        break;
      }
    }
    if (matches) found.push_back(f);
  }
  return found;
}

Element glue(const MultiCosmosModel& m, const Id& top, const SectionFamily& family) {
  validate_model(m);
  const SubCosmos& t = find_subcosmos(m, top);

  if (family.assignments.empty()) {
    if (t.carrier.size() == 1) return t.carrier.front();
    throw UnderdeterminedFamily(
        "glue: empty family over the non-singleton carrier of '" + top + "'");
  }

  // Pairwise compatibility on declared intersections.
  for (auto it = family.assignments.begin(); it != family.assignments.end(); ++it) {
    for (auto jt = std::next(it); jt != family.assignments.end(); ++jt) {
      const auto meet_it = m.intersections.find(canonical_pair(it->first, jt->first));
      if (meet_it == m.intersections.end()) continue;
      const Id& meet = meet_it->second;
      const Element left = restrict_element(m, it->first, meet, it->second);
      const Element right = restrict_element(m, jt->first, meet, jt->second);
      if (left != right) {
        throw IncompatibleFamily("glue: sections on '" + it->first + "' and '" + jt->first +
                                     "' disagree on their intersection '" + meet + "'",
                                 it->first, jt->first);
      }
    }
  }

  const std::vector<Element> found = amalgams(m, top, family);
  if (found.empty()) {
    throw NoAmalgam("glue: no element of '" + top + "' restricts to the given family");
  }
  return found.front();
}

SheafReport validate_sheaf_conditions(const MultiCosmosModel& m, const Id& top, int trials,
                                      std::uint64_t seed) {
  require(trials >= 0, "validate_sheaf_conditions: trials must be nonnegative");
  SheafReport report;
  report.composition = validate_composition(m);
  report.separation = validate_separated(m, top);

  if (trials == 0) {
    report.gluing.ran = false;  // explicit "skipped" marker
    return report;
  }
  report.gluing.ran = true;
  report.gluing.trials = trials;

  const SubCosmos& t = find_subcosmos(m, top);
  const std::vector<Id> subs = below(m, top);
  std::mt19937_64 gen(seed);

  for (int trial = 0; trial < trials; ++trial) {
    const std::string tag = "trial " + std::to_string(trial);
    if (subs.empty()) {
      // Nothing below top: only the degenerate singleton family is possible.
      if (t.carrier.size() == 1) {
        ++report.gluing.succeeded;
      } else {
        report.gluing.failures.push_back(
            tag + ": nothing below '" + top + "' to glue from and the carrier is ambiguous");
      }
      continue;
    }

    // Random source element and random nonempty index subset.
    const Element f = t.carrier[uniform_index(gen, t.carrier.size())];
    std::vector<Id> chosen;
    for (const Id& s : subs) {
      if (uniform_index(gen, 2) == 1) chosen.push_back(s);
    }
    if (chosen.empty()) chosen.push_back(subs[uniform_index(gen, subs.size())]);

    SectionFamily family;
    for (const Id& s : chosen) {
      family.assignments[s] = find_restriction(m, top, s).map.at(f);
    }

    try {
      const Element glued = glue(m, top, family);
      bool consistent = true;
      for (const auto& [id, elem] : family.assignments) {
        if (find_restriction(m, top, id).map.at(glued) != elem) consistent = false;
      }
      if (!consistent) {
        report.gluing.failures.push_back(tag + ": amalgam does not restrict to the family");
        continue;
      }
      if (chosen.size() == subs.size() && report.separation.passed) {
        // Full family under separatedness: the amalgam is unique and must be
        // the source element.
        const std::vector<Element> all = amalgams(m, top, family);
        if (all.size() != 1) {
          report.gluing.failures.push_back(
              tag + ": separated model yielded " + std::to_string(all.size()) +
              " amalgams for a full family");
          continue;
        }
        if (glued != f) {
          report.gluing.failures.push_back(tag + ": amalgam '" + glued +
                                           "' differs from the source '" + f + "'");
          continue;
        }
      }
      ++report.gluing.succeeded;
    } catch (const IncompatibleFamily& e) {
      report.gluing.failures.push_back(tag + ": " + e.what());
    } catch (const NoAmalgam& e) {
      report.gluing.failures.push_back(tag + ": " + e.what());
    }
  }
  return report;
}

}  // namespace multispace::multicosmos

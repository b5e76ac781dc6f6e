#include "support/model_generator.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "multispace/rng.hpp"

namespace testsupport {
namespace {

using multispace::multicosmos::Element;
using multispace::multicosmos::Id;
using multispace::multicosmos::MultiCosmosModel;
using multispace::multicosmos::OpTable;
using multispace::multicosmos::Restriction;
using multispace::multicosmos::SubCosmos;
using multispace::uniform_index;

struct Poset {
  int count = 0;
  std::vector<std::vector<int>> ancestors;  // strict ancestors per node
  std::vector<int> depth;                   // longest path from node 0
};

// Node 0 is the unique top: every later node picks at least one earlier
// parent, so only node 0 is maximal after transitive closure.
Poset random_poset(std::mt19937_64& gen, int count) {
  Poset p;
  p.count = count;
  p.ancestors.assign(static_cast<std::size_t>(count), {});
  p.depth.assign(static_cast<std::size_t>(count), 0);
  for (int i = 1; i < count; ++i) {
    const int parent_count = 1 + static_cast<int>(uniform_index(gen, 2));
    std::set<int> anc;
    int d = 0;
    for (int k = 0; k < parent_count; ++k) {
      const int parent = static_cast<int>(uniform_index(gen, static_cast<std::size_t>(i)));
      anc.insert(parent);
      for (int a : p.ancestors[static_cast<std::size_t>(parent)]) anc.insert(a);
      d = std::max(d, p.depth[static_cast<std::size_t>(parent)] + 1);
    }
    p.ancestors[static_cast<std::size_t>(i)].assign(anc.begin(), anc.end());
    p.depth[static_cast<std::size_t>(i)] = d;
  }
  return p;
}

Id node_id(int i) { return "n" + std::to_string(i); }

bool at_or_below(const Poset& p, int w, int a) {
  if (w == a) return true;
  const auto& anc = p.ancestors[static_cast<std::size_t>(w)];
  return std::find(anc.begin(), anc.end(), a) != anc.end();
}

void add_random_intersections(std::mt19937_64& gen, const Poset& p, MultiCosmosModel& model) {
  for (int i = 0; i < p.count; ++i) {
    for (int j = i + 1; j < p.count; ++j) {
      std::vector<int> meets;
      for (int w = 0; w < p.count; ++w) {
        if (at_or_below(p, w, i) && at_or_below(p, w, j)) meets.push_back(w);
      }
      if (meets.empty() || uniform_index(gen, 5) >= 2) continue;
      const int meet = meets[uniform_index(gen, meets.size())];
      model.intersections[{node_id(i), node_id(j)}] = node_id(meet);
    }
  }
}

MultiCosmosModel build_quotient_model(std::mt19937_64& gen, bool corrupt) {
  const int k = 2 + static_cast<int>(uniform_index(gen, 5));      // base set size 2..6
  const int count = 3 + static_cast<int>(uniform_index(gen, 4));  // nodes 3..6
  const Poset p = random_poset(gen, count);
  const int max_depth = *std::max_element(p.depth.begin(), p.depth.end());

  // Partition chain over the base set {0..k-1}: rep[e] is the smallest
  // member of e's block. Q[0] is discrete; each later level either copies
  // the previous one or merges two blocks, so deeper levels are coarser.
  std::vector<std::vector<int>> q(static_cast<std::size_t>(max_depth) + 1);
  q[0].resize(static_cast<std::size_t>(k));
  for (int e = 0; e < k; ++e) q[0][static_cast<std::size_t>(e)] = e;
  for (int d = 1; d <= max_depth; ++d) {
    q[static_cast<std::size_t>(d)] = q[static_cast<std::size_t>(d) - 1];
    auto& level = q[static_cast<std::size_t>(d)];
    std::vector<int> reps;
    for (int e = 0; e < k; ++e) {
      if (level[static_cast<std::size_t>(e)] == e) reps.push_back(e);
    }
    if (reps.size() >= 2 && uniform_index(gen, 2) == 1) {
      const std::size_t i = uniform_index(gen, reps.size());
      std::size_t j = uniform_index(gen, reps.size() - 1);
      if (j >= i) ++j;
      const int keep = std::min(reps[i], reps[j]);
      const int drop = std::max(reps[i], reps[j]);
      for (int e = 0; e < k; ++e) {
        if (level[static_cast<std::size_t>(e)] == drop) level[static_cast<std::size_t>(e)] = keep;
      }
    }
  }

  MultiCosmosModel model;
  auto element_name = [](int node, int rep) {
    return node_id(node) + ":u" + std::to_string(rep);
  };
  for (int i = 0; i < count; ++i) {
    SubCosmos s;
    s.id = node_id(i);
    s.time_tag = p.depth[static_cast<std::size_t>(i)];
    const auto& level = q[static_cast<std::size_t>(p.depth[static_cast<std::size_t>(i)])];
    for (int e = 0; e < k; ++e) {
      if (level[static_cast<std::size_t>(e)] == e) s.carrier.push_back(element_name(i, e));
    }
    model.subcosmoses.push_back(std::move(s));
  }
  for (int i = 0; i < count; ++i) {
    for (int a : p.ancestors[static_cast<std::size_t>(i)]) {
      model.order.insert({node_id(a), node_id(i)});
      Restriction r;
      r.src = node_id(a);
      r.dst = node_id(i);
      const auto& src_level = q[static_cast<std::size_t>(p.depth[static_cast<std::size_t>(a)])];
      const auto& dst_level = q[static_cast<std::size_t>(p.depth[static_cast<std::size_t>(i)])];
      for (int e = 0; e < k; ++e) {
        if (src_level[static_cast<std::size_t>(e)] != e) continue;
        r.map[element_name(a, e)] = element_name(i, dst_level[static_cast<std::size_t>(e)]);
      }
      model.restrictions.push_back(std::move(r));
    }
  }
  add_random_intersections(gen, p, model);

  // Occasionally equip every node with a left-projection table; it descends
  // through any quotient, so the homomorphism law holds on every restriction.
  if (!corrupt && uniform_index(gen, 10) < 3) {
    for (const auto& s : model.subcosmoses) {
      OpTable t;
      for (const auto& x : s.carrier) {
        for (const auto& y : s.carrier) t.table[{x, y}] = x;
      }
      model.operations[s.id] = std::move(t);
    }
  }

  if (corrupt) {
    // Flip one entry of one restriction whose target carrier offers an
    // alternative value. If every target is a singleton there is nothing to
    // corrupt and the model stays coherent, which is still a valid draw.
    std::vector<std::size_t> candidates;
    for (std::size_t ri = 0; ri < model.restrictions.size(); ++ri) {
      for (const auto& s : model.subcosmoses) {
        if (s.id == model.restrictions[ri].dst && s.carrier.size() >= 2) {
          candidates.push_back(ri);
          break;
        }
      }
    }
    if (!candidates.empty()) {
      auto& r = model.restrictions[candidates[uniform_index(gen, candidates.size())]];
      const std::vector<Element>* dst_carrier = nullptr;
      for (const auto& s : model.subcosmoses) {
        if (s.id == r.dst) dst_carrier = &s.carrier;
      }
      auto entry = r.map.begin();
      std::advance(entry, static_cast<long>(uniform_index(gen, r.map.size())));
      Element replacement = entry->second;
      while (replacement == entry->second) {
        replacement = (*dst_carrier)[uniform_index(gen, dst_carrier->size())];
      }
      entry->second = replacement;
    }
  }
  return model;
}

MultiCosmosModel build_chaotic_model(std::mt19937_64& gen) {
  const int count = 3 + static_cast<int>(uniform_index(gen, 4));  // nodes 3..6
  const Poset p = random_poset(gen, count);
  MultiCosmosModel model;
  for (int i = 0; i < count; ++i) {
    SubCosmos s;
    s.id = node_id(i);
    s.time_tag = p.depth[static_cast<std::size_t>(i)];
    const std::size_t size = 1 + uniform_index(gen, 4);
    for (std::size_t e = 0; e < size; ++e) {
      s.carrier.push_back(node_id(i) + ":e" + std::to_string(e));
    }
    model.subcosmoses.push_back(std::move(s));
  }
  for (int i = 0; i < count; ++i) {
    for (int a : p.ancestors[static_cast<std::size_t>(i)]) {
      model.order.insert({node_id(a), node_id(i)});
      Restriction r;
      r.src = node_id(a);
      r.dst = node_id(i);
      const auto& src = model.subcosmoses[static_cast<std::size_t>(a)].carrier;
      const auto& dst = model.subcosmoses[static_cast<std::size_t>(i)].carrier;
      for (const auto& x : src) r.map[x] = dst[uniform_index(gen, dst.size())];
      model.restrictions.push_back(std::move(r));
    }
  }
  add_random_intersections(gen, p, model);
  return model;
}

}  // namespace

MultiCosmosModel random_model(std::mt19937_64& gen, ModelFlavor flavor) {
  switch (flavor) {
    case ModelFlavor::coherent:
      return build_quotient_model(gen, false);
    case ModelFlavor::corrupted:
      return build_quotient_model(gen, true);
    case ModelFlavor::chaotic:
    default:
      return build_chaotic_model(gen);
  }
}

}  // namespace testsupport

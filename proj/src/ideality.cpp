#include "bipref/ideality.hpp"

#include <algorithm>

namespace bipref {

IndexSet violation_set(Valuation w, std::span<const Rule> norms, const DefeatGraph& graph,
                       const Vocabulary& vocab) {
  IndexSet out;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (!satisfies(w, norms[i].body, vocab) || satisfies(w, norms[i].head, vocab)) continue;
    bool excused = false;
    for (std::size_t j : graph.defeaters(i)) {
      if (satisfies(w, norms[j].body, vocab)) {
        excused = true;
        break;
      }
    }
    if (!excused) out.insert(i);
  }
  return out;
}

IdealityOrder::IdealityOrder(std::span<const Rule> norms, const DefeatGraph& graph,
                             const Vocabulary& vocab)
    : vocab_(vocab), violated_(vocab.world_count()) {
  const RuleTables t(norms, vocab);
  for (std::size_t i = 0; i < norms.size(); ++i) {
    WorldSet v = t.body[i] & t.head[i].complement();
    for (std::size_t j : graph.defeaters(i)) v &= t.body[j].complement();
    for (Valuation w : v) violated_[w.bits].insert(i);
  }
}

std::vector<IndexSet> violation_profile(const IdealityOrder& order, const WorldSet& s) {
  std::vector<IndexSet> out;
  for (Valuation w : s) out.push_back(order.violated(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IdealityOrder::lifted_geq(const WorldSet& u, const WorldSet& v) const {
  const std::vector<IndexSet> us = violation_profile(*this, u);
  for (IndexSet vv : violation_profile(*this, v)) {
    if (std::none_of(us.begin(), us.end(), [&](IndexSet uu) { return ideality_geq(uu, vv); })) {
      return false;
    }
  }
  return true;
}

WorldSet IdealityOrder::max_ideal(const WorldSet& s) const {
  const std::vector<IndexSet> profile = violation_profile(*this, s);
  WorldSet out(s.universe());
  for (Valuation w : s) {
    const IndexSet vw = violated_[w.bits];
    const bool dominated = std::any_of(profile.begin(), profile.end(), [&](IndexSet p) {
      return p.is_proper_subset_of(vw);
    });
    if (!dominated) out.insert(w);
  }
  return out;
}

bool ideality_geq(Valuation w1, Valuation w2, std::span<const Rule> norms,
                  const DefeatGraph& graph, const Vocabulary& vocab) {
  return ideality_geq(violation_set(w1, norms, graph, vocab),
                      violation_set(w2, norms, graph, vocab));
}

bool lifted_geq(const WorldSet& u, const WorldSet& v, std::span<const Rule> norms,
                const DefeatGraph& graph, const Vocabulary& vocab) {
  return IdealityOrder(norms, graph, vocab).lifted_geq(u, v);
}

WorldSet max_ideal(const WorldSet& s, std::span<const Rule> norms, const DefeatGraph& graph,
                   const Vocabulary& vocab) {
  return IdealityOrder(norms, graph, vocab).max_ideal(s);
}

}  // namespace bipref

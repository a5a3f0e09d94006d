#pragma once

// Violation sets with the defeat guard, the ideality preorder (inclusion of
// violation sets) and its lifting to sets of worlds.

#include <span>
#include <vector>

#include "bipref/index_set.hpp"
#include "bipref/norms.hpp"
#include "bipref/propkernel.hpp"

namespace bipref {

/// Obligations r_i with body true and head false at w and no defeater of
/// r_i whose body is true at w.
IndexSet violation_set(Valuation w, std::span<const Rule> norms, const DefeatGraph& graph,
                       const Vocabulary& vocab);

/// w1 >=_I w2 given their violation sets.
inline bool ideality_geq(IndexSet v1, IndexSet v2) { return v1.is_subset_of(v2); }

/// Ideality preorder over all worlds of a vocabulary, violation sets cached.
class IdealityOrder {
 public:
  IdealityOrder(std::span<const Rule> norms, const DefeatGraph& graph, const Vocabulary& vocab);

  const Vocabulary& vocab() const { return vocab_; }
  IndexSet violated(Valuation w) const { return violated_[w.bits]; }
  bool geq(Valuation w1, Valuation w2) const {
    return ideality_geq(violated_[w1.bits], violated_[w2.bits]);
  }
  /// Every v in `v` is weakly dominated by some u in `u`.
  bool lifted_geq(const WorldSet& u, const WorldSet& v) const;
  /// Members of `s` with no strictly better member of `s`.
  WorldSet max_ideal(const WorldSet& s) const;

 private:
  Vocabulary vocab_;
  std::vector<IndexSet> violated_;
};

bool ideality_geq(Valuation w1, Valuation w2, std::span<const Rule> norms,
                  const DefeatGraph& graph, const Vocabulary& vocab);
bool lifted_geq(const WorldSet& u, const WorldSet& v, std::span<const Rule> norms,
                const DefeatGraph& graph, const Vocabulary& vocab);
WorldSet max_ideal(const WorldSet& s, std::span<const Rule> norms, const DefeatGraph& graph,
                   const Vocabulary& vocab);

/// Distinct violation masks among the members of `s`, ascending.
std::vector<IndexSet> violation_profile(const IdealityOrder& order, const WorldSet& s);

}  // namespace bipref

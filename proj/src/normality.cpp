#include "bipref/normality.hpp"

#include <algorithm>
#include <map>

#include "bipref/error.hpp"

namespace bipref {

bool exceptional_for(const BooleanFormula& a, std::span<const Rule> rules, IndexSet x) {
  return pl_entails(materialization(rules, x), negation(a));
}

LMSequence lm_sequence(std::span<const Rule> defaults) {
  const RuleTables t(defaults, Vocabulary(atoms_of(defaults)));
  LMSequence seq;
  seq.levels.push_back(IndexSet::first(defaults.size()));
  while (true) {
    const WorldSet m = t.material_of(seq.levels.back());
    IndexSet next;
    for (std::size_t i = 0; i < defaults.size(); ++i) {
      if ((m & t.body[i]).empty()) next.insert(i);
    }
    if (next == seq.levels.back()) break;
    seq.levels.push_back(next);
  }
  return seq;
}

RankedPartition ranked_partition(const LMSequence& seq) {
  RankedPartition p;
  for (std::size_t i = 0; i + 1 < seq.levels.size(); ++i) {
    p.levels.push_back(seq.levels[i] - seq.levels[i + 1]);
  }
  p.levels.push_back(seq.levels.back());
  return p;
}

std::optional<std::size_t> rank(const BooleanFormula& a, std::span<const Rule> defaults,
                                const LMSequence& seq) {
  for (std::size_t i = 0; i < seq.levels.size(); ++i) {
    if (!exceptional_for(a, defaults, seq.levels[i])) return i;
  }
  return std::nullopt;
}

NormalityTuple tuple_of(IndexSet x, const RankedPartition& partition) {
  const std::size_t m = partition.order();
  NormalityTuple t;
  if (!partition.levels[m].empty()) t.push_back((partition.levels[m] & x).size());
  for (std::size_t i = 1; i <= m; ++i) t.push_back((partition.levels[m - i] & x).size());
  return t;
}

bool lex_geq(const NormalityTuple& x, const NormalityTuple& y) {
  if (x.size() != y.size()) throw PreconditionError("tuples of different length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return true;
}

bool lex_geq(IndexSet x, IndexSet y, const RankedPartition& partition) {
  return lex_geq(tuple_of(x, partition), tuple_of(y, partition));
}

IndexSet falsification_set(Valuation w, std::span<const Rule> rules, const Vocabulary& vocab) {
  IndexSet out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (satisfies(w, rules[i].body, vocab) && !satisfies(w, rules[i].head, vocab)) out.insert(i);
  }
  return out;
}

std::size_t fdis_count(Valuation w, std::span<const Rule> rules, const Vocabulary& vocab) {
  std::size_t n = 0;
  for (const Rule& r : rules) {
    if (satisfies(w, r.body, vocab) && !satisfies(w, r.head, vocab)) ++n;
  }
  return n;
}

// --------------------------------------------------------- NormalityRanking

NormalityRanking::NormalityRanking(std::span<const Rule> defaults, const Vocabulary& vocab)
    : tables_(defaults, vocab),
      seq_(lm_sequence(defaults)),
      partition_(ranked_partition(seq_)),
      falsified_(vocab.world_count()),
      class_(vocab.world_count()) {
  for (std::size_t i = 0; i < defaults.size(); ++i) {
    const WorldSet bad = tables_.material[i].complement();
    for (Valuation w : bad) falsified_[w.bits].insert(i);
  }
  std::map<std::uint64_t, NormalityTuple> by_mask;
  for (IndexSet f : falsified_) {
    if (!by_mask.contains(f.mask())) by_mask.emplace(f.mask(), tuple_of(f, partition_));
  }
  for (const auto& [mask, t] : by_mask) classes_.push_back(t);
  std::sort(classes_.begin(), classes_.end());
  classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
  std::map<std::uint64_t, std::uint32_t> class_of_mask;
  for (const auto& [mask, t] : by_mask) {
    const auto it = std::lower_bound(classes_.begin(), classes_.end(), t);
    class_of_mask.emplace(mask, static_cast<std::uint32_t>(it - classes_.begin()));
  }
  for (std::size_t w = 0; w < falsified_.size(); ++w) {
    class_[w] = class_of_mask.at(falsified_[w].mask());
  }
}

WorldSet NormalityRanking::max_normal(const WorldSet& s) const {
  std::uint32_t best = UINT32_MAX;
  for (Valuation w : s) best = std::min(best, class_[w.bits]);
  WorldSet out(s.universe());
  for (Valuation w : s) {
    if (class_[w.bits] == best) out.insert(w);
  }
  return out;
}

bool normality_geq(Valuation w1, Valuation w2, std::span<const Rule> defaults,
                   const Vocabulary& vocab) {
  const RankedPartition p = ranked_partition(lm_sequence(defaults));
  return lex_geq(falsification_set(w1, defaults, vocab), falsification_set(w2, defaults, vocab),
                 p);
}

WorldSet max_normal(const WorldSet& s, std::span<const Rule> defaults, const Vocabulary& vocab) {
  return NormalityRanking(defaults, vocab).max_normal(s);
}

}  // namespace bipref

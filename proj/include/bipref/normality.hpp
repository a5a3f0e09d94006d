#pragma once

// Exceptionality levels of the normality conditionals and the lexicographic
// normality preorder on worlds (LEX), plus the flat falsification count
// (f-DIS) kept for comparison tables.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/index_set.hpp"
#include "bipref/norms.hpp"
#include "bipref/propkernel.hpp"

namespace bipref {

/// A is exceptional for X when m(X) |= ~A.
bool exceptional_for(const BooleanFormula& a, std::span<const Rule> rules, IndexSet x);

/// E_0 = all rules, E_{i+1} = rules whose body is exceptional for E_i,
/// stopped at the first repetition.
struct LMSequence {
  std::vector<IndexSet> levels;

  std::size_t order() const { return levels.size() - 1; }
  /// The stable last level (empty for coherent rule sets).
  IndexSet limit() const { return levels.back(); }
};

LMSequence lm_sequence(std::span<const Rule> defaults);

/// levels[i] = E_i - E_{i+1} for i < m, levels[m] = E_m.
struct RankedPartition {
  std::vector<IndexSet> levels;

  std::size_t order() const { return levels.size() - 1; }
};

RankedPartition ranked_partition(const LMSequence& seq);

/// Least i with m(E_i) not entailing ~A; nullopt if there is none.
std::optional<std::size_t> rank(const BooleanFormula& a, std::span<const Rule> defaults,
                                const LMSequence& seq);

/// Per-level falsification counts, most specific level first. Smaller is
/// more normal.
using NormalityTuple = std::vector<std::size_t>;

/// <|D_{m-1} & X|, ..., |D_0 & X|>. When the last level D_m is nonempty
/// (incoherent rule sets only) its count is prepended.
NormalityTuple tuple_of(IndexSet x, const RankedPartition& partition);

/// Equal, or smaller at the first differing coordinate.
bool lex_geq(const NormalityTuple& x, const NormalityTuple& y);
bool lex_geq(IndexSet x, IndexSet y, const RankedPartition& partition);

/// Rules whose body holds and head fails at w.
IndexSet falsification_set(Valuation w, std::span<const Rule> rules, const Vocabulary& vocab);

/// Raw count of rules with body true and head false at w, defeat ignored.
std::size_t fdis_count(Valuation w, std::span<const Rule> rules, const Vocabulary& vocab);

/// The normality preorder induced by a set of normality conditionals over
/// a vocabulary, with per-world data cached.
class NormalityRanking {
 public:
  NormalityRanking(std::span<const Rule> defaults, const Vocabulary& vocab);

  const Vocabulary& vocab() const { return tables_.vocab; }
  const LMSequence& sequence() const { return seq_; }
  const RankedPartition& partition() const { return partition_; }

  IndexSet falsified(Valuation w) const { return falsified_[w.bits]; }
  const NormalityTuple& tuple(Valuation w) const { return classes_[class_[w.bits]]; }
  /// Normality class, 0 = most normal; equal classes iff equal tuples.
  std::size_t normal_class(Valuation w) const { return class_[w.bits]; }
  std::size_t class_count() const { return classes_.size(); }

  bool geq(Valuation w1, Valuation w2) const { return class_[w1.bits] <= class_[w2.bits]; }
  WorldSet max_normal(const WorldSet& s) const;

 private:
  RuleTables tables_;
  LMSequence seq_;
  RankedPartition partition_;
  std::vector<IndexSet> falsified_;
  std::vector<NormalityTuple> classes_;  // sorted, most normal first
  std::vector<std::uint32_t> class_;
};

bool normality_geq(Valuation w1, Valuation w2, std::span<const Rule> defaults,
                   const Vocabulary& vocab);
WorldSet max_normal(const WorldSet& s, std::span<const Rule> defaults, const Vocabulary& vocab);

}  // namespace bipref

#pragma once

// Constrained input/output logic: out4+ with identity, maximal families
// under the constraint C = {a}, full-meet output, the rewrite of
// obligations by their defeaters, and the comparison with the preference
// semantics.
//
// This module decides everything with propositional consistency and
// entailment only; it never consults the world tables of the model.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/index_set.hpp"
#include "bipref/norms.hpp"
#include "bipref/propkernel.hpp"

namespace bipref {

/// Conditional norm (body, head).
struct IOPair {
  BooleanFormula body = BooleanFormula::top();
  BooleanFormula head = BooleanFormula::top();

  BooleanFormula material() const { return implication(body, head); }
  std::string to_string() const;

  friend bool operator==(const IOPair&, const IOPair&) = default;
  friend std::strong_ordering operator<=>(const IOPair&, const IOPair&) = default;
};

/// x in out4+(N, a), i.e. {a} u m(N) |= x.
bool out4plus_contains(std::span<const IOPair> n, const BooleanFormula& a,
                       const BooleanFormula& x);
bool out4plus_contains(std::span<const IOPair> n, IndexSet subset, const BooleanFormula& a,
                       const BooleanFormula& x);

/// Maximal subsets of N (as index sets, ascending by mask) whose output on
/// the input is consistent with the input.
struct MaxFamily {
  std::vector<IndexSet> members;
  /// The input is itself inconsistent; `members` is then empty.
  bool inconsistent_input = false;
};

MaxFamily maxfamily(std::span<const IOPair> n, const BooleanFormula& a);

/// x belongs to the output of every member of the maximal family. Throws
/// PreconditionError on an inconsistent input.
bool fullmeet_contains(std::span<const IOPair> n, const BooleanFormula& a,
                       const BooleanFormula& x);

/// One pair per obligation, in rule order: (b & ~b(r_j1) & ..., h) over the
/// defeaters r_j of the rule in index order, (b, h) if it has none.
std::vector<IOPair> rewrite_defeaters(const Theory& theory);
std::vector<IOPair> rewrite_defeaters(std::span<const Rule> norms, const DefeatGraph& graph);

/// Both engines on one (theory, input, head) triple. The theory must have
/// no defaults and the input must be consistent.
struct FaithfulnessReport {
  BooleanFormula input = BooleanFormula::top();
  BooleanFormula head = BooleanFormula::top();
  std::vector<IOPair> rewritten;
  MaxFamily family;

  /// OH(x | a) in the preference model.
  bool hansson = false;
  /// x in the full-meet output.
  bool fullmeet = false;
  /// O(x | a) in the preference model (with <>a among the facts).
  bool obligation = false;
  /// Worlds where best-a membership and the disjunction of the maximal
  /// families' materializations disagree.
  std::vector<Valuation> bridge_mismatches;
  Vocabulary vocab;

  bool hansson_agrees() const { return hansson == fullmeet; }
  bool forward_holds() const { return !fullmeet || obligation; }
  /// Informative only: O(x | a) holds without x in the full meet.
  bool converse_counterexample() const { return obligation && !fullmeet; }
  bool bridge_holds() const { return bridge_mismatches.empty(); }
  bool passed() const { return hansson_agrees() && forward_holds() && bridge_holds(); }
};

FaithfulnessReport faithfulness_check(const Theory& theory, const BooleanFormula& a,
                                      const BooleanFormula& x);

}  // namespace bipref

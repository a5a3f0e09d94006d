#pragma once

// Theories (facts, normality conditionals, obligations), the overriding
// relation between obligations and the coherence test on defaults.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/index_set.hpp"
#include "bipref/propkernel.hpp"

namespace bipref {

/// Hard information plus the two rule sets. Rule indices are positions in
/// `defaults` / `norms` and stay stable after construction.
class Theory {
 public:
  /// Each adder returns false (and stores nothing) for a duplicate.
  bool add_fact(AlethicFormula f);
  bool add_default(Rule r);
  bool add_norm(Rule r);
  /// Declares atoms; the first declaration order is kept for display.
  void declare_atoms(const std::vector<std::string>& atoms);

  const std::vector<AlethicFormula>& gamma() const { return gamma_; }
  const std::vector<Rule>& defaults() const { return defaults_; }
  const std::vector<Rule>& norms() const { return norms_; }
  const std::vector<std::string>& declared_atoms() const { return declared_; }

  /// Declared atoms together with every atom occurring in the theory.
  std::vector<std::string> atoms() const;
  Vocabulary vocabulary() const { return Vocabulary(atoms()); }
  /// Display order for world labels: declared atoms first (in declaration
  /// order), then the remaining atoms of `vocab` lexicographically.
  std::vector<std::string> display_order(const Vocabulary& vocab) const;

  /// Same theory without normality conditionals.
  Theory without_defaults() const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::vector<AlethicFormula> gamma_;
  std::vector<Rule> defaults_;
  std::vector<Rule> norms_;
  std::vector<std::string> declared_;
};

/// r_j overrides r_i given facts `gamma`. Both must be obligations.
bool defeats(const Rule& rj, const Rule& ri, std::span<const AlethicFormula> gamma);

/// Overriding relation over obligation indices.
class DefeatGraph {
 public:
  DefeatGraph() = default;
  explicit DefeatGraph(std::size_t size) : defeaters_(size) {}

  std::size_t size() const { return defeaters_.size(); }
  void add_edge(std::size_t j, std::size_t i) { defeaters_.at(i).insert(j); }
  bool has_edge(std::size_t j, std::size_t i) const { return defeaters_.at(i).contains(j); }
  /// D(r_i): indices of the rules overriding r_i.
  IndexSet defeaters(std::size_t i) const { return defeaters_.at(i); }
  /// (j, i) pairs with r_j overriding r_i, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const DefeatGraph&, const DefeatGraph&) = default;

 private:
  std::vector<IndexSet> defeaters_;
};

DefeatGraph defeat_graph(std::span<const Rule> norms, std::span<const AlethicFormula> gamma);
DefeatGraph defeat_graph(const Theory& theory);

/// {body -> head : r in rules} restricted to the indices in `subset`.
std::vector<BooleanFormula> materialization(std::span<const Rule> rules, IndexSet subset);
std::vector<BooleanFormula> materialization(std::span<const Rule> rules);

/// Largest rule set accepted by the subset-enumerating procedures.
inline constexpr std::size_t kMaxEnumeratedRules = 24;

struct CoherenceReport {
  bool coherent = true;
  /// Nonempty X with m(X) |= AND not b(r), when incoherent.
  IndexSet witness;
};

/// Coherence by enumeration of nonempty subsets of `defaults`.
CoherenceReport check_coherence(std::span<const Rule> defaults);
bool coherent(std::span<const Rule> defaults);

/// Truth sets of bodies and materializations of a rule list over one
/// vocabulary; shared by the set-based procedures.
struct RuleTables {
  RuleTables(std::span<const Rule> rules, const Vocabulary& vocab);

  Vocabulary vocab;
  std::vector<WorldSet> body;
  std::vector<WorldSet> head;
  std::vector<WorldSet> material;

  /// Worlds satisfying m(X).
  WorldSet material_of(IndexSet x) const;
};

/// Joint atoms of a rule list.
std::vector<std::string> atoms_of(std::span<const Rule> rules);

}  // namespace bipref

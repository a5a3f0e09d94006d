#pragma once

// The canonical model of a theory (every valuation over its vocabulary
// once), truth conditions of all connectives, and defeasible entailment.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/ideality.hpp"
#include "bipref/normality.hpp"
#include "bipref/norms.hpp"
#include "bipref/propkernel.hpp"

namespace bipref {

struct ModelOptions {
  /// Build even when the normality conditionals are incoherent.
  bool allow_incoherent = false;
  /// Atoms added to the theory's own vocabulary.
  std::vector<std::string> extra_atoms;
};

/// Worlds, orderings and per-world tables. A restricted copy shares the
/// tables (falsification and violation sets only depend on the rules) and
/// only narrows the set of worlds the model contains.
class CanonicalModel {
 public:
  /// Throws IncoherentError unless the defaults are coherent or the
  /// override is set, ResourceLimitError beyond kMaxAtoms.
  static CanonicalModel build(const Theory& theory, const ModelOptions& options = {});

  /// Same orderings, worlds limited to `domain` (nonempty).
  CanonicalModel restricted_to(const WorldSet& domain) const;

  const Theory& theory() const { return shared_->theory; }
  const Vocabulary& vocab() const { return shared_->vocab; }
  const std::vector<std::string>& display_order() const { return shared_->order; }
  const DefeatGraph& defeat_graph() const { return shared_->graph; }
  const NormalityRanking& normality() const { return shared_->normality; }
  const IdealityOrder& ideality() const { return shared_->ideality; }
  const CoherenceReport& coherence() const { return shared_->coherence; }
  const WorldSet& domain() const { return domain_; }

  std::string label(Valuation w) const { return w.label(vocab(), display_order()); }
  IndexSet falsified(Valuation w) const { return normality().falsified(w); }
  IndexSet violated(Valuation w) const { return ideality().violated(w); }
  const NormalityTuple& tuple(Valuation w) const { return normality().tuple(w); }

  /// Worlds of the model satisfying the formula.
  WorldSet truth_set(const BooleanFormula& f) const;
  WorldSet truth_set(const AlethicFormula& f) const;
  /// Worlds of the model satisfying every fact.
  WorldSet gamma_worlds() const;

  bool normality_geq(Valuation w1, Valuation w2) const { return normality().geq(w1, w2); }
  bool ideality_geq(Valuation w1, Valuation w2) const { return ideality().geq(w1, w2); }
  WorldSet max_normal(const WorldSet& s) const { return normality().max_normal(s & domain_); }
  WorldSet max_ideal(const WorldSet& s) const { return ideality().max_ideal(s & domain_); }
  bool lifted_geq(const WorldSet& u, const WorldSet& v) const {
    return ideality().lifted_geq(u & domain_, v & domain_);
  }

 private:
  struct Shared {
    Theory theory;
    Vocabulary vocab;
    std::vector<std::string> order;
    CoherenceReport coherence;
    DefeatGraph graph;
    NormalityRanking normality;
    IdealityOrder ideality;
  };
  CanonicalModel(std::shared_ptr<const Shared> shared, WorldSet domain)
      : shared_(std::move(shared)), domain_(std::move(domain)) {}

  std::shared_ptr<const Shared> shared_;
  WorldSet domain_;
};

/// A => B: the most normal A-worlds are B-worlds.
bool eval_normality(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b);
/// O(B | A): the most normal A&~B-worlds are not at least as good as the
/// most normal A&B-worlds.
bool eval_obligation(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b);
/// O(B | A) by its exists-forall form: some most normal A&B-world v is
/// such that no most normal A&~B-world is at least as good as v.
bool eval_exists_forall(const CanonicalModel& m, const BooleanFormula& a,
                        const BooleanFormula& b);
/// O(B | A) for models without normality conditionals: some A&B-world v
/// with every world at least as good as v satisfying A -> B. Throws
/// PreconditionError if the theory has defaults.
bool eval_flat_exists_forall(const CanonicalModel& m, const BooleanFormula& a,
                             const BooleanFormula& b);
/// OH(B | A): the best A-worlds are B-worlds.
bool eval_hansson(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b);

bool eval(const CanonicalModel& m, Valuation w, const AlethicFormula& f);
bool eval(const CanonicalModel& m, Valuation w, const Query& q);

/// A world illustrating the verdict of a conditional query in `m` (for a
/// negated query, the illustration of the unnegated conditional):
///   O true: a most normal A&B-world no A&~B-rival matches, fewest violations;
///   O false: a most normal A&~B-world dominating the most A&B-worlds;
///   => false: a most normal A-world falsifying B;
///   OH false: a best A-world falsifying B.
/// nullopt when nothing fits (e.g. => true, or no A&B-world at all).
std::optional<Valuation> conditional_witness(const CanonicalModel& m, const Query& q);

enum class EntailmentMode { kReplete, kAllModels };

/// Largest vocabulary for which all models are enumerated.
inline constexpr std::size_t kMaxAllModelsAtoms = 4;

struct Verdict {
  bool entailed = false;
  /// Counter-world on failure; for conditionals, the world from
  /// conditional_witness (also reported on success when there is one).
  std::optional<Valuation> world;
  /// Worlds of the refuting model, all-models mode only.
  std::optional<WorldSet> model;
  /// Vocabulary and display order the world refers to.
  Vocabulary vocab;
  std::vector<std::string> order;

  std::string world_label() const;
  std::string model_label() const;
};

/// Delta |~ q: every world of the model(s) satisfying the facts satisfies q.
Verdict entails(const Theory& theory, const Query& q,
                EntailmentMode mode = EntailmentMode::kReplete,
                const ModelOptions& options = {});

/// Entailment in a prebuilt model whose vocabulary covers the query.
Verdict entails_in(const CanonicalModel& m, const Query& q);

/// Componentwise inclusion of facts and rule sets.
bool contained_in(const Theory& d1, const Theory& d2);

}  // namespace bipref

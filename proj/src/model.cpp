#include "bipref/model.hpp"

#include <algorithm>

#include "bipref/error.hpp"

namespace bipref {

// ------------------------------------------------------------ CanonicalModel

CanonicalModel CanonicalModel::build(const Theory& theory, const ModelOptions& options) {
  Vocabulary vocab = Vocabulary(theory.atoms()).merged_with(options.extra_atoms);
  CoherenceReport coherence = check_coherence(theory.defaults());
  if (!coherence.coherent && !options.allow_incoherent) {
    std::string rules;
    for (std::size_t i : coherence.witness) {
      if (!rules.empty()) rules += ", ";
      rules += theory.defaults()[i].to_string();
    }
    throw IncoherentError("normality conditionals are incoherent: {" + rules + "}");
  }
  DefeatGraph graph = bipref::defeat_graph(theory);
  auto order = theory.display_order(vocab);
  NormalityRanking normality(theory.defaults(), vocab);
  IdealityOrder ideality(theory.norms(), graph, vocab);
  std::shared_ptr<const Shared> shared(new Shared{theory, vocab, std::move(order),
                                                  std::move(coherence), std::move(graph),
                                                  std::move(normality), std::move(ideality)});
  return CanonicalModel(std::move(shared), WorldSet::all(vocab));
}

CanonicalModel CanonicalModel::restricted_to(const WorldSet& domain) const {
  if (domain.universe() != vocab().world_count()) {
    throw PreconditionError("domain over a different vocabulary");
  }
  if (domain.empty()) throw PreconditionError("a model needs at least one world");
  return CanonicalModel(shared_, domain);
}

WorldSet CanonicalModel::truth_set(const BooleanFormula& f) const {
  return bipref::truth_set(f, vocab()) & domain_;
}

WorldSet CanonicalModel::truth_set(const AlethicFormula& f) const {
  return truth_set_in(f, vocab(), domain_);
}

WorldSet CanonicalModel::gamma_worlds() const {
  WorldSet s = domain_;
  for (const AlethicFormula& g : theory().gamma()) s &= truth_set(g);
  return s;
}

// --------------------------------------------------------------- evaluation

namespace {

struct Split {
  WorldSet yes;  // max_N of A & B
  WorldSet no;   // max_N of A & ~B
};

Split split(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b) {
  const WorldSet sa = m.truth_set(a);
  const WorldSet sb = m.truth_set(b);
  return {m.max_normal(sa & sb), m.max_normal(sa & sb.complement())};
}

}  // namespace

bool eval_normality(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b) {
  return m.max_normal(m.truth_set(a)).is_subset_of(m.truth_set(b));
}

bool eval_obligation(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b) {
  const Split s = split(m, a, b);
  return !m.lifted_geq(s.no, s.yes);
}

bool eval_exists_forall(const CanonicalModel& m, const BooleanFormula& a,
                        const BooleanFormula& b) {
  const Split s = split(m, a, b);
  const std::vector<IndexSet> rivals = violation_profile(m.ideality(), s.no);
  for (Valuation v : s.yes) {
    const IndexSet vv = m.violated(v);
    if (std::none_of(rivals.begin(), rivals.end(),
                     [&](IndexSet u) { return ideality_geq(u, vv); })) {
      return true;
    }
  }
  return false;
}

bool eval_flat_exists_forall(const CanonicalModel& m, const BooleanFormula& a,
                             const BooleanFormula& b) {
  if (!m.theory().defaults().empty()) {
    throw PreconditionError("the flat form applies to theories without defaults");
  }
  const WorldSet sab = m.truth_set(conjunction(a, b));
  const WorldSet bad = m.truth_set(conjunction(a, negation(b)));
  const std::vector<IndexSet> rivals = violation_profile(m.ideality(), bad);
  for (Valuation v : sab) {
    const IndexSet vv = m.violated(v);
    if (std::none_of(rivals.begin(), rivals.end(),
                     [&](IndexSet u) { return ideality_geq(u, vv); })) {
      return true;
    }
  }
  return false;
}

bool eval_hansson(const CanonicalModel& m, const BooleanFormula& a, const BooleanFormula& b) {
  return m.max_ideal(m.truth_set(a)).is_subset_of(m.truth_set(b));
}

bool eval(const CanonicalModel& m, Valuation w, const AlethicFormula& f) {
  return m.truth_set(f).contains(w);
}

bool eval(const CanonicalModel& m, Valuation w, const Query& q) {
  bool v = false;
  switch (q.kind()) {
    case QueryKind::kAlethic:
      return eval(m, w, q.formula());
    case QueryKind::kNormality:
      v = eval_normality(m, q.body(), q.head());
      break;
    case QueryKind::kObligation:
      v = eval_obligation(m, q.body(), q.head());
      break;
    case QueryKind::kHanssonObligation:
      v = eval_hansson(m, q.body(), q.head());
      break;
  }
  return q.negated() ? !v : v;
}

// ---------------------------------------------------------------- witnesses

namespace {

std::optional<Valuation> first_of(const WorldSet& s) { return s.first(); }

std::optional<Valuation> obligation_witness(const CanonicalModel& m, const BooleanFormula& a,
                                            const BooleanFormula& b, bool holds) {
  const Split s = split(m, a, b);
  if (holds) {
    const std::vector<IndexSet> rivals = violation_profile(m.ideality(), s.no);
    std::optional<Valuation> best;
    for (Valuation v : s.yes) {
      const IndexSet vv = m.violated(v);
      if (std::any_of(rivals.begin(), rivals.end(),
                      [&](IndexSet u) { return ideality_geq(u, vv); })) {
        continue;
      }
      if (!best || vv.size() < m.violated(*best).size()) best = v;
    }
    return best;
  }
  if (s.yes.empty()) return std::nullopt;
  const std::vector<IndexSet> targets = violation_profile(m.ideality(), s.yes);
  std::optional<Valuation> best;
  std::size_t best_count = 0;
  for (Valuation u : s.no) {
    const IndexSet uu = m.violated(u);
    const auto count = static_cast<std::size_t>(std::count_if(
        targets.begin(), targets.end(), [&](IndexSet v) { return ideality_geq(uu, v); }));
    if (!best || count > best_count ||
        (count == best_count && uu.size() < m.violated(*best).size())) {
      best = u;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

std::optional<Valuation> conditional_witness(const CanonicalModel& m, const Query& q) {
  if (!q.is_conditional()) return std::nullopt;
  const BooleanFormula& a = q.body();
  const BooleanFormula& b = q.head();
  switch (q.kind()) {
    case QueryKind::kNormality:
      return first_of(m.max_normal(m.truth_set(a)) & m.truth_set(b).complement());
    case QueryKind::kObligation:
      return obligation_witness(m, a, b, eval_obligation(m, a, b));
    case QueryKind::kHanssonObligation:
      return first_of(m.max_ideal(m.truth_set(a)) & m.truth_set(b).complement());
    case QueryKind::kAlethic:
      break;
  }
  return std::nullopt;
}

// --------------------------------------------------------------- entailment

std::string Verdict::world_label() const {
  return world ? world->label(vocab, order) : std::string();
}

std::string Verdict::model_label() const {
  if (!model) return {};
  std::string out = "{";
  bool first = true;
  for (Valuation w : *model) {
    if (!first) out += ", ";
    out += w.label(vocab, order);
    first = false;
  }
  return out + "}";
}

Verdict entails_in(const CanonicalModel& m, const Query& q) {
  if (!m.vocab().covers(atoms_of(q))) {
    throw PreconditionError("query mentions atoms outside the model: " + q.to_string());
  }
  Verdict out;
  out.vocab = m.vocab();
  out.order = m.display_order();
  const WorldSet gw = m.gamma_worlds();
  if (q.kind() == QueryKind::kAlethic) {
    const WorldSet failing = gw & m.truth_set(q.formula()).complement();
    out.entailed = failing.empty();
    out.world = failing.first();
    return out;
  }
  out.entailed = gw.empty() || eval(m, Valuation{}, q);
  out.world = conditional_witness(m, q);
  return out;
}

Verdict entails(const Theory& theory, const Query& q, EntailmentMode mode,
                const ModelOptions& options) {
  ModelOptions opts = options;
  for (std::string& a : atoms_of(q)) opts.extra_atoms.push_back(std::move(a));
  const CanonicalModel full = CanonicalModel::build(theory, opts);
  if (mode == EntailmentMode::kReplete) return entails_in(full, q);

  const std::size_t n = full.vocab().world_count();
  if (full.vocab().size() > kMaxAllModelsAtoms) {
    throw ResourceLimitError("all-models mode is limited to " +
                             std::to_string(kMaxAllModelsAtoms) + " atoms");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const CanonicalModel sub = full.restricted_to(WorldSet::from_words(n, {mask}));
    Verdict v = entails_in(sub, q);
    if (!v.entailed) {
      if (!v.world) v.world = sub.gamma_worlds().first();
      v.model = sub.domain();
      return v;
    }
  }
  Verdict v = entails_in(full, q);
  return v;
}

bool contained_in(const Theory& d1, const Theory& d2) {
  auto included = [](const auto& xs, const auto& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const auto& x) {
      return std::find(ys.begin(), ys.end(), x) != ys.end();
    });
  };
  return included(d1.gamma(), d2.gamma()) && included(d1.defaults(), d2.defaults()) &&
         included(d1.norms(), d2.norms());
}

}  // namespace bipref

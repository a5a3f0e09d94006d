#include "bipref/norms.hpp"

#include <algorithm>

#include "bipref/error.hpp"

namespace bipref {

namespace {

template <typename T>
bool push_unique(std::vector<T>& v, T item) {
  if (std::find(v.begin(), v.end(), item) != v.end()) return false;
  v.push_back(std::move(item));
  return true;
}

void require_obligation(const Rule& r) {
  if (r.kind != RuleKind::kObligation) {
    throw PreconditionError("defeat is defined between obligations only: " + r.to_string());
  }
}

}  // namespace

// -------------------------------------------------------------------- Theory

bool Theory::add_fact(AlethicFormula f) { return push_unique(gamma_, std::move(f)); }

bool Theory::add_default(Rule r) {
  if (r.kind != RuleKind::kNormality) {
    throw PreconditionError("not a normality conditional: " + r.to_string());
  }
  return push_unique(defaults_, std::move(r));
}

bool Theory::add_norm(Rule r) {
  if (r.kind != RuleKind::kObligation) {
    throw PreconditionError("not an obligation: " + r.to_string());
  }
  return push_unique(norms_, std::move(r));
}

void Theory::declare_atoms(const std::vector<std::string>& atoms) {
  for (const std::string& a : atoms) {
    if (!is_valid_atom_name(a)) throw ParseError("invalid atom name '" + a + "'", 0);
    push_unique(declared_, a);
  }
}

std::vector<std::string> Theory::atoms() const {
  std::vector<std::string> out = declared_;
  std::sort(out.begin(), out.end());
  for (const AlethicFormula& f : gamma_) out = merge_atoms(out, atoms_of(f));
  for (const Rule& r : defaults_) out = merge_atoms(out, atoms_of(r));
  for (const Rule& r : norms_) out = merge_atoms(out, atoms_of(r));
  return out;
}

std::vector<std::string> Theory::display_order(const Vocabulary& vocab) const {
  std::vector<std::string> out;
  for (const std::string& a : declared_) {
    if (vocab.contains(a)) out.push_back(a);
  }
  for (const std::string& a : vocab.atoms()) {
    if (std::find(declared_.begin(), declared_.end(), a) == declared_.end()) out.push_back(a);
  }
  return out;
}

Theory Theory::without_defaults() const {
  Theory t = *this;
  t.defaults_.clear();
  return t;
}

// -------------------------------------------------------------------- defeat

bool defeats(const Rule& rj, const Rule& ri, std::span<const AlethicFormula> gamma) {
  require_obligation(rj);
  require_obligation(ri);
  // (ii) strictly more specific body
  if (!pl_entails({rj.body}, ri.body) || pl_entails({ri.body}, rj.body)) return false;
  // (iii) not a contrary-to-duty
  if (!pl_consistent({ri.head, rj.body})) return false;
  // (i) conflicting heads given the facts
  std::vector<AlethicFormula> s(gamma.begin(), gamma.end());
  s.emplace_back(ri.head);
  s.emplace_back(rj.head);
  return !s5_consistent(s);
}

std::vector<std::pair<std::size_t, std::size_t>> DefeatGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < defeaters_.size(); ++i) {
    for (std::size_t j : defeaters_[i]) out.emplace_back(j, i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DefeatGraph defeat_graph(std::span<const Rule> norms, std::span<const AlethicFormula> gamma) {
  if (norms.size() > IndexSet::kCapacity) {
    throw ResourceLimitError("at most 64 obligations are supported");
  }
  DefeatGraph g(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    for (std::size_t j = 0; j < norms.size(); ++j) {
      if (i != j && defeats(norms[j], norms[i], gamma)) g.add_edge(j, i);
    }
  }
  return g;
}

DefeatGraph defeat_graph(const Theory& theory) {
  return defeat_graph(theory.norms(), theory.gamma());
}

// ---------------------------------------------------------- materialization

std::vector<BooleanFormula> materialization(std::span<const Rule> rules, IndexSet subset) {
  std::vector<BooleanFormula> out;
  for (std::size_t i : subset) {
    if (i >= rules.size()) throw PreconditionError("rule index out of range");
    BooleanFormula m = implication(rules[i].body, rules[i].head);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

std::vector<BooleanFormula> materialization(std::span<const Rule> rules) {
  return materialization(rules, IndexSet::first(rules.size()));
}

std::vector<std::string> atoms_of(std::span<const Rule> rules) {
  std::vector<std::string> out;
  for (const Rule& r : rules) out = merge_atoms(out, atoms_of(r));
  return out;
}

// ---------------------------------------------------------------- RuleTables

RuleTables::RuleTables(std::span<const Rule> rules, const Vocabulary& v) : vocab(v) {
  if (rules.size() > IndexSet::kCapacity) {
    throw ResourceLimitError("at most 64 rules per set are supported");
  }
  for (const Rule& r : rules) {
    body.push_back(truth_set(r.body, vocab));
    head.push_back(truth_set(r.head, vocab));
    material.push_back(body.back().complement() | head.back());
  }
}

WorldSet RuleTables::material_of(IndexSet x) const {
  WorldSet s = WorldSet::all(vocab);
  for (std::size_t i : x) s &= material.at(i);
  return s;
}

// ----------------------------------------------------------------- coherence

CoherenceReport check_coherence(std::span<const Rule> defaults) {
  const RuleTables t(defaults, Vocabulary(atoms_of(defaults)));
  const std::size_t n = defaults.size();

  // Pre-screen: the limit of the exceptionality sequence, if nonempty, is
  // itself an incoherent subset.
  IndexSet e = IndexSet::first(n);
  while (true) {
    const WorldSet m = t.material_of(e);
    IndexSet next;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m & t.body[i]).empty()) next.insert(i);
    }
    if (next == e) break;
    e = next;
  }
  if (!e.empty()) return {false, e};

  if (n > kMaxEnumeratedRules) {
    throw ResourceLimitError("coherence check enumerates subsets of at most " +
                             std::to_string(kMaxEnumeratedRules) + " conditionals");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const IndexSet x = IndexSet::from_mask(mask);
    const WorldSet m = t.material_of(x);
    bool all_excluded = true;
    for (std::size_t i : x) {
      if (!(m & t.body[i]).empty()) {
        all_excluded = false;
        break;
      }
    }
    if (all_excluded) return {false, x};
  }
  return {true, {}};
}

bool coherent(std::span<const Rule> defaults) { return check_coherence(defaults).coherent; }

}  // namespace bipref

#include "bipref/random_theory.hpp"

#include <algorithm>

#include "bipref/error.hpp"

namespace bipref {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

constexpr int kMaxRedraws = 1000;

}  // namespace

std::vector<std::string> atom_names(std::size_t n) {
  if (n > 26) throw ResourceLimitError("at most 26 generated atom names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

BooleanFormula random_conjunction(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                                  std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> pool = atoms;
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t len = std::min(uniform(rng, min_len, max_len), pool.size());
  std::vector<BooleanFormula> lits;
  for (std::size_t i = 0; i < len; ++i) {
    BooleanFormula lit = BooleanFormula::atom(pool[i]);
    lits.push_back(uniform(rng, 0, 1) != 0U ? lit : negation(lit));
  }
  return conjunction_of(lits);
}

BooleanFormula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              std::size_t depth) {
  const std::size_t pick = uniform(rng, 0, depth == 0 ? 2 : 8);
  switch (pick) {
    case 0:
      return uniform(rng, 0, 3) == 0 ? BooleanFormula::top() : BooleanFormula::bottom();
    case 1:
    case 2:
      return BooleanFormula::atom(atoms[uniform(rng, 0, atoms.size() - 1)]);
    case 3:
      return negation(random_formula(rng, atoms, depth - 1));
    case 4:
    case 5:
      return conjunction(random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    case 6:
      return disjunction(random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    case 7:
      return implication(random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    default:
      return biconditional(random_formula(rng, atoms, depth - 1),
                           random_formula(rng, atoms, depth - 1));
  }
}

Theory random_theory(std::mt19937_64& rng, const RandomTheoryParams& params) {
  if (params.atoms == 0) throw PreconditionError("random theories need at least one atom");
  const std::vector<std::string> atoms = atom_names(params.atoms);
  auto draw_rule = [&](RuleKind kind) {
    return Rule{kind, random_conjunction(rng, atoms, 0, 2), random_conjunction(rng, atoms, 1, 2)};
  };

  Theory t;
  t.declare_atoms(atoms);

  const std::size_t n_defaults = uniform(rng, 0, params.max_defaults);
  std::vector<Rule> defaults;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxRedraws) throw ResourceLimitError("no coherent default set drawn");
    defaults.clear();
    for (std::size_t i = 0; i < n_defaults; ++i) defaults.push_back(draw_rule(RuleKind::kNormality));
    if (coherent(defaults)) break;
  }
  for (Rule& r : defaults) t.add_default(std::move(r));

  const std::size_t n_norms = uniform(rng, 0, params.max_norms);
  for (std::size_t i = 0; i < n_norms; ++i) t.add_norm(draw_rule(RuleKind::kObligation));

  const std::size_t n_facts = uniform(rng, 0, params.max_facts);
  for (std::size_t i = 0; i < n_facts; ++i) {
    t.add_fact(diamond(random_conjunction(rng, atoms, 1, 2)));
  }
  return t;
}

}  // namespace bipref

#include "bipref/iol.hpp"

#include <algorithm>
#include <bit>

#include "bipref/error.hpp"
#include "bipref/model.hpp"

namespace bipref {

std::string IOPair::to_string() const {
  return "(" + body.to_string() + ", " + head.to_string() + ")";
}

bool out4plus_contains(std::span<const IOPair> n, IndexSet subset, const BooleanFormula& a,
                       const BooleanFormula& x) {
  std::vector<BooleanFormula> premises{a};
  for (std::size_t i : subset) premises.push_back(n[i].material());
  return pl_entails(premises, x);
}

bool out4plus_contains(std::span<const IOPair> n, const BooleanFormula& a,
                       const BooleanFormula& x) {
  return out4plus_contains(n, IndexSet::first(n.size()), a, x);
}

namespace {

// Maximal H with constraints u {a} u m(H) consistent, by decreasing size.
MaxFamily constrained_maxfamily(std::span<const IOPair> n, const BooleanFormula& a,
                                std::span<const BooleanFormula> constraints) {
  if (n.size() > kMaxEnumeratedRules) {
    throw ResourceLimitError("maximal families are computed for at most " +
                             std::to_string(kMaxEnumeratedRules) + " norms");
  }
  std::vector<BooleanFormula> base(constraints.begin(), constraints.end());
  base.push_back(a);
  MaxFamily out;
  if (!pl_consistent(base)) {
    out.inconsistent_input = true;
    return out;
  }
  std::vector<BooleanFormula> material;
  for (const IOPair& p : n) material.push_back(p.material());

  const std::size_t size = n.size();
  std::vector<std::vector<std::uint64_t>> by_size(size + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  for (std::size_t k = size + 1; k-- > 0;) {
    for (std::uint64_t mask : by_size[k]) {
      const IndexSet h = IndexSet::from_mask(mask);
      if (std::any_of(out.members.begin(), out.members.end(),
                      [&](IndexSet m) { return h.is_subset_of(m); })) {
        continue;
      }
      std::vector<BooleanFormula> fs = base;
      for (std::size_t i : h) fs.push_back(material[i]);
      if (pl_consistent(fs)) out.members.push_back(h);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

MaxFamily maxfamily(std::span<const IOPair> n, const BooleanFormula& a) {
  return constrained_maxfamily(n, a, {});
}

bool fullmeet_contains(std::span<const IOPair> n, const BooleanFormula& a,
                       const BooleanFormula& x) {
  const MaxFamily f = maxfamily(n, a);
  if (f.inconsistent_input) throw PreconditionError("inconsistent input " + a.to_string());
  return std::all_of(f.members.begin(), f.members.end(),
                     [&](IndexSet h) { return out4plus_contains(n, h, a, x); });
}

std::vector<IOPair> rewrite_defeaters(std::span<const Rule> norms, const DefeatGraph& graph) {
  std::vector<IOPair> out;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    BooleanFormula body = norms[i].body;
    for (std::size_t j : graph.defeaters(i)) body = conjunction(body, negation(norms[j].body));
    out.push_back({body, norms[i].head});
  }
  return out;
}

std::vector<IOPair> rewrite_defeaters(const Theory& theory) {
  return rewrite_defeaters(theory.norms(), defeat_graph(theory));
}

FaithfulnessReport faithfulness_check(const Theory& theory, const BooleanFormula& a,
                                      const BooleanFormula& x) {
  if (!theory.defaults().empty()) {
    throw PreconditionError("the faithfulness check needs a theory without defaults");
  }
  if (!pl_consistent({a})) throw PreconditionError("inconsistent input " + a.to_string());

  FaithfulnessReport r;
  r.input = a;
  r.head = x;
  r.rewritten = rewrite_defeaters(theory);
  r.family = maxfamily(r.rewritten, a);
  r.fullmeet = std::all_of(r.family.members.begin(), r.family.members.end(),
                           [&](IndexSet h) { return out4plus_contains(r.rewritten, h, a, x); });

  ModelOptions opts;
  opts.extra_atoms = merge_atoms(atoms_of(a), atoms_of(x));
  const CanonicalModel m = CanonicalModel::build(theory, opts);
  r.vocab = m.vocab();
  r.hansson = eval_hansson(m, a, x);
  r.obligation = eval_obligation(m, a, x);

  std::vector<BooleanFormula> disjuncts;
  for (IndexSet h : r.family.members) {
    std::vector<BooleanFormula> conj;
    for (std::size_t i : h) conj.push_back(r.rewritten[i].material());
    disjuncts.push_back(conjunction_of(conj));
  }
  const BooleanFormula io_best = conjunction(a, disjunction_of(disjuncts));
  const WorldSet best = m.max_ideal(m.truth_set(a));
  for (std::uint32_t w = 0; w < m.vocab().world_count(); ++w) {
    if (best.contains(Valuation{w}) != satisfies(Valuation{w}, io_best, m.vocab())) {
      r.bridge_mismatches.push_back(Valuation{w});
    }
  }
  return r;
}

}  // namespace bipref

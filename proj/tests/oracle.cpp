#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using bipref::Connective;
using bipref::Node;

std::vector<Assignment> assignments(const std::vector<std::string>& atoms) {
  std::vector<Assignment> out(1);
  for (const std::string& a : atoms) {
    std::vector<Assignment> next;
    for (const Assignment& w : out) {
      Assignment f = w;
      f[a] = false;
      Assignment t = w;
      t[a] = true;
      next.push_back(f);
      next.push_back(t);
    }
    out = std::move(next);
  }
  return out;
}

bool holds(const Node& n, const Assignment& w, const std::vector<Assignment>& worlds) {
  switch (n.op) {
    case Connective::kTop:
      return true;
    case Connective::kBottom:
      return false;
    case Connective::kAtom:
      return w.at(n.atom);
    case Connective::kNot:
      return !holds(*n.left, w, worlds);
    case Connective::kAnd:
      return holds(*n.left, w, worlds) && holds(*n.right, w, worlds);
    case Connective::kOr:
      return holds(*n.left, w, worlds) || holds(*n.right, w, worlds);
    case Connective::kImplies:
      return !holds(*n.left, w, worlds) || holds(*n.right, w, worlds);
    case Connective::kIff:
      return holds(*n.left, w, worlds) == holds(*n.right, w, worlds);
    case Connective::kBox:
      return std::all_of(worlds.begin(), worlds.end(),
                         [&](const Assignment& u) { return holds(*n.left, u, worlds); });
    case Connective::kDiamond:
      return std::any_of(worlds.begin(), worlds.end(),
                         [&](const Assignment& u) { return holds(*n.left, u, worlds); });
  }
  throw std::logic_error("bad node");
}

bool holds(const BooleanFormula& f, const Assignment& w) { return holds(f.node(), w, {}); }

namespace {

std::vector<std::string> joint(const std::vector<BooleanFormula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out = bipref::merge_atoms(out, bipref::atoms_of(f));
  return out;
}

std::size_t modal_count(const Node& n) {
  std::size_t k = (n.op == Connective::kBox || n.op == Connective::kDiamond) ? 1 : 0;
  if (n.left) k += modal_count(*n.left);
  if (n.right) k += modal_count(*n.right);
  return k;
}

}  // namespace

bool entails(const std::vector<BooleanFormula>& premises, const BooleanFormula& f) {
  std::vector<BooleanFormula> all = premises;
  all.push_back(f);
  for (const Assignment& w : assignments(joint(all))) {
    const bool prem = std::all_of(premises.begin(), premises.end(),
                                  [&](const BooleanFormula& p) { return holds(p, w); });
    if (prem && !holds(f, w)) return false;
  }
  return true;
}

bool consistent(const std::vector<BooleanFormula>& fs) {
  return !entails(fs, BooleanFormula::bottom());
}

bool s5_sat(const std::vector<AlethicFormula>& fs) {
  std::vector<std::string> atoms;
  std::size_t k = 0;
  for (const auto& f : fs) {
    atoms = bipref::merge_atoms(atoms, bipref::atoms_of(f));
    k += modal_count(f.node());
  }
  const std::vector<Assignment> all = assignments(atoms);
  // A satisfiable set has a model with at most k + 1 worlds: the actual
  // world plus one witness per modal subformula.
  const std::size_t limit = std::min(all.size(), k + 1);
  std::vector<std::size_t> pick;
  auto try_model = [&](const std::vector<Assignment>& worlds) {
    for (const Assignment& w : worlds) {
      if (std::all_of(fs.begin(), fs.end(),
                      [&](const AlethicFormula& f) { return holds(f.node(), w, worlds); })) {
        return true;
      }
    }
    return false;
  };
  // Enumerate combinations of sizes 1..limit.
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<bool> sel(all.size(), false);
    std::fill(sel.begin(), sel.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Assignment> worlds;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (sel[i]) worlds.push_back(all[i]);
      }
      if (try_model(worlds)) return true;
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  return false;
}

bool defeats(const Rule& rj, const Rule& ri, const std::vector<AlethicFormula>& gamma) {
  std::vector<AlethicFormula> s = gamma;
  s.emplace_back(ri.head);
  s.emplace_back(rj.head);
  const bool clause_i = !s5_sat(s);
  const bool clause_ii = entails({rj.body}, ri.body) && !entails({ri.body}, rj.body);
  const bool clause_iii = consistent({ri.head, rj.body});
  return clause_i && clause_ii && clause_iii;
}

std::vector<Indices> defeaters(const std::vector<Rule>& norms,
                               const std::vector<AlethicFormula>& gamma) {
  std::vector<Indices> out(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) {
    for (std::size_t j = 0; j < norms.size(); ++j) {
      if (defeats(norms[j], norms[i], gamma)) out[i].insert(j);
    }
  }
  return out;
}

std::vector<BooleanFormula> material(const std::vector<Rule>& rules, const Indices& x) {
  std::vector<BooleanFormula> out;
  for (std::size_t i : x) out.push_back(bipref::implication(rules[i].body, rules[i].head));
  return out;
}

bool coherent(const std::vector<Rule>& defaults) {
  const std::size_t n = defaults.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Indices x;
    std::vector<BooleanFormula> negs;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) {
        x.insert(i);
        negs.push_back(bipref::negation(defaults[i].body));
      }
    }
    if (entails(material(defaults, x), bipref::conjunction_of(negs))) return false;
  }
  return true;
}

std::vector<Indices> lm_levels(const std::vector<Rule>& defaults) {
  Indices e;
  for (std::size_t i = 0; i < defaults.size(); ++i) e.insert(i);
  std::vector<Indices> levels{e};
  while (true) {
    Indices next;
    const auto m = material(defaults, levels.back());
    for (std::size_t i = 0; i < defaults.size(); ++i) {
      if (entails(m, bipref::negation(defaults[i].body))) next.insert(i);
    }
    if (next == levels.back()) return levels;
    levels.push_back(next);
  }
}

std::vector<Indices> partition(const std::vector<Indices>& levels) {
  std::vector<Indices> out;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    Indices d;
    std::set_difference(levels[i].begin(), levels[i].end(), levels[i + 1].begin(),
                        levels[i + 1].end(), std::inserter(d, d.end()));
    out.push_back(d);
  }
  out.push_back(levels.back());
  return out;
}

std::vector<std::size_t> tuple(const Indices& x, const std::vector<Indices>& part) {
  const std::size_t m = part.size() - 1;
  auto count = [&](const Indices& d) {
    return static_cast<std::size_t>(
        std::count_if(d.begin(), d.end(), [&](std::size_t i) { return x.contains(i); }));
  };
  std::vector<std::size_t> out;
  if (!part[m].empty()) out.push_back(count(part[m]));
  for (std::size_t i = 1; i <= m; ++i) out.push_back(count(part[m - i]));
  return out;
}

bool lex_geq(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (x[i] > y[i]) return false;
  }
  return true;
}

Indices falsified(const Assignment& w, const std::vector<Rule>& defaults) {
  Indices out;
  for (std::size_t i = 0; i < defaults.size(); ++i) {
    if (holds(defaults[i].body, w) && !holds(defaults[i].head, w)) out.insert(i);
  }
  return out;
}

Indices violated(const Assignment& w, const std::vector<Rule>& norms,
                 const std::vector<Indices>& defeaters) {
  Indices out;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (!holds(norms[i].body, w) || holds(norms[i].head, w)) continue;
    const bool excused = std::any_of(defeaters[i].begin(), defeaters[i].end(),
                                     [&](std::size_t j) { return holds(norms[j].body, w); });
    if (!excused) out.insert(i);
  }
  return out;
}

// --------------------------------------------------------------------- Model

Model::Model(const bipref::Theory& t, std::vector<Assignment> worlds)
    : theory_(&t), worlds_(std::move(worlds)) {
  const auto part = partition(lm_levels(t.defaults()));
  const auto d = defeaters(t.norms(), t.gamma());
  for (const Assignment& w : worlds_) {
    f_.push_back(falsified(w, t.defaults()));
    v_.push_back(violated(w, t.norms(), d));
    t_.push_back(tuple(f_.back(), part));
  }
}

bool Model::ngeq(std::size_t i, std::size_t j) const { return lex_geq(t_[i], t_[j]); }

bool Model::igeq(std::size_t i, std::size_t j) const {
  return std::includes(v_[j].begin(), v_[j].end(), v_[i].begin(), v_[i].end());
}

std::vector<std::size_t> Model::where(const BooleanFormula& f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (holds(f, worlds_[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Model::max_n(const std::vector<std::size_t>& s) const {
  std::vector<std::size_t> out;
  for (std::size_t w : s) {
    if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return !ngeq(v, w) || ngeq(w, v); })) {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<std::size_t> Model::max_i(const std::vector<std::size_t>& s) const {
  std::vector<std::size_t> out;
  for (std::size_t w : s) {
    if (std::all_of(s.begin(), s.end(), [&](std::size_t v) { return !igeq(v, w) || igeq(w, v); })) {
      out.push_back(w);
    }
  }
  return out;
}

bool Model::lifted(const std::vector<std::size_t>& u, const std::vector<std::size_t>& v) const {
  return std::all_of(v.begin(), v.end(), [&](std::size_t y) {
    return std::any_of(u.begin(), u.end(), [&](std::size_t x) { return igeq(x, y); });
  });
}

bool Model::normality(const BooleanFormula& a, const BooleanFormula& b) const {
  const auto best = max_n(where(a));
  return std::all_of(best.begin(), best.end(),
                     [&](std::size_t w) { return holds(b, worlds_[w]); });
}

bool Model::obligation(const BooleanFormula& a, const BooleanFormula& b) const {
  const auto yes = max_n(where(bipref::conjunction(a, b)));
  const auto no = max_n(where(bipref::conjunction(a, bipref::negation(b))));
  return !lifted(no, yes);
}

bool Model::hansson(const BooleanFormula& a, const BooleanFormula& b) const {
  const auto best = max_i(where(a));
  return std::all_of(best.begin(), best.end(),
                     [&](std::size_t w) { return holds(b, worlds_[w]); });
}

bool Model::query(const bipref::Query& q, std::size_t world) const {
  using bipref::QueryKind;
  bool v = false;
  switch (q.kind()) {
    case QueryKind::kAlethic:
      return holds(q.formula().node(), worlds_[world], worlds_);
    case QueryKind::kNormality:
      v = normality(q.body(), q.head());
      break;
    case QueryKind::kObligation:
      v = obligation(q.body(), q.head());
      break;
    case QueryKind::kHanssonObligation:
      v = hansson(q.body(), q.head());
      break;
  }
  return q.negated() ? !v : v;
}

bool Model::gamma(std::size_t world) const {
  return std::all_of(theory_->gamma().begin(), theory_->gamma().end(),
                     [&](const AlethicFormula& g) {
                       return holds(g.node(), worlds_[world], worlds_);
                     });
}

bool entails(const bipref::Theory& t, const bipref::Query& q,
             const std::vector<std::string>& atoms) {
  const Model m(t, assignments(atoms));
  for (std::size_t w = 0; w < m.worlds().size(); ++w) {
    if (m.gamma(w) && !m.query(q, w)) return false;
  }
  return true;
}

std::vector<Indices> maxfamily(const std::vector<bipref::IOPair>& n, const BooleanFormula& a) {
  std::vector<Indices> ok;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n.size()); ++mask) {
    Indices h;
    std::vector<BooleanFormula> fs{a};
    for (std::size_t i = 0; i < n.size(); ++i) {
      if ((mask >> i) & 1U) {
        h.insert(i);
        fs.push_back(bipref::implication(n[i].body, n[i].head));
      }
    }
    if (consistent(fs)) ok.push_back(h);
  }
  std::vector<Indices> out;
  for (const Indices& h : ok) {
    const bool maximal = std::none_of(ok.begin(), ok.end(), [&](const Indices& g) {
      return g.size() > h.size() && std::includes(g.begin(), g.end(), h.begin(), h.end());
    });
    if (maximal) out.push_back(h);
  }
  return out;
}

}  // namespace oracle

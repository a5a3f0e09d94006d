#include "bipref/propkernel.hpp"

#include <algorithm>
#include <functional>

#include "bipref/error.hpp"

namespace bipref {

// ---------------------------------------------------------------- Vocabulary

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  for (const std::string& a : atoms_) {
    if (!is_valid_atom_name(a)) throw ParseError("invalid atom name '" + a + "'", 0);
  }
  if (atoms_.size() > kMaxAtoms) {
    throw ResourceLimitError("vocabulary of " + std::to_string(atoms_.size()) +
                             " atoms exceeds the limit of " +
                             std::to_string(kMaxAtoms));
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool Vocabulary::covers(const std::vector<std::string>& atoms) const {
  return std::all_of(atoms.begin(), atoms.end(),
                     [this](const std::string& a) { return contains(a); });
}

Vocabulary Vocabulary::merged_with(const std::vector<std::string>& more) const {
  std::vector<std::string> all = atoms_;
  all.insert(all.end(), more.begin(), more.end());
  return Vocabulary(std::move(all));
}

// ----------------------------------------------------------------- Valuation

std::string Valuation::to_bits(const Vocabulary& vocab) const {
  std::string out;
  for (std::size_t i = 0; i < vocab.size(); ++i) out += holds(i) ? '1' : '0';
  return out;
}

std::string Valuation::label(const Vocabulary& vocab,
                             std::span<const std::string> order) const {
  std::string out;
  auto emit = [&](const std::string& atom) {
    const auto idx = vocab.index_of(atom);
    if (!idx) return;
    if (!out.empty()) out += ' ';
    if (!holds(*idx)) out += '-';
    out += atom;
  };
  if (order.empty()) {
    for (const std::string& a : vocab.atoms()) emit(a);
  } else {
    for (const std::string& a : order) emit(a);
  }
  return out;
}

// ------------------------------------------------------------------ WorldSet

WorldSet::WorldSet(std::size_t world_count, bool filled)
    : universe_(world_count),
      words_((world_count + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
  trim();
}

void WorldSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

void WorldSet::insert(Valuation w) {
  if (w.bits >= universe_) throw std::out_of_range("world outside universe");
  words_[w.bits >> 6] |= std::uint64_t{1} << (w.bits & 63);
}

void WorldSet::erase(Valuation w) {
  if (w.bits < universe_) words_[w.bits >> 6] &= ~(std::uint64_t{1} << (w.bits & 63));
}

std::size_t WorldSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t word : words_) n += static_cast<std::size_t>(std::popcount(word));
  return n;
}

bool WorldSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool WorldSet::is_subset_of(const WorldSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::optional<Valuation> WorldSet::first() const {
  auto it = begin();
  if (it == end()) return std::nullopt;
  return *it;
}

WorldSet& WorldSet::operator&=(const WorldSet& o) {
  if (universe_ != o.universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& o) {
  if (universe_ != o.universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

WorldSet WorldSet::from_words(std::size_t world_count, std::vector<std::uint64_t> words) {
  if (words.size() != (world_count + 63) / 64) throw std::invalid_argument("word count");
  WorldSet out;
  out.universe_ = world_count;
  out.words_ = std::move(words);
  out.trim();
  return out;
}

WorldSet WorldSet::complement() const {
  WorldSet out = *this;
  for (std::uint64_t& w : out.words_) w = ~w;
  out.trim();
  return out;
}

// ---------------------------------------------------------------- evaluation

namespace {

constexpr std::uint64_t kAtomPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

WorldSet atom_set_fast(std::size_t index, std::size_t universe) {
  std::vector<std::uint64_t> words((universe + 63) / 64);
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (index < 6) {
      words[k] = kAtomPattern[index];
    } else {
      words[k] = ((k >> (index - 6)) & 1U) != 0 ? ~std::uint64_t{0} : 0;
    }
  }
  return WorldSet::from_words(universe, std::move(words));
}

using ModalHook = std::function<bool(const Node&)>;

WorldSet eval_set(const Node& n, const Vocabulary& vocab, std::size_t universe,
                  const ModalHook& modal) {
  switch (n.op) {
    case Connective::kTop:
      return WorldSet(universe, true);
    case Connective::kBottom:
      return WorldSet(universe, false);
    case Connective::kAtom: {
      const auto idx = vocab.index_of(n.atom);
      if (!idx) {
        throw PreconditionError("atom '" + n.atom + "' is not in the vocabulary");
      }
      return atom_set_fast(*idx, universe);
    }
    case Connective::kNot:
      return eval_set(*n.left, vocab, universe, modal).complement();
    case Connective::kAnd:
      return eval_set(*n.left, vocab, universe, modal) &
             eval_set(*n.right, vocab, universe, modal);
    case Connective::kOr:
      return eval_set(*n.left, vocab, universe, modal) |
             eval_set(*n.right, vocab, universe, modal);
    case Connective::kImplies:
      return eval_set(*n.left, vocab, universe, modal).complement() |
             eval_set(*n.right, vocab, universe, modal);
    case Connective::kIff: {
      WorldSet l = eval_set(*n.left, vocab, universe, modal);
      WorldSet r = eval_set(*n.right, vocab, universe, modal);
      return (l & r) | (l.complement() & r.complement());
    }
    case Connective::kBox:
    case Connective::kDiamond:
      return WorldSet(universe, modal(n));
  }
  return WorldSet(universe, false);
}

bool eval_point(const Node& n, Valuation w, const Vocabulary& vocab) {
  switch (n.op) {
    case Connective::kTop:
      return true;
    case Connective::kBottom:
      return false;
    case Connective::kAtom: {
      const auto idx = vocab.index_of(n.atom);
      if (!idx) {
        throw PreconditionError("atom '" + n.atom + "' is not in the vocabulary");
      }
      return w.holds(*idx);
    }
    case Connective::kNot:
      return !eval_point(*n.left, w, vocab);
    case Connective::kAnd:
      return eval_point(*n.left, w, vocab) && eval_point(*n.right, w, vocab);
    case Connective::kOr:
      return eval_point(*n.left, w, vocab) || eval_point(*n.right, w, vocab);
    case Connective::kImplies:
      return !eval_point(*n.left, w, vocab) || eval_point(*n.right, w, vocab);
    case Connective::kIff:
      return eval_point(*n.left, w, vocab) == eval_point(*n.right, w, vocab);
    case Connective::kBox:
    case Connective::kDiamond:
      throw PreconditionError("modal operator in a Boolean context");
  }
  return false;
}

Vocabulary joint_vocabulary(std::span<const BooleanFormula> fs) {
  std::vector<std::string> atoms;
  for (const BooleanFormula& f : fs) atoms = merge_atoms(atoms, atoms_of(f));
  return Vocabulary(std::move(atoms));
}

void collect_modal(const Node& n, std::vector<const Node*>& out) {
  if (n.op == Connective::kBox || n.op == Connective::kDiamond) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Node* m) {
      return compare_nodes(*m, n) == std::strong_ordering::equal;
    });
    if (!seen) out.push_back(&n);
    return;
  }
  if (n.left) collect_modal(*n.left, out);
  if (n.right) collect_modal(*n.right, out);
}

}  // namespace

bool satisfies(Valuation w, const BooleanFormula& f, const Vocabulary& vocab) {
  return eval_point(f.node(), w, vocab);
}

WorldSet truth_set(const BooleanFormula& f, const Vocabulary& vocab) {
  return eval_set(f.node(), vocab, vocab.world_count(), [](const Node&) -> bool {
    throw PreconditionError("modal operator in a Boolean context");
  });
}

WorldSet models_of(const BooleanFormula& f, const Vocabulary& vocab) {
  return truth_set(f, vocab);
}

bool pl_consistent(std::span<const BooleanFormula> fs) {
  const Vocabulary vocab = joint_vocabulary(fs);
  WorldSet s = WorldSet::all(vocab);
  for (const BooleanFormula& f : fs) {
    s &= truth_set(f, vocab);
    if (s.empty()) return false;
  }
  return true;
}

bool pl_consistent(std::initializer_list<BooleanFormula> fs) {
  return pl_consistent(std::span<const BooleanFormula>(fs.begin(), fs.size()));
}

bool pl_entails(std::span<const BooleanFormula> premises, const BooleanFormula& f) {
  std::vector<BooleanFormula> all(premises.begin(), premises.end());
  all.push_back(negation(f));
  return !pl_consistent(all);
}

bool pl_entails(std::initializer_list<BooleanFormula> premises, const BooleanFormula& f) {
  return pl_entails(std::span<const BooleanFormula>(premises.begin(), premises.size()), f);
}

bool s5_consistent(std::span<const AlethicFormula> fs) {
  std::vector<std::string> atoms;
  std::vector<const Node*> tokens;
  for (const AlethicFormula& f : fs) {
    atoms = merge_atoms(atoms, atoms_of(f));
    collect_modal(f.node(), tokens);
  }
  const Vocabulary vocab(std::move(atoms));
  const std::size_t universe = vocab.world_count();
  if (tokens.size() > 20) throw ResourceLimitError("too many modal subformulas");

  // Operand truth sets, computed once.
  std::vector<WorldSet> operand;
  for (const Node* t : tokens) {
    operand.push_back(truth_set(BooleanFormula::from_node(t->left), vocab));
  }

  for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << tokens.size()); ++assign) {
    auto value = [&](const Node& n) {
      for (std::size_t k = 0; k < tokens.size(); ++k) {
        if (compare_nodes(*tokens[k], n) == std::strong_ordering::equal) {
          return ((assign >> k) & 1U) != 0;
        }
      }
      return false;
    };
    // Worlds every accessible world must satisfy.
    WorldSet necessary(universe, true);
    // Sets each of which needs a witness world.
    std::vector<WorldSet> possible;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const bool on = ((assign >> k) & 1U) != 0;
      const bool is_box = tokens[k]->op == Connective::kBox;
      if (is_box == on) {
        // []A true, or <>A false (i.e. []~A).
        necessary &= on ? operand[k] : operand[k].complement();
      } else {
        possible.push_back(on ? operand[k] : operand[k].complement());
      }
    }
    WorldSet actual = necessary;
    for (const AlethicFormula& f : fs) actual &= eval_set(f.node(), vocab, universe, value);
    if (actual.empty()) continue;
    const bool witnessed = std::all_of(possible.begin(), possible.end(),
                                       [&](const WorldSet& p) { return !(p & necessary).empty(); });
    if (witnessed) return true;
  }
  return false;
}

bool s5_consistent(std::initializer_list<AlethicFormula> fs) {
  return s5_consistent(std::span<const AlethicFormula>(fs.begin(), fs.size()));
}

WorldSet truth_set_in(const AlethicFormula& f, const Vocabulary& vocab,
                      const WorldSet& domain) {
  const std::size_t universe = vocab.world_count();
  if (domain.universe() != universe) throw std::invalid_argument("universe mismatch");
  auto modal = [&](const Node& n) {
    const WorldSet operand = truth_set(BooleanFormula::from_node(n.left), vocab) & domain;
    if (n.op == Connective::kBox) return operand == domain;
    return !operand.empty();
  };
  return eval_set(f.node(), vocab, universe, modal) & domain;
}

}  // namespace bipref

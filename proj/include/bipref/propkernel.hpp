#pragma once

// Truth-table decision procedures for classical propositional logic and for
// the flat fragment of S5.
//
// Worlds are valuations over a fixed vocabulary. Atoms are ordered
// lexicographically and atom i is bit i of the valuation index, so a
// vocabulary of n atoms has worlds 0 .. 2^n - 1.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bipref/formula.hpp"

namespace bipref {

/// Largest supported vocabulary (2^20 worlds).
inline constexpr std::size_t kMaxAtoms = 20;

/// Sorted, duplicate-free list of atom names.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Sorts and deduplicates; throws ResourceLimitError beyond kMaxAtoms and
  /// ParseError on an invalid atom name.
  explicit Vocabulary(std::vector<std::string> atoms);
  Vocabulary(std::initializer_list<std::string> atoms)
      : Vocabulary(std::vector<std::string>(atoms)) {}

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  std::optional<std::size_t> index_of(std::string_view atom) const;
  bool contains(std::string_view atom) const { return index_of(atom).has_value(); }
  bool covers(const std::vector<std::string>& atoms) const;

  Vocabulary merged_with(const std::vector<std::string>& more) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// A world: bit i is the truth value of the i-th atom of its vocabulary.
struct Valuation {
  std::uint32_t bits = 0;

  bool holds(std::size_t atom_index) const { return ((bits >> atom_index) & 1U) != 0; }

  /// "10" style rendering, first atom first.
  std::string to_bits(const Vocabulary& vocab) const;
  /// Bar notation with ASCII bars: "-r -a -f n". `order` lists the atoms in
  /// display order (defaults to the vocabulary order).
  std::string label(const Vocabulary& vocab,
                    std::span<const std::string> order = {}) const;

  friend constexpr bool operator==(Valuation, Valuation) = default;
  friend constexpr auto operator<=>(Valuation, Valuation) = default;
};

/// Set of worlds over a vocabulary, stored as a bitset over world indices.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t world_count, bool filled = false);
  static WorldSet all(const Vocabulary& v) { return WorldSet(v.world_count(), true); }
  static WorldSet none(const Vocabulary& v) { return WorldSet(v.world_count(), false); }
  /// Raw bitset words, world i at bit i % 64 of word i / 64.
  static WorldSet from_words(std::size_t world_count, std::vector<std::uint64_t> words);

  std::size_t universe() const { return universe_; }
  bool contains(Valuation w) const {
    return w.bits < universe_ && ((words_[w.bits >> 6] >> (w.bits & 63)) & 1U) != 0;
  }
  void insert(Valuation w);
  void erase(Valuation w);
  std::size_t size() const;
  bool empty() const;
  bool is_subset_of(const WorldSet& other) const;
  bool is_full() const { return size() == universe_; }
  std::optional<Valuation> first() const;

  WorldSet& operator&=(const WorldSet& o);
  WorldSet& operator|=(const WorldSet& o);
  /// Complement relative to the universe.
  WorldSet complement() const;
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend bool operator==(const WorldSet&, const WorldSet&) = default;

  class iterator {
   public:
    using value_type = Valuation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const WorldSet* set, std::size_t word) : set_(set), word_(word) {
      if (set_ != nullptr && word_ < set_->words_.size()) {
        rest_ = set_->words_[word_];
        skip_empty();
      }
    }
    Valuation operator*() const {
      return Valuation{static_cast<std::uint32_t>(
          (word_ << 6) + static_cast<std::size_t>(std::countr_zero(rest_)))};
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      skip_empty();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    void skip_empty() {
      while (rest_ == 0 && ++word_ < set_->words_.size()) rest_ = set_->words_[word_];
    }
    const WorldSet* set_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, words_.size()); }
  std::vector<Valuation> members() const { return {begin(), end()}; }

 private:
  void trim();
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Truth value at a single world. Atoms outside `vocab` are an error.
bool satisfies(Valuation w, const BooleanFormula& f, const Vocabulary& vocab);

/// Truth set of a Boolean formula; throws PreconditionError if the formula
/// mentions an atom outside `vocab`.
WorldSet truth_set(const BooleanFormula& f, const Vocabulary& vocab);

/// models_of(f, vocab): exactly the valuations satisfying f.
WorldSet models_of(const BooleanFormula& f, const Vocabulary& vocab);

/// premises |=_PL f over the joint vocabulary.
bool pl_entails(std::span<const BooleanFormula> premises, const BooleanFormula& f);
bool pl_entails(std::initializer_list<BooleanFormula> premises, const BooleanFormula& f);
bool pl_consistent(std::span<const BooleanFormula> fs);
bool pl_consistent(std::initializer_list<BooleanFormula> fs);

/// Satisfiability of a set of flat alethic formulas in S5.
bool s5_consistent(std::span<const AlethicFormula> fs);
bool s5_consistent(std::initializer_list<AlethicFormula> fs);

/// Worlds of `domain` satisfying a flat alethic formula in the model whose
/// worlds are `domain`: []A holds at all of them if every domain world
/// satisfies A and at none otherwise; <>A likewise with "some".
WorldSet truth_set_in(const AlethicFormula& f, const Vocabulary& vocab,
                      const WorldSet& domain);

}  // namespace bipref

#pragma once

// Seeded random theories for property suites and the crosscheck command.
// Bodies are conjunctions of 0-2 literals, heads of 1-2 literals; random
// default sets are redrawn until coherent.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/norms.hpp"

namespace bipref {

struct RandomTheoryParams {
  std::size_t atoms = 3;
  std::size_t max_defaults = 0;
  std::size_t max_norms = 3;
  /// Up to this many facts of the form <>(literal conjunction).
  std::size_t max_facts = 0;
};

/// The first `n` atom names: a, b, c, ...
std::vector<std::string> atom_names(std::size_t n);

/// Conjunction of between `min_len` and `max_len` literals over distinct
/// atoms (`true` when empty).
BooleanFormula random_conjunction(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                                  std::size_t min_len, std::size_t max_len);

/// Arbitrary Boolean formula of bounded depth.
BooleanFormula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              std::size_t depth);

/// Rule counts are drawn uniformly from [0, max]. All atoms are declared.
Theory random_theory(std::mt19937_64& rng, const RandomTheoryParams& params);

}  // namespace bipref

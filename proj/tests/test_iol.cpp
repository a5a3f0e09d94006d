#include <doctest.h>

#include <algorithm>
#include <random>

#include "bipref/error.hpp"
#include "bipref/iol.hpp"
#include "bipref/random_theory.hpp"
#include "support.hpp"

using namespace bipref;
using support::pb;

namespace {

IOPair io(const char* b, const char* h) { return {pb(b), pb(h)}; }

bool equivalent(const BooleanFormula& f, const BooleanFormula& g) {
  return pl_entails({f}, g) && pl_entails({g}, f);
}

IndexSet ix(std::initializer_list<std::size_t> xs) {
  IndexSet s;
  for (std::size_t x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("out4+ with identity") {
  const std::vector<IOPair> n{io("a", "f"), io("f", "g")};
  CHECK(out4plus_contains(n, pb("a"), pb("f")));
  CHECK(out4plus_contains(n, pb("a"), pb("g")));
  CHECK(out4plus_contains(n, pb("a"), pb("a")));
  CHECK_FALSE(out4plus_contains(n, pb("true"), pb("f")));
  CHECK_FALSE(out4plus_contains(n, ix({1}), pb("a"), pb("g")));
  CHECK(out4plus_contains(std::vector<IOPair>{}, pb("a & b"), pb("b")));
  CHECK(io("a", "f").to_string() == "(a, f)");
}

TEST_CASE("maximal families under the input constraint") {
  const std::vector<IOPair> n{io("true", "~f"), io("a", "f")};
  const MaxFamily fa = maxfamily(n, pb("a"));
  CHECK_FALSE(fa.inconsistent_input);
  CHECK(fa.members == std::vector<IndexSet>{ix({0}), ix({1})});
  CHECK(maxfamily(n, pb("~a")).members == std::vector<IndexSet>{ix({0, 1})});
  CHECK_FALSE(fullmeet_contains(n, pb("a"), pb("f")));
  CHECK_FALSE(fullmeet_contains(n, pb("a"), pb("~f")));
  CHECK(fullmeet_contains(n, pb("a"), pb("f | ~f")));
  CHECK(fullmeet_contains(n, pb("~a"), pb("~f")));

  const MaxFamily bad = maxfamily(n, pb("a & ~a"));
  CHECK(bad.inconsistent_input);
  CHECK(bad.members.empty());
  CHECK_THROWS_AS(fullmeet_contains(n, pb("a & ~a"), pb("f")), PreconditionError);

  CHECK(maxfamily(std::vector<IOPair>{}, pb("a")).members == std::vector<IndexSet>{ix({})});
  const std::vector<IOPair> clash{io("true", "x"), io("true", "~x"), io("true", "y")};
  CHECK(maxfamily(clash, pb("true")).members == std::vector<IndexSet>{ix({0, 2}), ix({1, 2})});
  CHECK(fullmeet_contains(clash, pb("true"), pb("y")));
}

TEST_CASE("rewriting by defeaters") {
  const std::vector<IOPair> r = rewrite_defeaters(support::asparagus());
  REQUIRE(r.size() == 3);
  CHECK(r[0] == IOPair{conjunction(pb("true"), negation(pb("a"))), pb("~f")});
  CHECK(r[1] == io("a", "f"));
  CHECK(r[2] == io("true", "n"));
  CHECK(fullmeet_contains(r, pb("a"), pb("f")));
  CHECK(fullmeet_contains(r, pb("a"), pb("n")));
  CHECK(fullmeet_contains(r, pb("~a"), pb("~f")));

  const Theory chain = support::theory({}, {}, {"O(x | a)", "O(~x | a & b)", "O(x | a & b & c)"});
  const std::vector<IOPair> rc = rewrite_defeaters(chain);
  CHECK(equivalent(rc[0].body, pb("a & ~(a & b)")));
  CHECK(equivalent(rc[1].body, pb("a & b & ~c")));
  CHECK(rc[2] == io("a & b & c", "x"));
  CHECK(fullmeet_contains(rc, pb("a & b & c"), pb("x")));
  CHECK(fullmeet_contains(rc, pb("a & b & ~c"), pb("~x")));
  CHECK(fullmeet_contains(rc, pb("a & ~b"), pb("x")));
}

TEST_CASE("maximal families agree with the oracle") {
  std::mt19937_64 rng(61);
  const auto atoms = atom_names(3);
  for (int i = 0; i < 300; ++i) {
    std::vector<IOPair> n;
    const int size = static_cast<int>(rng() % 5);
    for (int k = 0; k < size; ++k) {
      n.push_back({random_conjunction(rng, atoms, 0, 2), random_formula(rng, atoms, 2)});
    }
    const BooleanFormula a = random_formula(rng, atoms, 2);
    const MaxFamily got = maxfamily(n, a);
    auto want = oracle::maxfamily(n, a);
    std::sort(want.begin(), want.end());
    CHECK(got.inconsistent_input == !oracle::consistent({a}));
    std::vector<oracle::Indices> as_sets;
    for (IndexSet h : got.members) as_sets.emplace_back(h.begin(), h.end());
    std::sort(as_sets.begin(), as_sets.end());
    CHECK(as_sets == want);
  }
}

TEST_CASE("faithfulness on the asparagus obligations") {
  const Theory t = support::asparagus().without_defaults();
  const FaithfulnessReport r = faithfulness_check(t, pb("a"), pb("f & n"));
  CHECK(r.hansson);
  CHECK(r.fullmeet);
  CHECK(r.obligation);
  CHECK(r.passed());
  const FaithfulnessReport s = faithfulness_check(t, pb("a"), pb("~f"));
  CHECK_FALSE(s.fullmeet);
  CHECK_FALSE(s.hansson);
  CHECK(s.passed());
  CHECK_THROWS_AS(faithfulness_check(support::asparagus(), pb("a"), pb("f")), PreconditionError);
  CHECK_THROWS_AS(faithfulness_check(t, pb("a & ~a"), pb("f")), PreconditionError);
}

TEST_CASE("a conflict separates the obligation from the full meet") {
  const Theory t = support::theory({}, {}, {"O(x)", "O(~x)"});
  const FaithfulnessReport r = faithfulness_check(t, pb("true"), pb("x"));
  CHECK_FALSE(r.fullmeet);
  CHECK_FALSE(r.hansson);
  CHECK(r.obligation);
  CHECK(r.converse_counterexample());
  CHECK(r.passed());
}

TEST_CASE("faithfulness holds on random theories") {
  std::mt19937_64 rng(67);
  const auto atoms = atom_names(3);
  int converse = 0;
  for (int i = 0; i < 200; ++i) {
    const Theory t = random_theory(rng, {.atoms = 3, .max_defaults = 0, .max_norms = 4});
    for (int k = 0; k < 3; ++k) {
      const BooleanFormula a = random_conjunction(rng, atoms, 0, 2);
      const BooleanFormula x = random_formula(rng, atoms, 2);
      const FaithfulnessReport r = faithfulness_check(t, a, x);
      CHECK(r.hansson_agrees());
      CHECK(r.forward_holds());
      CHECK(r.bridge_holds());
      if (r.converse_counterexample()) ++converse;
    }
  }
  CHECK(converse > 0);
}

// Acceptance suite: one PASS/FAIL line per criterion. All tolerances are
// exact. A criterion listed as a known failure is still run and printed as
// FAIL; it only stops counting against the exit status, and an unexpected
// pass of such a criterion is itself an error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "bipref/model.hpp"
#include "bipref/theory_file.hpp"
#include "properties.hpp"

using namespace bipref;

namespace {

struct Line {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
};

const std::set<std::string> kKnownFailures{"3"};

Theory load(const char* name) { return load_theory_file(std::string(THEORIES_DIR) + "/" + name).theory; }

std::string yn(bool b) { return b ? "yes" : "no"; }

Line asparagus() {
  const Theory t = load("asparagus.theory");
  const Verdict v1 = entails(t, parse_query("O(n | a)"));
  const Verdict v2 = entails(t, parse_query("O(~f | a)"));
  const Verdict v3 = entails(t, parse_query("O(~a)"));
  const Verdict v4 = entails(t, parse_query("O(~f)"));
  const bool witness =
      v3.world && satisfies(*v3.world, parse_boolean("a & f & n"), v3.vocab);
  std::ostringstream d;
  d << "O(n|a) " << yn(v1.entailed) << ", O(~f|a) " << yn(v2.entailed) << ", O(~a) "
    << yn(v3.entailed) << " witness " << v3.world_label() << ", O(~f) " << yn(v4.entailed);
  return {"1", "asparagus verdicts", v1.entailed && !v2.entailed && !v3.entailed && witness && v4.entailed,
          d.str()};
}

Line ranking() {
  Theory t;
  t.declare_atoms({"r", "a"});
  t.add_default(parse_rule("true => ~a"));
  t.add_default(parse_rule("r => a"));
  const CanonicalModel m = CanonicalModel::build(t);
  const auto w = [&](const char* s) {
    for (Valuation x : m.domain()) {
      if (m.label(x) == s) return x;
    }
    return Valuation{};
  };
  const bool classes = m.normality().class_count() == 3 &&
                       m.tuple(w("-r -a")) == NormalityTuple{0, 0} &&
                       m.tuple(w("r a")) == NormalityTuple{0, 1} &&
                       m.tuple(w("-r a")) == NormalityTuple{0, 1} &&
                       m.tuple(w("r -a")) == NormalityTuple{1, 0} &&
                       m.normality().normal_class(w("-r -a")) == 0 &&
                       m.normality().normal_class(w("r a")) == 1 &&
                       m.normality().normal_class(w("-r a")) == 1 &&
                       m.normality().normal_class(w("r -a")) == 2;
  const auto fd = [&](const char* s) { return fdis_count(w(s), t.defaults(), m.vocab()); };
  const bool tie = fd("r a") == 1 && fd("r -a") == 1 && fd("-r a") == 1 && fd("-r -a") == 0;
  std::ostringstream d;
  d << "classes " << m.normality().class_count() << ", lex <0,0> -r-a > <0,1> a > <1,0> r-a "
    << (classes ? "reproduced" : "differs") << ", f-DIS r&a = r&~a = " << fd("r a");
  return {"2", "normality ranking", classes && tie, d.str()};
}

Line fallacy_pair() {
  Theory t;
  t.add_norm(parse_rule("O(~f)"));
  t.add_norm(parse_rule("O(f | a)"));
  const Verdict nf = entails(t, parse_query("O(~f)"));
  const Verdict na = entails(t, parse_query("O(~a)"));
  std::ostringstream d;
  d << "O(~f) " << yn(nf.entailed) << " (witness " << nf.world_label() << "), O(~a) " << yn(na.entailed);
  if (!nf.entailed) {
    d << "; without defaults the a&f world has no violation and matches every ~f world, so O(~f) "
         "does not hold in the defined semantics";
  }
  return {"3", "prohibited exception pair", nf.entailed && !na.entailed, d.str()};
}

Line fallacy_pair_with_default() {
  const Theory t = load("prohibited-exception.theory");
  const Verdict nf = entails(t, parse_query("O(~f)"));
  const Verdict fa = entails(t, parse_query("O(f | a)"));
  const Verdict na = entails(t, parse_query("O(~a)"));
  std::ostringstream d;
  d << "with true => ~a: O(~f) " << yn(nf.entailed) << ", O(f|a) " << yn(fa.entailed) << ", O(~a) "
    << yn(na.entailed);
  return {"3b", "prohibited exception pair, exception abnormal", nf.entailed && fa.entailed && !na.entailed,
          d.str()};
}

Line nonmonotonicity() {
  const Theory d1 = load("nonmonotonicity-1.theory");
  const Theory d2 = load("nonmonotonicity-2.theory");
  const Query q = parse_query("O(~f | a)");
  const bool sub = contained_in(d1, d2);
  const bool e1 = entails(d1, q).entailed;
  const Verdict e2 = entails(d2, q);
  std::ostringstream d;
  d << "D1 within D2 " << yn(sub) << ", D1 |~ O(~f|a) " << yn(e1) << ", D2 |~ O(~f|a) " << yn(e2.entailed)
    << " (witness " << e2.world_label() << ")";
  return {"4", "nonmonotonicity", sub && e1 && !e2.entailed, d.str()};
}

Line propositions() {
  const props::Tally parts[] = {
      props::order_suite(501, 500),    props::truth_condition_suite(502, 500),
      props::inclusion_suite(503, 500), props::sequence_suite(504, 500),
      props::rewrite_suite(505, 500),
  };
  const char* names[] = {"orders", "truth conditions", "inclusion", "sequences", "rewrite"};
  bool pass = true;
  std::ostringstream d;
  for (std::size_t i = 0; i < std::size(parts); ++i) {
    pass = pass && parts[i].ok() && parts[i].theories >= 500;
    d << (i ? "; " : "") << names[i] << ": " << parts[i].summary();
    for (const std::string& e : parts[i].examples) d << "\n    " << e;
  }
  // each hypothesis-guarded proposition must actually have been exercised
  for (const char* h : {"inclusion(N)", "inclusion(O)", "strengthening", "no-drowning"}) {
    pass = pass && parts[2].hits.count(h) && parts[2].hits.at(h) > 0;
  }
  return {"5", "proposition suites", pass, d.str()};
}

Line single(const char* id, const char* title, const props::Tally& t, std::size_t need) {
  std::ostringstream d;
  d << t.summary();
  for (const std::string& e : t.examples) d << "\n    " << e;
  return {id, title, t.ok() && t.theories >= need, d.str()};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Line> lines;
  try {
    lines.push_back(asparagus());
    lines.push_back(ranking());
    lines.push_back(fallacy_pair());
    lines.push_back(fallacy_pair_with_default());
    lines.push_back(nonmonotonicity());
    lines.push_back(propositions());
    lines.push_back(single("6", "faithfulness", props::faithfulness_suite(601, 500), 500));
    lines.push_back(single("7", "all-models oracle", props::all_models_suite(701, 100), 100));
    lines.push_back(single("8", "vocabulary and permutation invariance", props::invariance_suite(801, 100), 100));
  } catch (const std::exception& e) {
    std::cout << "acceptance aborted: " << e.what() << '\n';
    return 1;
  }

  int unexpected = 0;
  for (const Line& l : lines) {
    const bool known = kKnownFailures.count(l.id) > 0;
    std::cout << "criterion " << l.id << " " << l.title << ": " << (l.pass ? "PASS" : "FAIL");
    if (known) std::cout << (l.pass ? " (listed as a known failure)" : " (known failure)");
    std::cout << " -- " << l.detail << '\n';
    if (l.pass == known) ++unexpected;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s\n";
  if (secs > 60.0) {
    std::cout << "over the one-minute budget\n";
    ++unexpected;
  }
  return unexpected == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

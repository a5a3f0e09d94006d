// Command-line front end: check, rank, query, iol, crosscheck.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bipref/error.hpp"
#include "bipref/iol.hpp"
#include "bipref/model.hpp"
#include "bipref/random_theory.hpp"
#include "bipref/report.hpp"
#include "bipref/theory_file.hpp"

namespace {

using namespace bipref;

enum Exit : int {
  kOk = 0,
  kNotEntailed = 1,
  kParse = 2,
  kIncoherent = 3,
  kResource = 4,
  kIo = 5,
  kPrecondition = 6,
};

TheoryFile load(const std::string& path) {
  TheoryFile tf = load_theory_file(path);
  for (const std::string& w : tf.warnings) std::cerr << "warning: " << w << '\n';
  return tf;
}

std::vector<std::string> query_atoms(const std::vector<Query>& qs) {
  std::vector<std::string> out;
  for (const Query& q : qs) out = merge_atoms(out, atoms_of(q));
  return out;
}

int cmd_check(const std::string& path, bool allow_incoherent) {
  const TheoryFile tf = load(path);
  const CoherenceReport c = check_coherence(tf.theory.defaults());
  std::cout << check_report(tf.theory, c);
  return c.coherent || allow_incoherent ? kOk : kIncoherent;
}

int cmd_rank(const std::string& path, const std::string& method, bool allow_incoherent) {
  const TheoryFile tf = load(path);
  ModelOptions opts;
  opts.allow_incoherent = allow_incoherent;
  const CanonicalModel m = CanonicalModel::build(tf.theory, opts);
  std::cout << rank_table(m, method == "fdis" ? RankMethod::kFdis : RankMethod::kLex);
  return kOk;
}

int cmd_query(const std::string& path, const std::string& mode, const std::string& format,
              bool allow_incoherent) {
  const TheoryFile tf = load(path);
  if (tf.queries.empty()) throw PreconditionError("the file has no queries");
  ModelOptions opts;
  opts.allow_incoherent = allow_incoherent;
  opts.extra_atoms = query_atoms(tf.queries);
  const CanonicalModel m = CanonicalModel::build(tf.theory, opts);
  const EntailmentMode em =
      mode == "all-models" ? EntailmentMode::kAllModels : EntailmentMode::kReplete;

  std::vector<Verdict> verdicts;
  for (const Query& q : tf.queries) {
    verdicts.push_back(em == EntailmentMode::kReplete ? entails_in(m, q)
                                                      : entails(tf.theory, q, em, opts));
  }
  if (format == "json") {
    std::cout << model_json(m, tf.queries, verdicts).dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      std::cout << format_verdict(tf.queries[i], verdicts[i]) << '\n';
    }
  }
  const bool all = std::all_of(verdicts.begin(), verdicts.end(),
                               [](const Verdict& v) { return v.entailed; });
  return all ? kOk : kNotEntailed;
}

int cmd_iol(const std::string& path, const std::string& input, const std::string& head) {
  const TheoryFile tf = load(path);
  const BooleanFormula a = parse_boolean(input);
  const BooleanFormula x = parse_boolean(head);
  if (!pl_consistent({a})) throw PreconditionError("inconsistent input " + a.to_string());
  std::cout << iol_report(rewrite_defeaters(tf.theory), a, x);
  return kOk;
}

struct Tally {
  std::size_t pairs = 0;
  std::size_t hansson = 0;
  std::size_t forward = 0;
  std::size_t bridge = 0;
  std::vector<std::string> failures;
  std::vector<std::string> converse;

  void add(const Theory& t, const FaithfulnessReport& r) {
    ++pairs;
    hansson += r.hansson_agrees() ? 1 : 0;
    forward += r.forward_holds() ? 1 : 0;
    bridge += r.bridge_holds() ? 1 : 0;
    const std::string what = "input " + r.input.to_string() + ", head " + r.head.to_string() +
                             ", norms " + format_rules(t.norms(), IndexSet::first(t.norms().size()));
    if (!r.passed()) failures.push_back(what);
    if (r.converse_counterexample()) converse.push_back(what);
  }

  int print() const {
    std::cout << "pairs: " << pairs << '\n'
              << "Hanssonian agreement: " << hansson << '/' << pairs << '\n'
              << "forward implication: " << forward << '/' << pairs << '\n'
              << "best-world bridge: " << bridge << '/' << pairs << '\n';
    for (const std::string& f : failures) std::cout << "FAIL " << f << '\n';
    std::cout << "converse counterexamples (informative): " << converse.size() << '\n';
    for (std::size_t i = 0; i < converse.size() && i < 5; ++i) {
      std::cout << "  " << converse[i] << '\n';
    }
    return failures.empty() ? kOk : kNotEntailed;
  }
};

int cmd_crosscheck_file(const std::string& path) {
  const TheoryFile tf = load(path);
  Tally tally;
  std::vector<std::pair<BooleanFormula, BooleanFormula>> pairs;
  for (const Query& q : tf.queries) {
    if (q.is_conditional()) pairs.emplace_back(q.body(), q.head());
  }
  if (pairs.empty()) {
    for (const Rule& r : tf.theory.norms()) {
      for (const Rule& s : tf.theory.norms()) pairs.emplace_back(r.body, s.head);
    }
  }
  for (const auto& [a, x] : pairs) {
    if (!pl_consistent({a})) continue;
    tally.add(tf.theory, faithfulness_check(tf.theory, a, x));
  }
  std::cout << "theory: " << path << '\n';
  return tally.print();
}

int cmd_crosscheck_random(std::size_t count, std::size_t atoms, std::size_t rules,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> names = atom_names(atoms);
  Tally tally;
  for (std::size_t i = 0; i < count; ++i) {
    const Theory t = random_theory(rng, {.atoms = atoms, .max_defaults = 0, .max_norms = rules});
    for (int k = 0; k < 4; ++k) {
      const BooleanFormula a = random_conjunction(rng, names, 0, 2);
      const BooleanFormula x = random_formula(rng, names, 2);
      tally.add(t, faithfulness_check(t, a, x));
    }
  }
  std::cout << "theories: " << count << "  atoms: " << atoms << "  rules: " << rules
            << "  seed: " << seed << '\n';
  return tally.print();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-preferential reasoning about defeasible conditional obligations"};
  app.require_subcommand(1);

  std::string file;
  bool allow_incoherent = false;
  std::string method = "lex";
  std::string mode = "replete";
  std::string format = "text";
  std::string input;
  std::string head;
  std::size_t random_count = 0;
  std::size_t random_atoms = 3;
  std::size_t random_rules = 3;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "coherence, defeat graph and exceptionality levels");
  check->add_option("file", file, "theory file")->required();
  check->add_flag("--allow-incoherent", allow_incoherent, "report instead of failing");

  auto* rank = app.add_subcommand("rank", "world table of the canonical model");
  rank->add_option("file", file, "theory file")->required();
  rank->add_option("--method", method, "lex or fdis")
      ->check(CLI::IsMember({"lex", "fdis"}));
  rank->add_flag("--allow-incoherent", allow_incoherent, "build despite incoherent defaults");

  auto* query = app.add_subcommand("query", "decide the queries of a theory file");
  query->add_option("file", file, "theory file")->required();
  query->add_option("--mode", mode, "replete or all-models")
      ->check(CLI::IsMember({"replete", "all-models"}));
  query->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  query->add_flag("--allow-incoherent", allow_incoherent, "build despite incoherent defaults");

  auto* iol = app.add_subcommand("iol", "constrained input/output output of the rewritten norms");
  iol->add_option("file", file, "theory file")->required();
  iol->add_option("--input", input, "input formula")->required();
  iol->add_option("--head", head, "candidate output formula")->required();

  auto* cross = app.add_subcommand("crosscheck", "compare the preference and I/O engines");
  cross->add_option("file", file, "theory file without defaults");
  auto* random_opt = cross->add_option("--random", random_count, "number of random theories");
  cross->add_option("--atoms", random_atoms, "atoms per random theory")->check(CLI::Range(1, 6));
  cross->add_option("--rules", random_rules, "maximum obligations per random theory")
      ->check(CLI::Range(0, 8));
  cross->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (check->parsed()) return cmd_check(file, allow_incoherent);
    if (rank->parsed()) return cmd_rank(file, method, allow_incoherent);
    if (query->parsed()) return cmd_query(file, mode, format, allow_incoherent);
    if (iol->parsed()) return cmd_iol(file, input, head);
    if (cross->parsed()) {
      if (random_opt->count() > 0) {
        return cmd_crosscheck_random(random_count, random_atoms, random_rules, seed);
      }
      if (file.empty()) throw PreconditionError("crosscheck needs a file or --random N");
      return cmd_crosscheck_file(file);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IncoherentError& e) {
    std::cerr << "incoherent: " << e.what() << '\n';
    return kIncoherent;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}

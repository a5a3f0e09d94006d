#include "bipref/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bipref {

std::string format_rules(std::span<const Rule> rules, IndexSet subset) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : subset) {
    if (!first) out += ", ";
    out += rules[i].to_string();
    first = false;
  }
  return out + "}";
}

std::string format_tuple(const NormalityTuple& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t[i]);
  }
  return out + ">";
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string join_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], width[c]) + "  ";
    }
    out += line + '\n';
  }
  return out;
}

std::vector<std::string> rule_texts(std::span<const Rule> rules, IndexSet subset) {
  std::vector<std::string> out;
  for (std::size_t i : subset) out.push_back(rules[i].to_string());
  return out;
}

}  // namespace

std::string rank_table(const CanonicalModel& m, RankMethod method) {
  const auto& defaults = m.theory().defaults();
  const auto& norms = m.theory().norms();
  struct Row {
    std::size_t key;
    std::string label;
    Valuation w;
  };
  std::vector<Row> rows;
  for (Valuation w : m.domain()) {
    const std::size_t key = method == RankMethod::kLex
                                ? m.normality().normal_class(w)
                                : fdis_count(w, defaults, m.vocab());
    rows.push_back({key, m.label(w), w});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.key, x.label) < std::tie(y.key, y.label);
  });

  std::vector<std::vector<std::string>> cells;
  cells.push_back({"class", "world", method == RankMethod::kLex ? "tuple" : "f-DIS", "violated"});
  for (const Row& r : rows) {
    cells.push_back({std::to_string(r.key), r.label,
                     method == RankMethod::kLex ? format_tuple(m.tuple(r.w))
                                                : std::to_string(r.key),
                     format_rules(norms, m.violated(r.w))});
  }
  return join_rows(cells);
}

std::string check_report(const Theory& theory, const CoherenceReport& coherence) {
  std::ostringstream out;
  const Vocabulary vocab = theory.vocabulary();
  out << "atoms:";
  for (const std::string& a : theory.display_order(vocab)) out << ' ' << a;
  out << "\nfacts: " << theory.gamma().size() << "  defaults: " << theory.defaults().size()
      << "  norms: " << theory.norms().size() << '\n';
  const auto& defaults = theory.defaults();
  const auto& norms = theory.norms();
  if (coherence.coherent) {
    out << "coherent: yes\n";
  } else {
    out << "coherent: no, witness " << format_rules(defaults, coherence.witness) << '\n';
  }

  const DefeatGraph g = defeat_graph(theory);
  out << "defeat graph:";
  if (g.edges().empty()) out << " none";
  out << '\n';
  for (const auto& [j, i] : g.edges()) {
    out << "  " << norms[j].to_string() << " overrides " << norms[i].to_string() << '\n';
  }

  const LMSequence seq = lm_sequence(defaults);
  out << "exceptionality levels (m = " << seq.order() << "):\n";
  for (std::size_t i = 0; i < seq.levels.size(); ++i) {
    out << "  E" << i << " = " << format_rules(defaults, seq.levels[i]) << '\n';
  }
  const RankedPartition p = ranked_partition(seq);
  out << "ranked partition:\n";
  for (std::size_t i = 0; i < p.levels.size(); ++i) {
    out << "  D" << i << " = " << format_rules(defaults, p.levels[i]) << '\n';
  }
  return out.str();
}

std::string format_verdict(const Query& q, const Verdict& v) {
  std::string out = q.to_string() + ": " + (v.entailed ? "yes" : "no");
  if (v.world) {
    out += " (witness: " + v.world_label();
    if (v.model) out += " in model " + v.model_label();
    out += ")";
  }
  return out;
}

nlohmann::ordered_json model_json(const CanonicalModel& m, std::span<const Query> queries,
                                  std::span<const Verdict> verdicts) {
  nlohmann::ordered_json doc;
  doc["vocab"] = m.display_order();
  nlohmann::ordered_json worlds = nlohmann::ordered_json::array();
  const auto& defaults = m.theory().defaults();
  const auto& norms = m.theory().norms();
  for (Valuation w : m.domain()) {
    nlohmann::ordered_json row;
    row["label"] = m.label(w);
    row["tuple"] = m.tuple(w);
    row["falsified"] = rule_texts(defaults, m.falsified(w));
    row["violated"] = rule_texts(norms, m.violated(w));
    worlds.push_back(std::move(row));
  }
  doc["worlds"] = std::move(worlds);
  nlohmann::ordered_json qs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < queries.size() && i < verdicts.size(); ++i) {
    nlohmann::ordered_json q;
    q["text"] = queries[i].to_string();
    q["verdict"] = verdicts[i].entailed;
    if (verdicts[i].world) q["witness"] = verdicts[i].world_label();
    if (verdicts[i].model) q["model"] = verdicts[i].model_label();
    qs.push_back(std::move(q));
  }
  doc["queries"] = std::move(qs);
  return doc;
}

std::string iol_report(std::span<const IOPair> rewritten, const BooleanFormula& input,
                       const BooleanFormula& head) {
  std::ostringstream out;
  out << "rewritten norms:\n";
  for (std::size_t i = 0; i < rewritten.size(); ++i) {
    out << "  " << i << ": " << rewritten[i].to_string() << '\n';
  }
  const MaxFamily f = maxfamily(rewritten, input);
  if (f.inconsistent_input) {
    out << "input " << input.to_string() << " is inconsistent\n";
    return out.str();
  }
  out << "maximal family for input " << input.to_string() << ":\n";
  bool all = true;
  for (IndexSet h : f.members) {
    const bool in = out4plus_contains(rewritten, h, input, head);
    all = all && in;
    out << "  " << h.to_string() << ": " << head.to_string() << (in ? " in" : " not in")
        << " output\n";
  }
  out << "full meet contains " << head.to_string() << ": " << (all ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace bipref

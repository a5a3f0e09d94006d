#pragma once

// Text and JSON renderings shared by the command-line tool and the golden
// tests.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipref/iol.hpp"
#include "bipref/model.hpp"
#include "bipref/normality.hpp"
#include "bipref/norms.hpp"

namespace bipref {

/// "{O(~f), O(n)}"
std::string format_rules(std::span<const Rule> rules, IndexSet subset);
/// "<0,1>"
std::string format_tuple(const NormalityTuple& t);

enum class RankMethod { kLex, kFdis };

/// One row per world of `m`, most normal first, ties by label.
std::string rank_table(const CanonicalModel& m, RankMethod method);

/// Coherence, defeat graph, exceptionality levels and ranked partition.
std::string check_report(const Theory& theory, const CoherenceReport& coherence);

/// "O(n | a): yes" plus the witness world when there is one.
std::string format_verdict(const Query& q, const Verdict& v);

/// {vocab, worlds: [{label, tuple, falsified, violated}], queries: [...]}.
nlohmann::ordered_json model_json(const CanonicalModel& m, std::span<const Query> queries,
                                  std::span<const Verdict> verdicts);

/// Rewrite, maximal family with per-member verdicts, full-meet verdict.
std::string iol_report(std::span<const IOPair> rewritten, const BooleanFormula& input,
                       const BooleanFormula& head);

}  // namespace bipref

#pragma once

#include <string>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/norms.hpp"
#include "bipref/propkernel.hpp"
#include "oracle.hpp"

namespace support {

inline bipref::BooleanFormula pb(const std::string& s) { return bipref::parse_boolean(s); }
inline bipref::Rule rule(const std::string& s) { return bipref::parse_rule(s); }
inline bipref::Query q(const std::string& s) { return bipref::parse_query(s); }

inline oracle::Assignment to_assignment(bipref::Valuation w, const bipref::Vocabulary& v) {
  oracle::Assignment a;
  for (std::size_t i = 0; i < v.size(); ++i) a[v.atoms()[i]] = w.holds(i);
  return a;
}

inline bipref::Valuation to_valuation(const oracle::Assignment& a, const bipref::Vocabulary& v) {
  bipref::Valuation w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (a.at(v.atoms()[i])) w.bits |= 1U << i;
  }
  return w;
}

/// World by label over `v`, e.g. "-r a f n".
inline bipref::Valuation world(const std::string& label, const bipref::Vocabulary& v) {
  bipref::Valuation w;
  std::size_t pos = 0;
  while (pos < label.size()) {
    const std::size_t end = std::min(label.find(' ', pos), label.size());
    std::string lit = label.substr(pos, end - pos);
    pos = end + 1;
    if (lit.empty()) continue;
    const bool neg = lit[0] == '-';
    if (neg) lit = lit.substr(1);
    if (!neg) w.bits |= 1U << *v.index_of(lit);
  }
  return w;
}

inline bipref::Theory theory(const std::vector<std::string>& facts,
                             const std::vector<std::string>& defaults,
                             const std::vector<std::string>& norms) {
  bipref::Theory t;
  for (const auto& f : facts) t.add_fact(bipref::parse_alethic(f));
  for (const auto& d : defaults) t.add_default(rule(d));
  for (const auto& n : norms) t.add_norm(rule(n));
  return t;
}

inline bipref::Theory asparagus() {
  bipref::Theory t = theory({}, {"true => ~a", "r => a"}, {"O(~f)", "O(f | a)", "O(n)"});
  t.declare_atoms({"r", "a", "f", "n"});
  return t;
}

}  // namespace support

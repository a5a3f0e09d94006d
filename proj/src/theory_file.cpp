#include "bipref/theory_file.hpp"

#include <fstream>
#include <sstream>

#include "bipref/error.hpp"

namespace bipref {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_atoms(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what, std::size_t pos) {
  throw ParseError("line " + std::to_string(line) + ": " + what, pos);
}

}  // namespace

TheoryFile parse_theory_file(std::string_view text) {
  TheoryFile out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'directive: content'", 0);
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view body = trim(line.substr(colon + 1));
    const std::size_t offset = static_cast<std::size_t>(body.data() - line.data());

    try {
      if (key == "atoms") {
        out.theory.declare_atoms(split_atoms(body));
      } else if (key == "fact") {
        if (!out.theory.add_fact(parse_alethic(body))) {
          out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate fact dropped");
        }
      } else if (key == "default" || key == "norm") {
        const Rule r = parse_rule(body);
        const bool want_default = key == "default";
        if ((r.kind == RuleKind::kNormality) != want_default) {
          fail(line_no,
               want_default ? "default expects 'B => H'" : "norm expects 'O(H | B)'", offset);
        }
        const bool added = want_default ? out.theory.add_default(r) : out.theory.add_norm(r);
        if (!added) {
          out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate rule " +
                                 r.to_string() + " dropped");
        }
      } else if (key == "query") {
        out.queries.push_back(parse_query(body));
      } else {
        fail(line_no, "unknown directive '" + std::string(key) + "'", 0);
      }
    } catch (const NestingError& e) {
      throw NestingError("line " + std::to_string(line_no) + ": " + e.message(),
                         offset + e.position());
    } catch (const ParseError& e) {
      if (e.message().starts_with("line ")) throw;
      fail(line_no, e.message(), offset + e.position());
    }
  }
  return out;
}

TheoryFile load_theory_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory_file(ss.str());
}

std::string format_theory_file(const Theory& theory, const std::vector<Query>& queries) {
  std::string out;
  if (!theory.declared_atoms().empty()) {
    out += "atoms:";
    for (const std::string& a : theory.declared_atoms()) out += " " + a;
    out += '\n';
  }
  for (const AlethicFormula& f : theory.gamma()) out += "fact: " + f.to_string() + '\n';
  for (const Rule& r : theory.defaults()) out += "default: " + r.to_string() + '\n';
  for (const Rule& r : theory.norms()) out += "norm: " + r.to_string() + '\n';
  for (const Query& q : queries) out += "query: " + q.to_string() + '\n';
  return out;
}

}  // namespace bipref

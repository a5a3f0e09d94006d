#pragma once

// Line-oriented theory files:
//
//   # comment
//   atoms:   r a f n          (optional; also fixes the label order)
//   fact:    <>(a & ~f)
//   default: r => a
//   norm:    O(f | a)
//   query:   O(~f)
//
// Atom lists may be separated by spaces or commas.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bipref/formula.hpp"
#include "bipref/norms.hpp"

namespace bipref {

struct TheoryFile {
  Theory theory;
  std::vector<Query> queries;
  /// Non-fatal diagnostics such as dropped duplicates.
  std::vector<std::string> warnings;
};

/// Throws ParseError ("line N: ...") on malformed input.
TheoryFile parse_theory_file(std::string_view text);
/// Throws IoError if the file cannot be read.
TheoryFile load_theory_file(const std::filesystem::path& path);

/// Canonical text of a theory and its queries; parses back to the same
/// theory and queries.
std::string format_theory_file(const Theory& theory, const std::vector<Query>& queries = {});

}  // namespace bipref

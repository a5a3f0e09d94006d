#pragma once

// Formula ASTs for the restricted language: Boolean formulas, flat alethic
// formulas (box/diamond never nested), normality conditionals B => H,
// conditional obligations O(H|B) and the queries built from them.
//
// Concrete syntax:
//   atom      [a-z][a-z0-9_]*          constants  true false
//   unary     ~  []  <>                binary     &  |  ->  <->
//   precedence  ~,[],<>  >  &  >  |  >  ->  >  <->   (-> and <-> group right)
//   rules     B => H        O(H | B)        O(H)  ==  O(H | true)
//   queries   any rule, OH(H | B), a leading ~ on a conditional
//             (~O(H|B), ~(B => H)), or an alethic formula.
// Inside O(..) and OH(..) the last `|` outside parentheses separates head
// from body; write O((x | y)) for a disjunctive head without a body.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bipref {

enum class Connective : std::uint8_t {
  kTop,
  kBottom,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kBox,
  kDiamond,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Connective op = Connective::kTop;
  std::string atom;  // kAtom only
  NodePtr left;      // operand of unary connectives, left operand otherwise
  NodePtr right;
};

/// Structural three-way comparison; equal iff the trees are identical.
std::strong_ordering compare_nodes(const Node& a, const Node& b);

bool is_valid_atom_name(std::string_view name);

/// Propositional formula. Never contains a modal operator.
class BooleanFormula {
 public:
  static BooleanFormula top();
  static BooleanFormula bottom();
  /// Throws ParseError if `name` is not a legal, non-reserved identifier.
  static BooleanFormula atom(std::string_view name);
  /// Wraps an existing tree; throws ParseError if it contains [] or <>.
  static BooleanFormula from_node(NodePtr node);

  const Node& node() const { return *node_; }
  const NodePtr& ptr() const { return node_; }
  Connective op() const { return node_->op; }
  std::string to_string() const;

  friend bool operator==(const BooleanFormula& a, const BooleanFormula& b) {
    return compare_nodes(*a.node_, *b.node_) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const BooleanFormula& a,
                                          const BooleanFormula& b) {
    return compare_nodes(*a.node_, *b.node_);
  }

 private:
  explicit BooleanFormula(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

BooleanFormula negation(const BooleanFormula& f);
BooleanFormula conjunction(const BooleanFormula& f, const BooleanFormula& g);
BooleanFormula disjunction(const BooleanFormula& f, const BooleanFormula& g);
BooleanFormula implication(const BooleanFormula& f, const BooleanFormula& g);
BooleanFormula biconditional(const BooleanFormula& f, const BooleanFormula& g);
/// Left-nested conjunction; `true` for an empty list.
BooleanFormula conjunction_of(std::span<const BooleanFormula> fs);
/// Left-nested disjunction; `false` for an empty list.
BooleanFormula disjunction_of(std::span<const BooleanFormula> fs);

/// Boolean combination of Boolean formulas and []A / <>A with A Boolean.
class AlethicFormula {
 public:
  AlethicFormula(const BooleanFormula& f)  // NOLINT: every Boolean formula is alethic
      : node_(f.ptr()) {}
  /// Throws NestingError if a modal operator occurs under another one.
  static AlethicFormula from_node(NodePtr node);

  const Node& node() const { return *node_; }
  const NodePtr& ptr() const { return node_; }
  Connective op() const { return node_->op; }
  std::string to_string() const;
  /// The formula itself when it has no modal operator.
  std::optional<BooleanFormula> as_boolean() const;

  friend bool operator==(const AlethicFormula& a, const AlethicFormula& b) {
    return compare_nodes(*a.node_, *b.node_) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const AlethicFormula& a,
                                          const AlethicFormula& b) {
    return compare_nodes(*a.node_, *b.node_);
  }

 private:
  explicit AlethicFormula(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;
};

AlethicFormula box(const BooleanFormula& f);
AlethicFormula diamond(const BooleanFormula& f);
AlethicFormula negation(const AlethicFormula& f);
AlethicFormula conjunction(const AlethicFormula& f, const AlethicFormula& g);
AlethicFormula disjunction(const AlethicFormula& f, const AlethicFormula& g);
AlethicFormula implication(const AlethicFormula& f, const AlethicFormula& g);
AlethicFormula biconditional(const AlethicFormula& f, const AlethicFormula& g);

enum class RuleKind : std::uint8_t { kNormality, kObligation };

/// Normality conditional body => head, or obligation O(head | body).
struct Rule {
  RuleKind kind = RuleKind::kObligation;
  BooleanFormula body = BooleanFormula::top();
  BooleanFormula head = BooleanFormula::top();

  static Rule normality(BooleanFormula body, BooleanFormula head) {
    return {RuleKind::kNormality, std::move(body), std::move(head)};
  }
  static Rule obligation(BooleanFormula body, BooleanFormula head) {
    return {RuleKind::kObligation, std::move(body), std::move(head)};
  }

  std::string to_string() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend std::strong_ordering operator<=>(const Rule&, const Rule&) = default;
};

enum class QueryKind : std::uint8_t {
  kAlethic,
  kNormality,
  kObligation,
  kHanssonObligation,
};

/// Target of an entailment check. Conditional variants carry body/head and
/// may be negated as a whole; the alethic variant carries its own negations.
class Query {
 public:
  static Query alethic(AlethicFormula f);
  static Query normality(BooleanFormula body, BooleanFormula head,
                         bool negated = false);
  static Query obligation(BooleanFormula body, BooleanFormula head,
                          bool negated = false);
  static Query hansson(BooleanFormula body, BooleanFormula head,
                       bool negated = false);

  QueryKind kind() const { return kind_; }
  bool negated() const { return negated_; }
  bool is_conditional() const { return kind_ != QueryKind::kAlethic; }
  /// Alethic variant only.
  const AlethicFormula& formula() const;
  /// Conditional variants only.
  const BooleanFormula& body() const;
  const BooleanFormula& head() const;

  std::string to_string() const;

  friend bool operator==(const Query&, const Query&) = default;

 private:
  Query(QueryKind kind, bool negated, std::optional<AlethicFormula> f,
        std::optional<BooleanFormula> body, std::optional<BooleanFormula> head)
      : kind_(kind),
        negated_(negated),
        formula_(std::move(f)),
        body_(std::move(body)),
        head_(std::move(head)) {}

  QueryKind kind_;
  bool negated_;
  std::optional<AlethicFormula> formula_;
  std::optional<BooleanFormula> body_;
  std::optional<BooleanFormula> head_;
};

BooleanFormula parse_boolean(std::string_view text);
AlethicFormula parse_alethic(std::string_view text);
/// `B => H` yields a normality rule, `O(H | B)` / `O(H)` an obligation.
Rule parse_rule(std::string_view text);
Query parse_query(std::string_view text);

/// Sorted, duplicate-free atom names occurring in the argument.
std::vector<std::string> atoms_of(const Node& node);
std::vector<std::string> atoms_of(const BooleanFormula& f);
std::vector<std::string> atoms_of(const AlethicFormula& f);
std::vector<std::string> atoms_of(const Rule& r);
std::vector<std::string> atoms_of(const Query& q);

/// Sorted union of two sorted, duplicate-free lists.
std::vector<std::string> merge_atoms(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

}  // namespace bipref

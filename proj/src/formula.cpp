#include "bipref/formula.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>

#include "bipref/error.hpp"

namespace bipref {

namespace {

NodePtr make_leaf(Connective op, std::string atom = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->atom = std::move(atom);
  return n;
}

NodePtr make_unary(Connective op, NodePtr operand) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = std::move(operand);
  return n;
}

NodePtr make_binary(Connective op, NodePtr l, NodePtr r) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

bool is_modal(Connective op) {
  return op == Connective::kBox || op == Connective::kDiamond;
}

bool contains_modal(const Node& n) {
  if (is_modal(n.op)) return true;
  if (n.left && contains_modal(*n.left)) return true;
  return n.right && contains_modal(*n.right);
}

// Returns true if some modal operator has another modal below it.
bool has_nested_modal(const Node& n) {
  if (is_modal(n.op)) return contains_modal(*n.left);
  if (n.left && has_nested_modal(*n.left)) return true;
  return n.right && has_nested_modal(*n.right);
}

// ---------------------------------------------------------------- printing

int precedence(Connective op) {
  switch (op) {
    case Connective::kIff:
      return 1;
    case Connective::kImplies:
      return 2;
    case Connective::kOr:
      return 3;
    case Connective::kAnd:
      return 4;
    case Connective::kNot:
    case Connective::kBox:
    case Connective::kDiamond:
      return 5;
    default:
      return 6;
  }
}

bool right_associative(Connective op) {
  return op == Connective::kImplies || op == Connective::kIff;
}

const char* symbol(Connective op) {
  switch (op) {
    case Connective::kNot:
      return "~";
    case Connective::kBox:
      return "[]";
    case Connective::kDiamond:
      return "<>";
    case Connective::kAnd:
      return " & ";
    case Connective::kOr:
      return " | ";
    case Connective::kImplies:
      return " -> ";
    case Connective::kIff:
      return " <-> ";
    default:
      return "";
  }
}

void print(const Node& n, int min_prec, std::string& out) {
  const int p = precedence(n.op);
  const bool parens = p < min_prec;
  if (parens) out += '(';
  switch (n.op) {
    case Connective::kTop:
      out += "true";
      break;
    case Connective::kBottom:
      out += "false";
      break;
    case Connective::kAtom:
      out += n.atom;
      break;
    case Connective::kNot:
    case Connective::kBox:
    case Connective::kDiamond:
      out += symbol(n.op);
      print(*n.left, 5, out);
      break;
    default: {
      const bool right = right_associative(n.op);
      print(*n.left, right ? p + 1 : p, out);
      out += symbol(n.op);
      print(*n.right, right ? p : p + 1, out);
      break;
    }
  }
  if (parens) out += ')';
}

std::string print(const Node& n) {
  std::string out;
  print(n, 0, out);
  return out;
}

// Operands of O(..|..) are parenthesised when their text could contain a
// `|` outside parentheses.
std::string print_operand(const BooleanFormula& f) {
  const Connective op = f.op();
  if (op == Connective::kOr || op == Connective::kImplies ||
      op == Connective::kIff) {
    return "(" + f.to_string() + ")";
  }
  return f.to_string();
}

std::string print_obligation(const char* name, const BooleanFormula& body,
                             const BooleanFormula& head) {
  std::string out = name;
  out += '(' + print_operand(head);
  if (body.op() != Connective::kTop) out += " | " + print_operand(body);
  return out + ')';
}

// ----------------------------------------------------------------- lexing

enum class Tok : std::uint8_t {
  kIdent,
  kTrue,
  kFalse,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kBox,
  kDiamond,
  kLParen,
  kRParen,
  kArrow,  // =>
  kObl,    // O
  kOblH,   // OH
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> toks;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      std::string word(s.substr(at, i - at));
      Tok kind = word == "true"    ? Tok::kTrue
                 : word == "false" ? Tok::kFalse
                                   : Tok::kIdent;
      toks.push_back({kind, std::move(word), at});
      continue;
    }
    if (c == 'O') {
      if (i + 1 < s.size() && s[i + 1] == 'H') {
        i += 2;
        toks.push_back({Tok::kOblH, "OH", at});
      } else {
        ++i;
        toks.push_back({Tok::kObl, "O", at});
      }
      if (i < s.size() && (ident_char(s[i]) || std::isupper(static_cast<unsigned char>(s[i])))) {
        throw ParseError("unknown operator name", at);
      }
      continue;
    }
    if (starts("<->")) {
      toks.push_back({Tok::kIff, "<->", at});
      i += 3;
    } else if (starts("<>")) {
      toks.push_back({Tok::kDiamond, "<>", at});
      i += 2;
    } else if (starts("[]")) {
      toks.push_back({Tok::kBox, "[]", at});
      i += 2;
    } else if (starts("->")) {
      toks.push_back({Tok::kImplies, "->", at});
      i += 2;
    } else if (starts("=>")) {
      toks.push_back({Tok::kArrow, "=>", at});
      i += 2;
    } else if (c == '~') {
      toks.push_back({Tok::kNot, "~", at});
      ++i;
    } else if (c == '&') {
      toks.push_back({Tok::kAnd, "&", at});
      ++i;
    } else if (c == '|') {
      toks.push_back({Tok::kOr, "|", at});
      ++i;
    } else if (c == '(') {
      toks.push_back({Tok::kLParen, "(", at});
      ++i;
    } else if (c == ')') {
      toks.push_back({Tok::kRParen, ")", at});
      ++i;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      throw ParseError("atoms must start with a lowercase letter", at);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  toks.push_back({Tok::kEnd, "", s.size()});
  return toks;
}

// ---------------------------------------------------------------- parsing

// Recursive descent over a token window [pos_, limit_). The token at
// `limit_` is treated as end of input, which lets O(H | B) parse its two
// operands as independent windows.
class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {
    limit_ = toks_.size() - 1;
  }

  // Full formula, modal operators permitted (checked by the caller).
  NodePtr formula() { return iff(); }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t at = pos_ + ahead;
    return at >= limit_ ? end_token() : toks_[at];
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() {
    Token t = peek();
    if (pos_ < limit_) ++pos_;
    return t;
  }
  void expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    take();
  }
  void expect_end() {
    if (!at(Tok::kEnd)) {
      if (at(Tok::kArrow)) {
        throw NestingError("iterated or nested '=>' is not allowed", peek().pos);
      }
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
  }

  // True when the tokens from the current position to the end form a
  // single parenthesised group containing '=>' at its top level.
  bool parenthesised_conditional_ahead() const {
    if (!at(Tok::kLParen)) return false;
    int depth = 0;
    bool arrow = false;
    for (std::size_t i = pos_; i < limit_; ++i) {
      const Tok k = toks_[i].kind;
      if (k == Tok::kLParen) ++depth;
      if (k == Tok::kRParen) {
        --depth;
        if (depth == 0) return arrow && i + 1 == limit_;
      }
      if (k == Tok::kArrow && depth == 1) arrow = true;
    }
    return false;
  }

  // O(...) / OH(...) at the current position: returns {head, body}.
  std::pair<NodePtr, NodePtr> dyadic_operands() {
    const Token op = take();
    if (!at(Tok::kLParen)) {
      throw ParseError("expected '(' after " + op.text, peek().pos);
    }
    const std::size_t open = pos_;
    int depth = 0;
    std::size_t close = limit_;
    std::size_t sep = limit_;
    for (std::size_t i = open; i < limit_; ++i) {
      const Tok k = toks_[i].kind;
      if (k == Tok::kLParen) ++depth;
      if (k == Tok::kRParen && --depth == 0) {
        close = i;
        break;
      }
      if (k == Tok::kOr && depth == 1) sep = i;
    }
    if (close == limit_) throw ParseError("unbalanced parentheses", toks_[open].pos);
    const std::size_t saved_limit = limit_;
    NodePtr head;
    NodePtr body;
    pos_ = open + 1;
    if (sep == limit_) {
      head = window(close);
      body = make_leaf(Connective::kTop);
    } else {
      head = window(sep);
      pos_ = sep + 1;
      body = window(close);
    }
    limit_ = saved_limit;
    pos_ = close + 1;
    for (const NodePtr& part : {head, body}) {
      if (contains_modal(*part)) {
        throw NestingError("modal operator inside " + op.text + "(..)", op.pos);
      }
    }
    return {head, body};
  }

  std::size_t position() const { return peek().pos; }

 private:
  NodePtr window(std::size_t end) {
    const std::size_t saved = limit_;
    limit_ = end;
    if (at(Tok::kEnd)) throw ParseError("empty operand", position());
    NodePtr n = formula();
    expect_end();
    limit_ = saved;
    return n;
  }

  const Token& end_token() const {
    end_tok_ = {Tok::kEnd, "", limit_ < toks_.size() ? toks_[limit_].pos : 0};
    return end_tok_;
  }

  NodePtr iff() {
    NodePtr lhs = implies();
    if (at(Tok::kIff)) {
      take();
      return make_binary(Connective::kIff, lhs, iff());
    }
    return lhs;
  }

  NodePtr implies() {
    NodePtr lhs = disj();
    if (at(Tok::kImplies)) {
      take();
      return make_binary(Connective::kImplies, lhs, implies());
    }
    return lhs;
  }

  NodePtr disj() {
    NodePtr lhs = conj();
    while (at(Tok::kOr)) {
      take();
      lhs = make_binary(Connective::kOr, lhs, conj());
    }
    return lhs;
  }

  NodePtr conj() {
    NodePtr lhs = unary();
    while (at(Tok::kAnd)) {
      take();
      lhs = make_binary(Connective::kAnd, lhs, unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (at(Tok::kNot)) {
      take();
      return make_unary(Connective::kNot, unary());
    }
    if (at(Tok::kBox) || at(Tok::kDiamond)) {
      const Token t = take();
      NodePtr operand = unary();
      if (contains_modal(*operand)) {
        throw NestingError("modal operator inside " + t.text, t.pos);
      }
      return make_unary(t.kind == Tok::kBox ? Connective::kBox
                                            : Connective::kDiamond,
                        operand);
    }
    return primary();
  }

  NodePtr primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::kIdent:
        take();
        return make_leaf(Connective::kAtom, t.text);
      case Tok::kTrue:
        take();
        return make_leaf(Connective::kTop);
      case Tok::kFalse:
        take();
        return make_leaf(Connective::kBottom);
      case Tok::kLParen: {
        take();
        NodePtr inner = formula();
        if (at(Tok::kArrow)) {
          throw NestingError("'=>' cannot occur inside a formula", peek().pos);
        }
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kObl:
      case Tok::kOblH:
        throw NestingError(t.text + "(..) cannot occur inside a formula", t.pos);
      case Tok::kArrow:
        throw NestingError("'=>' cannot occur inside a formula", t.pos);
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t limit_ = 0;
  mutable Token end_tok_{Tok::kEnd, "", 0};
};

void collect_atoms(const Node& n, std::set<std::string>& out) {
  if (n.op == Connective::kAtom) out.insert(n.atom);
  if (n.left) collect_atoms(*n.left, out);
  if (n.right) collect_atoms(*n.right, out);
}

BooleanFormula require_boolean(NodePtr n, std::size_t pos) {
  if (contains_modal(*n)) {
    throw NestingError("modal operator inside a conditional", pos);
  }
  return BooleanFormula::from_node(std::move(n));
}

}  // namespace

std::strong_ordering compare_nodes(const Node& a, const Node& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.op <=> b.op; c != 0) return c;
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  if (a.left && b.left) {
    if (auto c = compare_nodes(*a.left, *b.left); c != 0) return c;
  }
  if (a.right && b.right) {
    if (auto c = compare_nodes(*a.right, *b.right); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  if (name == "true" || name == "false") return false;
  return std::all_of(name.begin(), name.end(), ident_char);
}

// ------------------------------------------------------------ BooleanFormula

BooleanFormula BooleanFormula::top() {
  static const NodePtr node = make_leaf(Connective::kTop);
  return BooleanFormula(node);
}

BooleanFormula BooleanFormula::bottom() {
  static const NodePtr node = make_leaf(Connective::kBottom);
  return BooleanFormula(node);
}

BooleanFormula BooleanFormula::atom(std::string_view name) {
  if (name == "true" || name == "false") {
    throw ParseError("'" + std::string(name) + "' is reserved", 0);
  }
  if (!is_valid_atom_name(name)) {
    throw ParseError("invalid atom name '" + std::string(name) + "'", 0);
  }
  return BooleanFormula(make_leaf(Connective::kAtom, std::string(name)));
}

BooleanFormula BooleanFormula::from_node(NodePtr node) {
  if (!node) throw std::invalid_argument("null formula node");
  if (contains_modal(*node)) {
    throw ParseError("modal operator in a Boolean formula", 0);
  }
  return BooleanFormula(std::move(node));
}

std::string BooleanFormula::to_string() const { return print(*node_); }

BooleanFormula negation(const BooleanFormula& f) {
  return BooleanFormula::from_node(make_unary(Connective::kNot, f.ptr()));
}
BooleanFormula conjunction(const BooleanFormula& f, const BooleanFormula& g) {
  return BooleanFormula::from_node(make_binary(Connective::kAnd, f.ptr(), g.ptr()));
}
BooleanFormula disjunction(const BooleanFormula& f, const BooleanFormula& g) {
  return BooleanFormula::from_node(make_binary(Connective::kOr, f.ptr(), g.ptr()));
}
BooleanFormula implication(const BooleanFormula& f, const BooleanFormula& g) {
  return BooleanFormula::from_node(
      make_binary(Connective::kImplies, f.ptr(), g.ptr()));
}
BooleanFormula biconditional(const BooleanFormula& f, const BooleanFormula& g) {
  return BooleanFormula::from_node(make_binary(Connective::kIff, f.ptr(), g.ptr()));
}

BooleanFormula conjunction_of(std::span<const BooleanFormula> fs) {
  if (fs.empty()) return BooleanFormula::top();
  BooleanFormula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

BooleanFormula disjunction_of(std::span<const BooleanFormula> fs) {
  if (fs.empty()) return BooleanFormula::bottom();
  BooleanFormula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

// ------------------------------------------------------------ AlethicFormula

AlethicFormula AlethicFormula::from_node(NodePtr node) {
  if (!node) throw std::invalid_argument("null formula node");
  if (has_nested_modal(*node)) {
    throw NestingError("modal operator inside another modal operator", 0);
  }
  return AlethicFormula(std::move(node));
}

std::string AlethicFormula::to_string() const { return print(*node_); }

std::optional<BooleanFormula> AlethicFormula::as_boolean() const {
  if (contains_modal(*node_)) return std::nullopt;
  return BooleanFormula::from_node(node_);
}

AlethicFormula box(const BooleanFormula& f) {
  return AlethicFormula::from_node(make_unary(Connective::kBox, f.ptr()));
}
AlethicFormula diamond(const BooleanFormula& f) {
  return AlethicFormula::from_node(make_unary(Connective::kDiamond, f.ptr()));
}
AlethicFormula negation(const AlethicFormula& f) {
  return AlethicFormula::from_node(make_unary(Connective::kNot, f.ptr()));
}
AlethicFormula conjunction(const AlethicFormula& f, const AlethicFormula& g) {
  return AlethicFormula::from_node(make_binary(Connective::kAnd, f.ptr(), g.ptr()));
}
AlethicFormula disjunction(const AlethicFormula& f, const AlethicFormula& g) {
  return AlethicFormula::from_node(make_binary(Connective::kOr, f.ptr(), g.ptr()));
}
AlethicFormula implication(const AlethicFormula& f, const AlethicFormula& g) {
  return AlethicFormula::from_node(
      make_binary(Connective::kImplies, f.ptr(), g.ptr()));
}
AlethicFormula biconditional(const AlethicFormula& f, const AlethicFormula& g) {
  return AlethicFormula::from_node(make_binary(Connective::kIff, f.ptr(), g.ptr()));
}

// ---------------------------------------------------------------- Rule/Query

std::string Rule::to_string() const {
  if (kind == RuleKind::kNormality) {
    return body.to_string() + " => " + head.to_string();
  }
  return print_obligation("O", body, head);
}

Query Query::alethic(AlethicFormula f) {
  return Query(QueryKind::kAlethic, false, std::move(f), std::nullopt,
               std::nullopt);
}
Query Query::normality(BooleanFormula body, BooleanFormula head, bool negated) {
  return Query(QueryKind::kNormality, negated, std::nullopt, std::move(body),
               std::move(head));
}
Query Query::obligation(BooleanFormula body, BooleanFormula head, bool negated) {
  return Query(QueryKind::kObligation, negated, std::nullopt, std::move(body),
               std::move(head));
}
Query Query::hansson(BooleanFormula body, BooleanFormula head, bool negated) {
  return Query(QueryKind::kHanssonObligation, negated, std::nullopt,
               std::move(body), std::move(head));
}

const AlethicFormula& Query::formula() const {
  if (!formula_) throw std::logic_error("not an alethic query");
  return *formula_;
}
const BooleanFormula& Query::body() const {
  if (!body_) throw std::logic_error("not a conditional query");
  return *body_;
}
const BooleanFormula& Query::head() const {
  if (!head_) throw std::logic_error("not a conditional query");
  return *head_;
}

std::string Query::to_string() const {
  std::string core;
  switch (kind_) {
    case QueryKind::kAlethic:
      return formula_->to_string();
    case QueryKind::kNormality:
      core = body_->to_string() + " => " + head_->to_string();
      return negated_ ? "~(" + core + ")" : core;
    case QueryKind::kObligation:
      core = print_obligation("O", *body_, *head_);
      break;
    case QueryKind::kHanssonObligation:
      core = print_obligation("OH", *body_, *head_);
      break;
  }
  return negated_ ? "~" + core : core;
}

// ------------------------------------------------------------------ parsing

BooleanFormula parse_boolean(std::string_view text) {
  Parser p(text);
  const std::size_t start = p.position();
  NodePtr n = p.formula();
  p.expect_end();
  if (contains_modal(*n)) {
    throw ParseError("modal operator in a Boolean formula", start);
  }
  return BooleanFormula::from_node(std::move(n));
}

AlethicFormula parse_alethic(std::string_view text) {
  Parser p(text);
  NodePtr n = p.formula();
  p.expect_end();
  return AlethicFormula::from_node(std::move(n));
}

Rule parse_rule(std::string_view text) {
  Query q = parse_query(text);
  if (q.negated()) throw ParseError("a rule cannot be negated", 0);
  if (q.kind() == QueryKind::kNormality) return Rule::normality(q.body(), q.head());
  if (q.kind() == QueryKind::kObligation) return Rule::obligation(q.body(), q.head());
  throw ParseError("expected 'B => H' or 'O(H | B)'", 0);
}

Query parse_query(std::string_view text) {
  Parser p(text);
  bool negated = false;
  if (p.at(Tok::kNot)) {
    const Tok next = p.peek(1).kind;
    if (next == Tok::kObl || next == Tok::kOblH) {
      negated = true;
      p.take();
    } else {
      Parser probe = p;
      probe.take();
      if (probe.parenthesised_conditional_ahead()) {
        negated = true;
        p.take();
        p.take();  // '('
        const std::size_t body_pos = p.position();
        NodePtr body = p.formula();
        p.expect(Tok::kArrow, "'=>'");
        const std::size_t head_pos = p.position();
        NodePtr head = p.formula();
        p.expect(Tok::kRParen, "')'");
        p.expect_end();
        return Query::normality(require_boolean(body, body_pos),
                                require_boolean(head, head_pos), true);
      }
    }
  }
  if (p.at(Tok::kObl) || p.at(Tok::kOblH)) {
    const bool hansson = p.at(Tok::kOblH);
    auto [head, body] = p.dyadic_operands();
    p.expect_end();
    BooleanFormula b = BooleanFormula::from_node(body);
    BooleanFormula h = BooleanFormula::from_node(head);
    return hansson ? Query::hansson(b, h, negated)
                   : Query::obligation(b, h, negated);
  }
  const std::size_t body_pos = p.position();
  NodePtr lhs = p.formula();
  if (p.at(Tok::kArrow)) {
    p.take();
    const std::size_t head_pos = p.position();
    NodePtr rhs = p.formula();
    p.expect_end();
    return Query::normality(require_boolean(lhs, body_pos),
                            require_boolean(rhs, head_pos));
  }
  p.expect_end();
  return Query::alethic(AlethicFormula::from_node(std::move(lhs)));
}

// -------------------------------------------------------------------- atoms

std::vector<std::string> atoms_of(const Node& node) {
  std::set<std::string> out;
  collect_atoms(node, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> atoms_of(const BooleanFormula& f) {
  return atoms_of(f.node());
}

std::vector<std::string> atoms_of(const AlethicFormula& f) {
  return atoms_of(f.node());
}

std::vector<std::string> atoms_of(const Rule& r) {
  return merge_atoms(atoms_of(r.body), atoms_of(r.head));
}

std::vector<std::string> atoms_of(const Query& q) {
  if (q.kind() == QueryKind::kAlethic) return atoms_of(q.formula());
  return merge_atoms(atoms_of(q.body()), atoms_of(q.head()));
}

std::vector<std::string> merge_atoms(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace bipref

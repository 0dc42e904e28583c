#include "tha/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tha/error.hpp"

namespace tha {

struct FormulaNode {
  Op op;
  std::string name;
  std::vector<Formula> children;
  std::size_t size;
  std::size_t depth;
};

namespace {

bool is_keyword(std::string_view s) { return s == "box" || s == "dia" || s == "bot" || s == "top"; }

bool is_ident(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!is_ident(name) || is_keyword(name)) throw std::invalid_argument("bad atom name: " + name);
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{Op::Atom, std::move(name), {}, 1, 0}));
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<const FormulaNode>(FormulaNode{Op::Bot, {}, {}, 1, 0}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<const FormulaNode>(FormulaNode{Op::Top, {}, {}, 1, 0}));
  return f;
}

namespace {

std::shared_ptr<const FormulaNode> binary(Op op, Formula a, Formula b) {
  const std::size_t size = 1 + a.size() + b.size();
  const std::size_t depth = 1 + std::max(a.depth(), b.depth());
  return std::make_shared<const FormulaNode>(FormulaNode{op, {}, {std::move(a), std::move(b)}, size, depth});
}

std::shared_ptr<const FormulaNode> unary(Op op, Formula a) {
  const std::size_t size = 1 + a.size();
  const std::size_t depth = 1 + a.depth();
  return std::make_shared<const FormulaNode>(FormulaNode{op, {}, {std::move(a)}, size, depth});
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return Formula(binary(Op::And, std::move(a), std::move(b))); }
Formula Formula::disj(Formula a, Formula b) { return Formula(binary(Op::Or, std::move(a), std::move(b))); }
Formula Formula::imp(Formula a, Formula b) { return Formula(binary(Op::Imp, std::move(a), std::move(b))); }
Formula Formula::box(Formula a) { return Formula(unary(Op::Box, std::move(a))); }
Formula Formula::dia(Formula a) { return Formula(unary(Op::Dia, std::move(a))); }

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }

const Formula& Formula::left() const {
  if (node_->children.empty()) throw std::logic_error("formula has no children");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() < 2) throw std::logic_error("formula is not binary");
  return node_->children[1];
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  if (op() == Op::Atom) out.insert(name());
  for (const auto& c : node_->children) {
    auto sub = c.atoms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_impl();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  // Reads an identifier-shaped word without consuming it.
  std::string_view peek_word() {
    skip_space();
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] >= 'a' && text_[end] <= 'z') {
      ++end;
      while (end < text_.size() && (std::islower(static_cast<unsigned char>(text_[end])) ||
                                    std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
    }
    return text_.substr(pos_, end - pos_);
  }

  Formula parse_impl() {
    Formula left = parse_or();
    if (accept("->")) return Formula::imp(std::move(left), parse_impl());
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (accept("|")) left = Formula::disj(std::move(left), parse_and());
    return left;
  }

  Formula parse_and() {
    Formula left = parse_unary();
    while (accept("&")) left = Formula::conj(std::move(left), parse_unary());
    return left;
  }

  Formula parse_unary() {
    const std::string_view word = peek_word();
    if (word == "box") {
      pos_ += word.size();
      return Formula::box(parse_unary());
    }
    if (word == "dia") {
      pos_ += word.size();
      return Formula::dia(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    const std::string_view word = peek_word();
    if (!word.empty()) {
      pos_ += word.size();
      if (word == "bot") return Formula::bot();
      if (word == "top") return Formula::top();
      return Formula::atom(std::string(word));
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("(")) {
      Formula f = parse_impl();
      skip_space();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Imp: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Box:
    case Op::Dia: return 4;
    default: return 5;
  }
}

struct Symbols {
  const char* bot;
  const char* top;
  const char* conj;
  const char* disj;
  const char* imp;
  const char* box;
  const char* dia;
};

constexpr Symbols kAscii{"bot", "top", " & ", " | ", " -> ", "box ", "dia "};
constexpr Symbols kUnicode{"⊥", "⊤", " ∧ ", " ∨ ", " → ", "□", "♦"};

std::string render(const Formula& f, const Symbols& s);

std::string wrap(const Formula& f, bool parens, const Symbols& s) {
  std::string inner = render(f, s);
  return parens ? "(" + inner + ")" : inner;
}

std::string render(const Formula& f, const Symbols& s) {
  const int p = precedence(f.op());
  switch (f.op()) {
    case Op::Atom: return f.name();
    case Op::Bot: return s.bot;
    case Op::Top: return s.top;
    case Op::Box:
    case Op::Dia: {
      const bool parens = precedence(f.left().op()) < 4;
      std::string prefix = f.op() == Op::Box ? s.box : s.dia;
      return prefix + wrap(f.left(), parens, s);
    }
    case Op::Imp:
      // right-associative
      return wrap(f.left(), precedence(f.left().op()) <= p, s) + s.imp +
             wrap(f.right(), precedence(f.right().op()) < p, s);
    case Op::And:
    case Op::Or:
      // left-associative
      return wrap(f.left(), precedence(f.left().op()) < p, s) + (f.op() == Op::And ? s.conj : s.disj) +
             wrap(f.right(), precedence(f.right().op()) <= p, s);
  }
  return {};
}

void collect(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is_binary()) {
    collect(f.left(), out);
    collect(f.right(), out);
  } else if (f.is_unary()) {
    collect(f.left(), out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) { return render(f, kAscii); }

std::string pretty_formula(const Formula& f) { return render(f, kUnicode); }

std::vector<Formula> subformula_closure(const Formula& f) { return subformula_closure(std::vector<Formula>{f}); }

std::vector<Formula> subformula_closure(const std::vector<Formula>& fs) {
  std::set<Formula> out;
  for (const auto& f : fs) collect(f, out);
  return {out.begin(), out.end()};
}

bool is_subformula_closed(const std::vector<Formula>& sigma) {
  const std::set<Formula> members(sigma.begin(), sigma.end());
  for (const auto& f : sigma) {
    if (f.is_binary() && (!members.count(f.left()) || !members.count(f.right()))) return false;
    if (f.is_unary() && !members.count(f.left())) return false;
  }
  return true;
}

std::vector<Formula> thc_axioms() {
  static const char* const kAxioms[] = {
      "box (p -> q) -> (box p -> box q)",
      "p -> box p",
      "box p -> (q | (q -> p))",
      "dia (p | q) -> (dia p | dia q)",
      "dia bot -> bot",
      "p -> box dia p",
      "dia box p -> p",
  };
  std::vector<Formula> out;
  for (const char* text : kAxioms) out.push_back(parse_formula(text));
  return out;
}

}  // namespace tha

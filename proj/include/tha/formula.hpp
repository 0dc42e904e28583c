#ifndef THA_FORMULA_HPP
#define THA_FORMULA_HPP

// Formulas of the temporal language: atoms, bot, top, &, |, ->, box, dia.
//
// Grammar (whitespace insignificant):
//   formula := impl
//   impl    := or ( "->" impl )?
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "box" unary | "dia" unary | atom
//   atom    := "bot" | "top" | ident | "(" formula ")"
//   ident   := [a-z][a-z0-9_]*

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tha {

enum class Op { Atom, Bot, Top, And, Or, Imp, Box, Dia };

struct FormulaNode;

/// Immutable formula; copies share structure.
class Formula {
 public:
  /// Throws std::invalid_argument if `name` is not an identifier or is a keyword.
  static Formula atom(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula dia(Formula a);
  /// a -> bot
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }

  Op op() const;
  /// Atom name; empty for other nodes.
  const std::string& name() const;
  /// First child of a binary or unary node.
  const Formula& left() const;
  /// Second child of a binary node.
  const Formula& right() const;
  bool is_binary() const { return op() == Op::And || op() == Op::Or || op() == Op::Imp; }
  bool is_unary() const { return op() == Op::Box || op() == Op::Dia; }

  /// Node count.
  std::size_t size() const;
  std::size_t depth() const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b);
  /// Canonical order: size, then constructor, then atom name, then children.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

/// Throws ParseError carrying the 1-based column of the offending token.
Formula parse_formula(std::string_view text);

/// Fully canonical text with the fewest parentheses the grammar needs.
std::string print_formula(const Formula& f);

/// Unicode rendering for human-facing output.
std::string pretty_formula(const Formula& f);

/// All subformulas, deduplicated, in canonical order.
std::vector<Formula> subformula_closure(const Formula& f);

/// Union of the closures of several formulas, canonical order.
std::vector<Formula> subformula_closure(const std::vector<Formula>& fs);

/// True iff every subformula of every member is a member.
bool is_subformula_closed(const std::vector<Formula>& sigma);

/// The three axioms of the modalized calculus followed by the four temporal ones.
std::vector<Formula> thc_axioms();

}  // namespace tha

#endif

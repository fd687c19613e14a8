#ifndef LATQUOT_TERM_HPP
#define LATQUOT_TERM_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "latquot/lattice.hpp"

namespace latquot {

/**
 * Immutable lattice term over named variables. Subterms are shared, so
 * copying a Term is cheap.
 *
 * Concrete syntax: "/\" is meet and "\/" is join; meet binds tighter and both
 * associate to the left, e.g. "a \/ b /\ c" is Join(a, Meet(b, c)).
 */
class Term {
 public:
  enum class Kind { Variable, Meet, Join };

  static Term variable(std::string name);
  static Term meet(Term left, Term right);
  static Term join(Term left, Term right);

  Kind kind() const noexcept { return node_->kind; }
  /// Only meaningful for variables.
  const std::string& name() const noexcept { return node_->name; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  /// Distinct variable names in first-occurrence order.
  std::vector<std::string> variables() const;

  /// Minimal parenthesization that parses back to the same tree.
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Term> left;
    std::shared_ptr<const Term> right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError carrying the byte offset of the problem.
Term parse_term(std::string_view text);

using Assignment = std::map<std::string, Index, std::less<>>;

/// Throws UnboundVariable when a variable of `term` is missing from
/// `assignment`.
Index eval_term(const Lattice& lattice, const Term& term, const Assignment& assignment);

}  // namespace latquot

#endif  // LATQUOT_TERM_HPP

#include "latquot/term.hpp"

#include <algorithm>
#include <cctype>

#include "latquot/error.hpp"

namespace latquot {

Term Term::variable(std::string name) {
  if (name.empty()) throw Error(ErrorKind::InvalidArgument, "variable name is empty");
  return Term(std::make_shared<const Node>(Node{Kind::Variable, std::move(name), nullptr, nullptr}));
}

Term Term::meet(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Meet, {}, std::make_shared<const Term>(std::move(left)),
           std::make_shared<const Term>(std::move(right))}));
}

Term Term::join(Term left, Term right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Join, {}, std::make_shared<const Term>(std::move(left)),
           std::make_shared<const Term>(std::move(right))}));
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  std::vector<const Term*> stack{this};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->kind() == Kind::Variable) {
      if (std::find(out.begin(), out.end(), t->name()) == out.end()) out.push_back(t->name());
    } else {
      stack.push_back(&t->right());
      stack.push_back(&t->left());
    }
  }
  return out;
}

namespace {

int precedence(Term::Kind k) {
  switch (k) {
    case Term::Kind::Join: return 1;
    case Term::Kind::Meet: return 2;
    case Term::Kind::Variable: return 3;
  }
  return 0;
}

void render(const Term& t, std::string& out) {
  if (t.kind() == Term::Kind::Variable) {
    out += t.name();
    return;
  }
  const int p = precedence(t.kind());
  // Left associativity: a left operand of equal precedence needs no parens,
  // a right operand of equal precedence does.
  const bool wrap_left = precedence(t.left().kind()) < p;
  const bool wrap_right = precedence(t.right().kind()) <= p;
  if (wrap_left) out += '(';
  render(t.left(), out);
  if (wrap_left) out += ')';
  out += t.kind() == Term::Kind::Meet ? " /\\ " : " \\/ ";
  if (wrap_right) out += '(';
  render(t.right(), out);
  if (wrap_right) out += ')';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return t;
  }

 private:
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

  Term term() {
    Term t = factor();
    while (accept("\\/")) t = Term::join(std::move(t), factor());
    return t;
  }

  Term factor() {
    Term t = atom();
    while (accept("/\\")) t = Term::meet(std::move(t), atom());
    return t;
  }

  Term atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected a variable or '('");
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = term();
      if (!accept(")")) throw SyntaxError(pos_, "expected ')'");
      return t;
    }
    auto is_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (!is_start(text_[pos_])) throw SyntaxError(pos_, "expected a variable or '('");
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_rest(text_[pos_])) ++pos_;
    return Term::variable(std::string(text_.substr(begin, pos_ - begin)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Term::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Term::Kind::Variable) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

Index eval_term(const Lattice& l, const Term& t, const Assignment& assignment) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = assignment.find(t.name());
      if (it == assignment.end()) {
        throw Error(ErrorKind::UnboundVariable, "variable '" + t.name() + "' is unbound");
      }
      if (it->second >= l.size()) {
        throw Error(ErrorKind::UnknownElement,
                    "variable '" + t.name() + "' is bound to an index out of range");
      }
      return it->second;
    }
    case Term::Kind::Meet:
      return l.meet(eval_term(l, t.left(), assignment), eval_term(l, t.right(), assignment));
    case Term::Kind::Join:
      return l.join(eval_term(l, t.left(), assignment), eval_term(l, t.right(), assignment));
  }
  return 0;
}

}  // namespace latquot

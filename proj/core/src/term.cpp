#include "qf/term.hpp"

#include <cctype>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::star(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Star;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Term(std::move(node));
}

Term Term::backslash(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Backslash;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Term(std::move(node));
}

const std::string& Term::var_name() const {
  if (node_->kind != Kind::Var) raise(Errc::SpecMismatch, "not a variable node");
  return node_->name;
}

Term Term::lhs() const {
  if (node_->kind == Kind::Var) raise(Errc::SpecMismatch, "variable has no subterms");
  return Term(node_->left);
}

Term Term::rhs() const {
  if (node_->kind == Kind::Var) raise(Errc::SpecMismatch, "variable has no subterms");
  return Term(node_->right);
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind() == Term::Kind::Var) {
    for (const auto& v : out)
      if (v == t.var_name()) return;
    out.push_back(t.var_name());
    return;
  }
  collect_vars(t.lhs(), out);
  collect_vars(t.rhs(), out);
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  collect_vars(*this, out);
  return out;
}

std::size_t Term::leaf_count() const {
  if (kind() == Kind::Var) return 1;
  return lhs().leaf_count() + rhs().leaf_count();
}

bool Term::operator==(const Term& rhs_t) const {
  if (node_ == rhs_t.node_) return true;
  if (kind() != rhs_t.kind()) return false;
  if (kind() == Kind::Var) return node_->name == rhs_t.node_->name;
  return lhs() == rhs_t.lhs() && rhs() == rhs_t.rhs();
}

std::string Term::str() const {
  if (kind() == Kind::Var) return node_->name;
  std::ostringstream os;
  // left-associative grammar: a binary left child needs no parentheses,
  // a binary right child does
  os << lhs().str();
  os << (kind() == Kind::Star ? " * " : " \\ ");
  const Term& r = rhs();
  if (r.kind() == Kind::Var) {
    os << r.str();
  } else {
    os << '(' << r.str() << ')';
  }
  return os.str();
}

namespace {

struct TermLexer {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return src[pos];
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos, what); }

  std::string read_identifier() {
    skip_ws();
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
      fail("expected an identifier");
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    return std::string(src.substr(start, pos - start));
  }
};

Term parse_term(TermLexer& lx);

Term parse_atom(TermLexer& lx) {
  if (lx.done()) lx.fail("unexpected end of input");
  char c = lx.peek();
  if (c == '(') {
    ++lx.pos;
    Term inner = parse_term(lx);
    if (lx.done() || lx.peek() != ')') lx.fail("expected ')'");
    ++lx.pos;
    return inner;
  }
  std::string name = lx.read_identifier();
  if (name == "bs") lx.fail("'bs' is the backslash operator, not a variable");
  return Term::var(std::move(name));
}

Term parse_term(TermLexer& lx) {
  Term acc = parse_atom(lx);
  while (!lx.done()) {
    char c = lx.peek();
    if (c == '*') {
      ++lx.pos;
      acc = Term::star(std::move(acc), parse_atom(lx));
    } else if (c == '\\') {
      ++lx.pos;
      acc = Term::backslash(std::move(acc), parse_atom(lx));
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t save = lx.pos;
      std::string word = lx.read_identifier();
      if (word != "bs") {
        lx.pos = save;
        lx.fail("expected an operator between terms");
      }
      acc = Term::backslash(std::move(acc), parse_atom(lx));
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

Term Term::parse(std::string_view src) {
  TermLexer lx{src};
  Term t = parse_term(lx);
  if (!lx.done()) lx.fail("trailing input after term");
  return t;
}

}  // namespace qf

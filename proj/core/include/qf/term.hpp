#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qf {

/// Immutable term over the quandle signature {*, \}. Subtrees are shared;
/// copying a Term is cheap.
class Term {
 public:
  enum class Kind { Var, Star, Backslash };

  static Term var(std::string name);
  static Term star(Term lhs, Term rhs);
  static Term backslash(Term lhs, Term rhs);

  /// Grammar: term := atom (("*" | "\" | "bs") atom)*;
  ///          atom := identifier | "(" term ")".
  /// Both operators have equal precedence and associate to the left.
  /// Identifiers are [A-Za-z][A-Za-z0-9_]*; "bs" is reserved as the spelled
  /// form of the backslash operator. Throws SyntaxError with a position.
  static Term parse(std::string_view src);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const;
  Term lhs() const;
  Term rhs() const;

  /// Distinct variables in order of first occurrence (left to right).
  std::vector<std::string> variables() const;

  /// Round-trips through parse; parentheses only where required.
  std::string str() const;

  std::size_t leaf_count() const;

  bool operator==(const Term& rhs) const;
  bool operator!=(const Term& rhs) const { return !(*this == rhs); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Var
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace qf

#pragma once

#include <string>
#include <vector>

#include "qf/term.hpp"
#include "qf/variety.hpp"

namespace qf {

/// Evaluate t in the free algebra ctx, variables as generators. Every
/// variable of t must be a generator of ctx.
FreeElement evaluate(const Term& t, const ContextPtr& ctx);

/// Normal form of t in the free algebra of the variety over the term's own
/// variables, ordered by first occurrence (the first variable is the base
/// generator).
FreeElement normalize(const Term& t, const VarietySpec& variety);

struct Verdict {
  bool valid;
  FreeElement lhs_nf;
  FreeElement rhs_nf;  // equal to lhs_nf iff valid
};

/// An identity holds in every quandle of the variety iff both sides agree in
/// the free algebra over the union of their variables (lhs variables first).
Verdict decide_identity(const Term& lhs, const Term& rhs, const VarietySpec& variety);

struct NamedIdentity {
  std::string name;
  Term lhs;
  Term rhs;
};

/// Fixed catalogue: quandle axioms, mediality, commutativity, the involutory
/// and 2-reductive laws, and the symmetry ladder x*(x*...*(x*y)) for k up
/// to 12 nestings (valid in Symmetric(n) iff n divides k).
const std::vector<NamedIdentity>& builtin_identities();

}  // namespace qf

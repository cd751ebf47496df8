#include "qf/normalize.hpp"

namespace qf {

FreeElement evaluate(const Term& t, const ContextPtr& ctx) {
  switch (t.kind()) {
    case Term::Kind::Var: return ctx->generator(t.var_name());
    case Term::Kind::Star: return star(evaluate(t.lhs(), ctx), evaluate(t.rhs(), ctx));
    case Term::Kind::Backslash:
      return backslash(evaluate(t.lhs(), ctx), evaluate(t.rhs(), ctx));
  }
  return ctx->generator(t.var_name());
}

FreeElement normalize(const Term& t, const VarietySpec& variety) {
  auto ctx = variety.context(GeneratorSet::of(t.variables()));
  return evaluate(t, ctx);
}

Verdict decide_identity(const Term& lhs, const Term& rhs, const VarietySpec& variety) {
  std::vector<std::string> vars = lhs.variables();
  for (auto& v : rhs.variables()) {
    bool seen = false;
    for (const auto& u : vars) seen = seen || u == v;
    if (!seen) vars.push_back(v);
  }
  auto ctx = variety.context(GeneratorSet::of(std::move(vars)));
  FreeElement l = evaluate(lhs, ctx);
  FreeElement r = evaluate(rhs, ctx);
  bool valid = l == r;
  return Verdict{valid, std::move(l), std::move(r)};
}

namespace {

Term symmetry_ladder(unsigned k) {
  // x*(x*...*(x*y)...) with k occurrences of x
  Term acc = Term::var("y");
  for (unsigned i = 0; i < k; ++i) acc = Term::star(Term::var("x"), std::move(acc));
  return acc;
}

std::vector<NamedIdentity> build_catalogue() {
  auto T = [](const char* s) { return Term::parse(s); };
  std::vector<NamedIdentity> out = {
      {"idempotency", T("x * x"), T("x")},
      {"left-distributivity", T("x * (y * z)"), T("(x * y) * (x * z)")},
      {"mediality", T("(x * y) * (u * v)"), T("(x * u) * (y * v)")},
      {"left-quasigroup-cancel", T("x \\ (x * y)"), T("y")},
      {"left-quasigroup-solve", T("x * (x \\ y)"), T("y")},
      {"commutativity", T("x * y"), T("y * x")},
      {"involutory", T("x * (x * y)"), T("y")},
      {"2-reductivity", T("(x * y) * y"), T("y")},
  };
  for (unsigned k = 1; k <= 12; ++k)
    out.push_back({"sym-ladder-" + std::to_string(k), symmetry_ladder(k), Term::var("y")});
  return out;
}

}  // namespace

const std::vector<NamedIdentity>& builtin_identities() {
  static const std::vector<NamedIdentity> catalogue = build_catalogue();
  return catalogue;
}

}  // namespace qf

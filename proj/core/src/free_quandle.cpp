#include "qf/free_quandle.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "qf/errors.hpp"

namespace qf {

GeneratorSet GeneratorSet::of(std::vector<std::string> names) {
  if (names.empty()) raise(Errc::SpecMismatch, "generator set is empty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) raise(Errc::SpecMismatch, "empty generator symbol");
    if (!seen.insert(n).second) raise(Errc::SpecMismatch, "duplicate generator '" + n + "'");
  }
  return GeneratorSet(std::move(names));
}

bool GeneratorSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<std::string> GeneratorSet::non_base() const {
  return {names_.begin() + 1, names_.end()};
}

ContextPtr FreeContext::medial(GeneratorSet gens) {
  return std::make_shared<FreeContext>(Key{}, std::move(gens), RingSpec::laurent());
}

ContextPtr FreeContext::f_quandle(GeneratorSet gens, const LaurentPoly& f) {
  return std::make_shared<FreeContext>(Key{}, std::move(gens), RingSpec::quotient(f));
}

ContextPtr FreeContext::symmetric(GeneratorSet gens, unsigned n) {
  if (n < 2) raise(Errc::BadModulus, "symmetric order must be >= 2");
  LaurentPoly f;
  for (unsigned r = 0; r < n; ++r) f += LaurentPoly::t(r);
  return f_quandle(std::move(gens), f);
}

ContextPtr FreeContext::reductive(GeneratorSet gens, unsigned m) {
  if (m < 2) raise(Errc::BadModulus, "reductivity level must be >= 2");
  LaurentPoly base = LaurentPoly::one() - LaurentPoly::t();
  return f_quandle(std::move(gens), pow(base, m - 1));
}

ContextPtr FreeContext::symmetric_reductive(GeneratorSet gens, Int n, unsigned m) {
  if (m != 2)
    raise(Errc::UnsupportedIdeal,
          "combined symmetric/reductive contexts are only available for reductivity 2");
  return std::make_shared<FreeContext>(Key{}, std::move(gens), RingSpec::int_mod(std::move(n)));
}

FreeElement FreeContext::generator(const std::string& name) const {
  if (!gens_.contains(name))
    raise(Errc::ContextMismatch, "generator '" + name + "' not in this context");
  return FreeElement(shared_from_this(), name, {});
}

namespace {

const ContextPtr& require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a.get() != b.get() && !a->same_as(*b))
    raise(Errc::ContextMismatch, "operands belong to different contexts");
  return a;
}

std::map<std::string, LaurentPoly> reduce_vector(const FreeContext& ctx,
                                                 std::map<std::string, LaurentPoly> raw) {
  const auto& gens = ctx.generators();
  std::map<std::string, LaurentPoly> out;
  for (auto& [name, p] : raw) {
    if (!gens.contains(name) || gens.is_base(name))
      raise(Errc::ContextMismatch, "coordinate '" + name + "' is not a non-base generator");
    LaurentPoly v = reduce(p, ctx.ring()).value;
    if (!v.is_zero()) out.emplace(name, std::move(v));
  }
  return out;
}

void accumulate(std::map<std::string, LaurentPoly>& acc, const std::string& name,
                const LaurentPoly& v) {
  auto [it, inserted] = acc.try_emplace(name, v);
  if (!inserted) it->second += v;
}

// contribution of e_i; e_z = 0
void add_basis(std::map<std::string, LaurentPoly>& acc, const GeneratorSet& gens,
               const std::string& name, const LaurentPoly& scale) {
  if (!gens.is_base(name)) accumulate(acc, name, scale);
}

std::string format_vector(const FreeContext& ctx,
                          const std::map<std::string, LaurentPoly>& vec) {
  if (vec.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& name : ctx.generators().non_base()) {
    auto it = vec.find(name);
    if (it == vec.end()) continue;
    // a piece whose lowest-exponent coefficient is negative is rendered with
    // the sign factored out, so parenthesized polynomials always start positive
    LaurentPoly body = it->second;
    const bool negative = body.terms().begin()->second < 0;
    if (negative) body = -body;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (body == LaurentPoly::one()) {
      os << "e_" << name;
    } else if (body.term_count() == 1) {
      os << body.str() << "·e_" << name;
    } else {
      os << '(' << body.str() << ")·e_" << name;
    }
  }
  return os.str();
}

}  // namespace

FreeElement::FreeElement(ContextPtr ctx, std::string gen,
                         std::map<std::string, LaurentPoly> coeffs)
    : ctx_(std::move(ctx)), gen_(std::move(gen)) {
  if (!ctx_) raise(Errc::ContextMismatch, "element has no context");
  if (!ctx_->generators().contains(gen_))
    raise(Errc::ContextMismatch, "generator '" + gen_ + "' not in this context");
  coeffs_ = reduce_vector(*ctx_, std::move(coeffs));
}

LaurentPoly FreeElement::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? LaurentPoly() : it->second;
}

bool FreeElement::operator==(const FreeElement& rhs) const {
  if (ctx_.get() != rhs.ctx_.get() && !ctx_->same_as(*rhs.ctx_)) return false;
  return gen_ == rhs.gen_ && coeffs_ == rhs.coeffs_;
}

std::string FreeElement::str() const {
  return "(" + format_vector(*ctx_, coeffs_) + ", " + gen_ + ")";
}

Displacement::Displacement(ContextPtr ctx, std::map<std::string, LaurentPoly> vec)
    : ctx_(std::move(ctx)) {
  if (!ctx_) raise(Errc::ContextMismatch, "displacement has no context");
  vec_ = reduce_vector(*ctx_, std::move(vec));
}

Displacement Displacement::basis(ContextPtr ctx, const std::string& name,
                                 const LaurentPoly& f) {
  return Displacement(std::move(ctx), {{name, f}});
}

LaurentPoly Displacement::coord(const std::string& name) const {
  auto it = vec_.find(name);
  return it == vec_.end() ? LaurentPoly() : it->second;
}

Displacement Displacement::operator+(const Displacement& rhs) const {
  require_same_context(ctx_, rhs.ctx_);
  auto out = vec_;
  for (const auto& [name, v] : rhs.vec_) accumulate(out, name, v);
  return Displacement(ctx_, std::move(out));
}

Displacement Displacement::operator-(const Displacement& rhs) const {
  return *this + (-rhs);
}

Displacement Displacement::operator-() const {
  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, v] : vec_) out.emplace(name, -v);
  return Displacement(ctx_, std::move(out));
}

Displacement Displacement::scaled(const LaurentPoly& f) const {
  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, v] : vec_) out.emplace(name, v * f);
  return Displacement(ctx_, std::move(out));
}

bool Displacement::operator==(const Displacement& rhs) const {
  if (ctx_.get() != rhs.ctx_.get() && !ctx_->same_as(*rhs.ctx_)) return false;
  return vec_ == rhs.vec_;
}

std::string Displacement::str() const { return format_vector(*ctx_, vec_); }

FreeElement star(const FreeElement& p, const FreeElement& q) {
  const auto& ctx = require_same_context(p.context(), q.context());
  const auto& gens = ctx->generators();
  const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::t();
  const LaurentPoly t = LaurentPoly::t();

  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, a] : p.coeffs()) accumulate(out, name, a * one_minus_t);
  for (const auto& [name, b] : q.coeffs()) accumulate(out, name, b * t);
  add_basis(out, gens, p.gen(), LaurentPoly::one());
  add_basis(out, gens, q.gen(), -LaurentPoly::one());
  return FreeElement(ctx, q.gen(), std::move(out));
}

FreeElement backslash(const FreeElement& p, const FreeElement& q) {
  const auto& ctx = require_same_context(p.context(), q.context());
  const auto& gens = ctx->generators();
  const LaurentPoly ti = ctx->ring().kind() == RingKind::Laurent
                             ? LaurentPoly::t(-1)
                             : inv_t(ctx->ring()).value;

  // a + t^-1 * (b + e_j - e_i - a)
  std::map<std::string, LaurentPoly> inner = q.coeffs();
  add_basis(inner, gens, q.gen(), LaurentPoly::one());
  add_basis(inner, gens, p.gen(), -LaurentPoly::one());
  for (const auto& [name, a] : p.coeffs()) accumulate(inner, name, -a);

  std::map<std::string, LaurentPoly> out = p.coeffs();
  for (const auto& [name, d] : inner) accumulate(out, name, d * ti);
  return FreeElement(ctx, q.gen(), std::move(out));
}

Displacement displacement_of_pair(const FreeElement& p, const FreeElement& q) {
  const auto& ctx = require_same_context(p.context(), q.context());
  const auto& gens = ctx->generators();
  const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::t();

  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, a] : p.coeffs()) accumulate(out, name, a * one_minus_t);
  for (const auto& [name, b] : q.coeffs()) accumulate(out, name, -(b * one_minus_t));
  add_basis(out, gens, p.gen(), LaurentPoly::one());
  add_basis(out, gens, q.gen(), -LaurentPoly::one());
  return Displacement(ctx, std::move(out));
}

FreeElement displacement_apply(const Displacement& d, const FreeElement& p) {
  const auto& ctx = require_same_context(d.context(), p.context());
  auto out = p.coeffs();
  for (const auto& [name, v] : d.coords()) accumulate(out, name, v);
  return FreeElement(ctx, p.gen(), std::move(out));
}

std::vector<std::pair<std::string, LaurentPoly>> decompose(const FreeElement& p) {
  std::vector<std::pair<std::string, LaurentPoly>> out;
  for (const auto& name : p.context()->generators().non_base()) {
    auto it = p.coeffs().find(name);
    if (it != p.coeffs().end()) out.emplace_back(name, it->second);
  }
  return out;
}

Displacement embed_affine(const FreeElement& p) {
  const auto& ctx = p.context();
  const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::t();
  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, g] : p.coeffs()) out.emplace(name, g * one_minus_t);
  add_basis(out, ctx->generators(), p.gen(), LaurentPoly::one());
  return Displacement(ctx, std::move(out));
}

FreeElement unembed_affine(const Displacement& a) {
  const auto& ctx = a.context();
  if (ctx->ring().kind() != RingKind::Laurent)
    raise(Errc::WrongContext, "unembed_affine needs Laurent coefficients");
  const auto& gens = ctx->generators();

  std::string gen = gens.base();
  bool found_unit = false;
  for (const auto& [name, v] : a.coords()) {
    Int lambda = v.eval_at_one();
    if (lambda == 0) continue;
    if (lambda == 1 && !found_unit) {
      found_unit = true;
      gen = name;
    } else {
      raise(Errc::NotInImage, "evaluation at t=1 is neither 0 nor a basis vector");
    }
  }

  std::map<std::string, LaurentPoly> g;
  for (const auto& [name, v] : a.coords()) {
    LaurentPoly shifted = v;
    if (name == gen) shifted -= LaurentPoly::one();
    g.emplace(name, divide_by_one_minus_t(shifted));
  }
  return FreeElement(ctx, gen, std::move(g));
}

Displacement affine_star(const Displacement& a, const Displacement& b) {
  const auto& ctx = require_same_context(a.context(), b.context());
  const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::t();
  const LaurentPoly t = LaurentPoly::t();
  std::map<std::string, LaurentPoly> out;
  for (const auto& [name, v] : a.coords()) accumulate(out, name, v * one_minus_t);
  for (const auto& [name, v] : b.coords()) accumulate(out, name, v * t);
  return Displacement(ctx, std::move(out));
}

namespace {
void require_joyce_vector(const std::vector<Int>& v) {
  int odd = 0;
  for (const auto& c : v)
    if (c % 2 != 0 && ++odd > 1)
      raise(Errc::NotInModel, "vector has more than one odd coordinate");
}
}  // namespace

std::vector<Int> joyce_model_star(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) raise(Errc::SpecMismatch, "vectors of different length");
  require_joyce_vector(a);
  require_joyce_vector(b);
  std::vector<Int> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = 2 * a[k] - b[k];
  return out;
}

std::vector<Int> joyce_isomorphism(const FreeElement& p) {
  const auto& ctx = p.context();
  const LaurentPoly one_plus_t = LaurentPoly::one() + LaurentPoly::t();
  if (ctx->ring().kind() != RingKind::Quotient || ctx->ring().modulus() != one_plus_t)
    raise(Errc::WrongContext, "Joyce model needs the modulus 1+t");

  std::vector<Int> out;
  for (const auto& name : ctx->generators().non_base()) {
    // canonical residues mod 1+t are integer constants
    Int v = 2 * p.coeff(name).constant_coeff();
    if (name == p.gen()) v += 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qf

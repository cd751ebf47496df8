#include "qf/ring.hpp"

#include <cctype>

#include "qf/errors.hpp"

namespace qf {

RingSpec RingSpec::laurent() { return RingSpec{}; }

RingSpec RingSpec::quotient(LaurentPoly f) {
  if (f.is_zero()) raise(Errc::BadModulus, "modulus is zero");
  if (f.low_degree() != 0) f = f.times_monomial(-f.low_degree(), 1);
  if (f.degree() < 1) raise(Errc::BadModulus, "modulus " + f.str() + " is a unit");
  const Int c0 = f.constant_coeff();
  const Int& cs = f.leading_coeff();
  if (c0 != 1 && c0 != -1)
    raise(Errc::BadModulus, "constant coefficient of " + f.str() + " is not +1 or -1");
  if (cs != 1 && cs != -1)
    raise(Errc::BadModulus, "leading coefficient of " + f.str() + " is not +1 or -1");
  RingSpec spec;
  spec.kind_ = RingKind::Quotient;
  spec.modulus_ = std::move(f);
  return spec;
}

RingSpec RingSpec::int_mod(Int n) {
  if (n < 1) raise(Errc::BadModulus, "integer modulus must be >= 1");
  RingSpec spec;
  spec.kind_ = RingKind::IntMod;
  spec.n_ = std::move(n);
  return spec;
}

const LaurentPoly& RingSpec::modulus() const {
  if (kind_ != RingKind::Quotient) raise(Errc::NotQuotient, "spec has no polynomial modulus");
  return modulus_;
}

const Int& RingSpec::mod_n() const {
  if (kind_ != RingKind::IntMod) raise(Errc::NotQuotient, "spec has no integer modulus");
  return n_;
}

bool RingSpec::operator==(const RingSpec& rhs) const {
  if (kind_ != rhs.kind_) return false;
  switch (kind_) {
    case RingKind::Laurent: return true;
    case RingKind::Quotient: return modulus_ == rhs.modulus_;
    case RingKind::IntMod: return n_ == rhs.n_;
  }
  return false;
}

std::string RingSpec::str() const {
  switch (kind_) {
    case RingKind::Laurent: return "laurent";
    case RingKind::Quotient: return "mod " + modulus_.str();
    case RingKind::IntMod: return "zmod " + n_.str();
  }
  return "laurent";
}

RingSpec RingSpec::parse(const std::string& text) {
  auto ltrim = [](std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };
  std::string_view s = ltrim(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "laurent") return laurent();
  if (s.rfind("mod ", 0) == 0) return quotient(LaurentPoly::parse(s.substr(4)));
  if (s.rfind("zmod ", 0) == 0) {
    auto digits = ltrim(s.substr(5));
    if (digits.empty()) raise(Errc::BadModulus, "zmod needs an integer");
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        raise(Errc::BadModulus, "zmod needs an integer, got '" + std::string(digits) + "'");
    return int_mod(Int(std::string(digits)));
  }
  raise(Errc::BadModulus, "unrecognized ring '" + std::string(s) + "'");
}

bool RingElement::operator==(const RingElement& rhs) const {
  return spec == rhs.spec && value == rhs.value;
}

RingElement inv_t(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::Laurent:
      raise(Errc::NotQuotient, "t^-1 has no polynomial representation in Z[t,t^-1]");
    case RingKind::IntMod:
      return reduce(LaurentPoly::one(), spec);
    case RingKind::Quotient:
      break;
  }
  const LaurentPoly& f = spec.modulus();
  const Int c0 = f.constant_coeff();
  LaurentPoly inv;
  for (const auto& [e, c] : f.terms())
    if (e >= 1) inv += LaurentPoly::monomial(e - 1, -c * c0);
  return {spec, inv};
}

RingElement reduce(const LaurentPoly& p, const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::Laurent:
      return {spec, p};
    case RingKind::IntMod: {
      const Int& n = spec.mod_n();
      Int v = p.eval_at_one() % n;
      if (v < 0) v += n;
      return {spec, LaurentPoly::constant(v)};
    }
    case RingKind::Quotient:
      break;
  }
  LaurentPoly shifted;
  LaurentPoly inv;  // computed lazily, only elements with negative exponents need it
  for (const auto& [e, c] : p.terms()) {
    if (e >= 0) {
      shifted += LaurentPoly::monomial(e, c);
    } else {
      if (inv.is_zero()) inv = inv_t(spec).value;
      shifted += pow(inv, static_cast<unsigned>(-e)).times(c);
    }
  }
  auto [q, r] = divmod(shifted, spec.modulus());
  (void)q;
  return {spec, r};
}

namespace {
void require_same(const RingSpec& a, const RingSpec& b) {
  if (a != b) raise(Errc::SpecMismatch, "ring elements live in different rings");
}
}  // namespace

RingElement radd(const RingElement& a, const RingElement& b) {
  require_same(a.spec, b.spec);
  return reduce(a.value + b.value, a.spec);
}

RingElement rsub(const RingElement& a, const RingElement& b) {
  require_same(a.spec, b.spec);
  return reduce(a.value - b.value, a.spec);
}

RingElement rmul(const RingElement& a, const RingElement& b) {
  require_same(a.spec, b.spec);
  return reduce(a.value * b.value, a.spec);
}

}  // namespace qf

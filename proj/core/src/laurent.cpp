#include "qf/laurent.hpp"

#include <cctype>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

namespace {
const Int kZero = 0;
}

LaurentPoly LaurentPoly::constant(Int c) { return monomial(0, std::move(c)); }

LaurentPoly LaurentPoly::monomial(Exp e, Int c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

Int LaurentPoly::coeff(Exp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

LaurentPoly::Exp LaurentPoly::degree() const {
  if (terms_.empty()) raise(Errc::SpecMismatch, "degree of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly::Exp LaurentPoly::low_degree() const {
  if (terms_.empty()) raise(Errc::SpecMismatch, "low_degree of zero polynomial");
  return terms_.begin()->first;
}

const Int& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) raise(Errc::SpecMismatch, "leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void LaurentPoly::add_term(Exp e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::times(const Int& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

LaurentPoly LaurentPoly::times_monomial(Exp e, const Int& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [ee, k] : terms_) out.terms_.emplace(ee + e, k * c);
  return out;
}

bool LaurentPoly::operator<(const LaurentPoly& rhs) const {
  return terms_ < rhs.terms_;
}

LaurentPoly pow(const LaurentPoly& base, unsigned k) {
  LaurentPoly acc = LaurentPoly::one();
  LaurentPoly sq = base;
  while (k) {
    if (k & 1u) acc *= sq;
    k >>= 1u;
    if (k) sq *= sq;
  }
  return acc;
}

LaurentPoly divide_by_one_minus_t(const LaurentPoly& p) {
  if (p.eval_at_one() != 0)
    raise(Errc::NotDivisible, "eval at t=1 is " + p.eval_at_one().str() + ", expected 0");
  // Cancel the lowest term against (1-t)*c*t^e = c*t^e - c*t^{e+1}. The
  // coefficient sum stays zero throughout, so the low degree climbs until the
  // remainder vanishes.
  LaurentPoly rem = p;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    auto e = rem.low_degree();
    Int c = rem.coeff(e);
    quot += LaurentPoly::monomial(e, c);
    rem -= LaurentPoly::monomial(e, c) - LaurentPoly::monomial(e + 1, c);
  }
  return quot;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& divisor) {
  if (divisor.is_zero()) raise(Errc::SpecMismatch, "division by zero polynomial");
  if (!a.is_zero() && a.low_degree() < 0)
    raise(Errc::SpecMismatch, "divmod dividend has negative exponents");
  if (divisor.low_degree() < 0)
    raise(Errc::SpecMismatch, "divmod divisor has negative exponents");
  const Int& lead = divisor.leading_coeff();
  if (lead != 1 && lead != -1)
    raise(Errc::SpecMismatch, "divmod divisor leading coefficient must be +1 or -1");

  LaurentPoly quot;
  LaurentPoly rem = a;
  auto d = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= d) {
    Int c = rem.leading_coeff() * lead;  // lead is its own inverse
    auto e = rem.degree() - d;
    quot += LaurentPoly::monomial(e, c);
    rem -= divisor.times_monomial(e, c);
  }
  return {quot, rem};
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    first = false;
    if (e == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str();
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

struct PolyLexer {
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

  Int read_natural() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected digits");
    Int v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::int64_t read_exponent() {
    skip_ws();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) {
      neg = src[pos] == '-';
      ++pos;
    }
    skip_ws();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected exponent digits after '^'");
    std::int64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > (std::int64_t{1} << 40)) fail("exponent out of range");
      ++pos;
    }
    return neg ? -v : v;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view src) {
  PolyLexer lx{src};
  LaurentPoly out;
  bool any = false;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (any) {
      lx.fail("expected '+' or '-' between terms");
    }
    if (lx.done()) lx.fail("dangling sign");
    c = lx.peek();

    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = lx.read_natural();
      saw_coeff = true;
    }
    std::int64_t exp = 0;
    bool saw_t = false;
    if (!lx.done() && lx.peek() == 't') {
      ++lx.pos;
      saw_t = true;
      exp = 1;
      if (!lx.done() && lx.peek() == '^') {
        ++lx.pos;
        exp = lx.read_exponent();
      }
    }
    if (!saw_coeff && !saw_t) lx.fail("expected a term");
    out += LaurentPoly::monomial(exp, coeff * sign);
    any = true;
  }
  if (!any) throw SyntaxError(0, "empty polynomial");
  return out;
}

}  // namespace qf

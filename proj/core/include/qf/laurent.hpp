#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace qf {

using Int = boost::multiprecision::cpp_int;

/// Sparse element of Z[t,t^-1]: a finitely supported map from exponent to
/// coefficient. Canonical form stores no zero coefficients; the zero
/// polynomial is the empty map.
class LaurentPoly {
 public:
  using Exp = std::int64_t;
  using TermMap = std::map<Exp, Int>;

  LaurentPoly() = default;  // zero

  static LaurentPoly constant(Int c);
  static LaurentPoly one() { return constant(1); }
  static LaurentPoly t(Exp e = 1) { return monomial(e, 1); }
  static LaurentPoly monomial(Exp e, Int c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  Int coeff(Exp e) const;

  // degree/low_degree require a nonzero polynomial
  Exp degree() const;
  Exp low_degree() const;
  const Int& leading_coeff() const;
  Int constant_coeff() const { return coeff(0); }

  // the evaluation homomorphism t -> 1 (sum of coefficients)
  Int eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly times(const Int& c) const;
  LaurentPoly times_monomial(Exp e, const Int& c) const;

  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }
  bool operator<(const LaurentPoly& rhs) const;  // arbitrary total order for containers

  /// Compact textual form, ascending exponents: "1-t+2t^3", "t^-1", "0".
  std::string str() const;

  /// Whitespace-insensitive parse of the textual form. Throws SyntaxError.
  static LaurentPoly parse(std::string_view src);

 private:
  void add_term(Exp e, const Int& c);
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned k);

inline Int eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }

/// Exact quotient of p by (1-t). Throws NotDivisible unless eval_at_one(p) == 0.
LaurentPoly divide_by_one_minus_t(const LaurentPoly& p);

/// Long division a = q*divisor + r with deg r < deg divisor. Both operands must
/// live in Z[t] (no negative exponents) and the divisor's leading coefficient
/// must be +1 or -1, so division is exact over Z.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& divisor);

}  // namespace qf

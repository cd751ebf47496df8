#pragma once

#include <string>

#include "qf/laurent.hpp"

namespace qf {

enum class RingKind {
  Laurent,   // Z[t, t^-1], no reduction
  Quotient,  // Z[t]/(f) with f's constant and leading coefficients in {+1, -1}
  IntMod,    // Z_n with t == 1; the coefficient ring of combined
             // n-symmetric 2-reductive contexts
};

class RingSpec {
 public:
  static RingSpec laurent();

  /// Z[t]/(f). The modulus is normalized so its low degree is 0 (multiplying
  /// by a power of t does not change the ideal in the Laurent ring); after
  /// normalization it must have degree >= 1 and constant and leading
  /// coefficients +1 or -1, else BadModulus.
  static RingSpec quotient(LaurentPoly f);

  static RingSpec int_mod(Int n);  // n >= 1

  RingKind kind() const { return kind_; }
  const LaurentPoly& modulus() const;  // Quotient only
  const Int& mod_n() const;            // IntMod only

  bool operator==(const RingSpec& rhs) const;
  bool operator!=(const RingSpec& rhs) const { return !(*this == rhs); }

  /// "laurent", "mod <poly>", or "zmod <n>"; round-trips through parse().
  std::string str() const;
  static RingSpec parse(const std::string& text);

 private:
  RingSpec() = default;
  RingKind kind_ = RingKind::Laurent;
  LaurentPoly modulus_;
  Int n_ = 0;
};

/// A canonical representative: degree < deg(f) and no negative exponents for
/// Quotient specs, a constant in [0, n) for IntMod, unrestricted for Laurent.
struct RingElement {
  RingSpec spec;
  LaurentPoly value;

  bool operator==(const RingElement& rhs) const;
  bool operator!=(const RingElement& rhs) const { return !(*this == rhs); }
  std::string str() const { return value.str(); }
};

/// Canonical image of p in the ring described by spec. Negative exponents are
/// eliminated through the representation of t^-1 first, then the result is
/// reduced below the modulus degree; the two steps give a unique normal form.
RingElement reduce(const LaurentPoly& p, const RingSpec& spec);

/// Representation of t^-1: -(c_1 + c_2 t + ... + c_s t^{s-1}) * c_0 for a
/// quotient by f = c_0 + ... + c_s t^s, the constant 1 for IntMod.
/// Throws NotQuotient for the plain Laurent ring.
RingElement inv_t(const RingSpec& spec);

RingElement radd(const RingElement& a, const RingElement& b);
RingElement rsub(const RingElement& a, const RingElement& b);
RingElement rmul(const RingElement& a, const RingElement& b);

}  // namespace qf

#include "qf/cyclotomic.hpp"

#include "qf/errors.hpp"

namespace qf {

LaurentPoly cyclotomic(unsigned k) {
  if (k == 0) raise(Errc::SpecMismatch, "cyclotomic index must be positive");
  if (k == 1) return LaurentPoly::t() - LaurentPoly::one();
  LaurentPoly numerator = LaurentPoly::t(static_cast<LaurentPoly::Exp>(k)) - LaurentPoly::one();
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [q, r] = divmod(numerator, cyclotomic(d));
    if (!r.is_zero()) raise(Errc::SpecMismatch, "cyclotomic division left a remainder");
    numerator = q;
  }
  return numerator;
}

std::vector<LaurentPoly> factor_symmetric_poly(unsigned n) {
  if (n < 2) raise(Errc::SpecMismatch, "factor_symmetric_poly needs n >= 2");
  std::vector<LaurentPoly> out;
  for (unsigned k = 2; k <= n; ++k)
    if (n % k == 0) out.push_back(cyclotomic(k));
  return out;
}

std::vector<RingElement> crt_residues(const RingElement& a,
                                      const std::vector<LaurentPoly>& factors) {
  if (a.spec.kind() != RingKind::Quotient)
    raise(Errc::NotQuotient, "crt_residues needs an element of a quotient ring");
  LaurentPoly prod = LaurentPoly::one();
  for (const auto& f : factors) prod *= f;
  if (prod != a.spec.modulus())
    raise(Errc::FactorMismatch,
          "factors multiply to " + prod.str() + ", modulus is " + a.spec.modulus().str());
  std::vector<RingElement> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(reduce(a.value, RingSpec::quotient(f)));
  return out;
}

}  // namespace qf

#pragma once

#include <vector>

#include "qf/ring.hpp"

namespace qf {

/// The k-th cyclotomic polynomial, computed as (t^k - 1) divided exactly by
/// the product of Phi_d over proper divisors d of k. No factorization of
/// integers beyond trial division of k is involved.
LaurentPoly cyclotomic(unsigned k);

/// [Phi_k : k | n, k > 1] in ascending k. The product equals 1 + t + ... +
/// t^{n-1}, and multiplying by (t - 1) gives t^n - 1.
std::vector<LaurentPoly> factor_symmetric_poly(unsigned n);

/// Residues of a modulo each factor. The factors must multiply to a's
/// modulus exactly (FactorMismatch otherwise); a must live in a Quotient
/// ring (NotQuotient).
std::vector<RingElement> crt_residues(const RingElement& a,
                                      const std::vector<LaurentPoly>& factors);

}  // namespace qf

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qf/ring.hpp"

namespace qf {

/// Ordered list of distinct generator symbols. The first symbol is the base
/// generator z; the remaining symbols X^- index the coordinates of the free
/// module, with e_z = 0 by convention.
class GeneratorSet {
 public:
  static GeneratorSet of(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  const std::string& base() const { return names_.front(); }
  std::size_t size() const { return names_.size(); }
  bool contains(const std::string& name) const;
  bool is_base(const std::string& name) const { return name == base(); }

  /// X^- in declaration order.
  std::vector<std::string> non_base() const;

  bool operator==(const GeneratorSet& rhs) const { return names_ == rhs.names_; }
  bool operator!=(const GeneratorSet& rhs) const { return !(*this == rhs); }

 private:
  explicit GeneratorSet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

class FreeContext;
using ContextPtr = std::shared_ptr<const FreeContext>;
class FreeElement;

/// A free medial quandle (or free f-quandle) over a fixed generator set,
/// bundling the generators with the coefficient ring of its module.
/// Immutable; elements hold a shared pointer to their context.
class FreeContext : public std::enable_shared_from_this<FreeContext> {
  struct Key {};

 public:
  FreeContext(Key, GeneratorSet gens, RingSpec ring)
      : gens_(std::move(gens)), ring_(std::move(ring)) {}

  static ContextPtr medial(GeneratorSet gens);
  static ContextPtr f_quandle(GeneratorSet gens, const LaurentPoly& f);
  /// f = 1 + t + ... + t^{n-1}; n >= 2.
  static ContextPtr symmetric(GeneratorSet gens, unsigned n);
  /// f = (1-t)^{m-1}; m >= 2.
  static ContextPtr reductive(GeneratorSet gens, unsigned m);
  /// n-symmetric combined with m-reductive. Only m = 2 has a principal
  /// modulus (the coefficient ring collapses to Z_n with t == 1); any other
  /// m is refused with UnsupportedIdeal.
  static ContextPtr symmetric_reductive(GeneratorSet gens, Int n, unsigned m = 2);

  const GeneratorSet& generators() const { return gens_; }
  const RingSpec& ring() const { return ring_; }

  /// The element (0, name).
  FreeElement generator(const std::string& name) const;

  bool same_as(const FreeContext& other) const {
    return this == &other || (gens_ == other.gens_ && ring_ == other.ring_);
  }

 private:
  GeneratorSet gens_;
  RingSpec ring_;
};

/// Normal form (a, i): a finitely supported coordinate vector over X^- with
/// entries canonical in the context's ring, plus the orbit generator i.
/// Two elements are equal iff their contexts agree, the generators match,
/// and the stored coordinates are identical.
class FreeElement {
 public:
  FreeElement(ContextPtr ctx, std::string gen, std::map<std::string, LaurentPoly> coeffs);

  const ContextPtr& context() const { return ctx_; }
  const std::string& gen() const { return gen_; }
  const std::map<std::string, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(const std::string& name) const;

  bool operator==(const FreeElement& rhs) const;
  bool operator!=(const FreeElement& rhs) const { return !(*this == rhs); }

  /// "(e_1 + (t)·e_2, 2)"; the zero vector prints as "(0, i)".
  std::string str() const;

 private:
  ContextPtr ctx_;
  std::string gen_;
  std::map<std::string, LaurentPoly> coeffs_;
};

/// An element of the free module M over X^-. Displacements L_p L_q^{-1} are
/// exactly these vectors (Dis(F) is isomorphic to M), and the affine
/// embedding lands in the same module, so one type serves both roles.
class Displacement {
 public:
  explicit Displacement(ContextPtr ctx, std::map<std::string, LaurentPoly> vec = {});

  static Displacement zero(ContextPtr ctx) { return Displacement(std::move(ctx)); }
  /// f * e_name; name must not be the base generator.
  static Displacement basis(ContextPtr ctx, const std::string& name,
                            const LaurentPoly& f = LaurentPoly::one());

  const ContextPtr& context() const { return ctx_; }
  const std::map<std::string, LaurentPoly>& coords() const { return vec_; }
  LaurentPoly coord(const std::string& name) const;
  bool is_zero() const { return vec_.empty(); }

  Displacement operator+(const Displacement& rhs) const;
  Displacement operator-(const Displacement& rhs) const;
  Displacement operator-() const;
  /// Coordinate-wise multiplication by f; conjugation by L^k is the case
  /// f = t^k, the power alpha^{f(L)} is the general case.
  Displacement scaled(const LaurentPoly& f) const;

  bool operator==(const Displacement& rhs) const;
  bool operator!=(const Displacement& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  ContextPtr ctx_;
  std::map<std::string, LaurentPoly> vec_;
};

/// (a,i) * (b,j) = ((1-t)a + tb + e_i - e_j, j).
FreeElement star(const FreeElement& p, const FreeElement& q);

/// (a,i) \ (b,j) = ((1 - t^-1)a + t^-1 (b + e_j - e_i), j); the unique
/// solution of star(p, result) == q.
FreeElement backslash(const FreeElement& p, const FreeElement& q);

/// The vector (1-t)(a-b) + e_i - e_j representing L_p L_q^{-1}.
Displacement displacement_of_pair(const FreeElement& p, const FreeElement& q);

/// (a + d, i); displacements translate within an orbit.
FreeElement displacement_apply(const Displacement& d, const FreeElement& p);

/// Nonzero coordinates (i, f_i) in generator declaration order. Applying
/// the product of basis displacements f_i * e_i to (0, p.gen) rebuilds p.
std::vector<std::pair<std::string, LaurentPoly>> decompose(const FreeElement& p);

/// R_{(0,z)} composed with the orbit chart: p = (g, i) maps to (1-t)g + e_i.
/// A quandle embedding of F into Aff(M, t) where a*b = (1-t)a + tb.
Displacement embed_affine(const FreeElement& p);

/// Inverse of embed_affine on its image. The coordinate-wise evaluation of a
/// at t = 1 must be zero or a standard basis vector e_i (NotInImage
/// otherwise); only Laurent contexts support the exact division involved
/// (WrongContext for quotient coefficient rings, where evaluation at 1 is
/// not defined on residue classes).
FreeElement unembed_affine(const Displacement& a);

/// a*b = (1-t)a + tb on module vectors, the affine quandle operation that
/// embed_affine intertwines with star.
Displacement affine_star(const Displacement& a, const Displacement& b);

/// 2a - b on integer vectors with at most one odd coordinate each
/// (NotInModel otherwise). The involutory medial model of the free
/// 2-symmetric quandle.
std::vector<Int> joyce_model_star(const std::vector<Int>& a, const std::vector<Int>& b);

/// 2g + e_i as an integer vector over X^- in declaration order; requires a
/// context whose modulus is 1 + t (WrongContext otherwise). A bijective
/// homomorphism onto the at-most-one-odd-coordinate vectors.
std::vector<Int> joyce_isomorphism(const FreeElement& p);

}  // namespace qf

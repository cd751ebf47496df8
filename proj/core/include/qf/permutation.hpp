#pragma once

#include <cstdint>
#include <vector>

#include "qf/finite_table.hpp"

namespace qf {

/// Bijection on {0..n-1}. Composition is (a*b)(x) = a(b(x)); conjugation
/// follows a^b = b a b^-1.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& image() const { return img_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& b) const;  // b * this * b^-1
  Permutation power(std::int64_t k) const;
  /// this^c with c reduced modulo the permutation's order first.
  Permutation power(const Int& c) const;
  std::int64_t order() const;

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

 private:
  std::vector<int> img_;
};

/// Closure cap for permutation-group enumeration; QF_CLOSURE_CAP overrides
/// the default of 10^6 elements.
std::size_t default_closure_cap();

/// A permutation group given by generators with its full element set.
class PermGroup {
 public:
  /// Breadth-first closure of the generators and their inverses.
  /// ClosureLimitExceeded past the cap.
  static PermGroup closure(int degree, std::vector<Permutation> gens,
                           std::size_t cap = default_closure_cap());

  const std::vector<Permutation>& generators() const { return gens_; }
  /// Sorted; always contains the identity.
  const std::vector<Permutation>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Permutation& p) const;
  bool is_abelian() const { return abelian_; }
  bool is_subgroup_of(const PermGroup& g) const;

 private:
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  bool abelian_ = false;
};

/// The left translation L_x (row x); NotLeftQuasigroup if the row is not a
/// bijection.
Permutation left_translation(const FiniteBinaryTable& Q, int x);

/// LMlt(Q) = <L_x : x in Q>.
PermGroup lmlt(const FiniteBinaryTable& Q, std::size_t cap = default_closure_cap());

/// Dis(Q) = <L_x L_y^-1 : x, y in Q>; generated already by {L_x L_0^-1}.
PermGroup dis(const FiniteBinaryTable& Q, std::size_t cap = default_closure_cap());

/// Product of a word of left translations with exponents +-1.
Permutation word_product(const FiniteBinaryTable& Q,
                         const std::vector<std::pair<int, int>>& word);

}  // namespace qf

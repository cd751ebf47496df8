#pragma once

#include <string>

#include "qf/free_quandle.hpp"

namespace qf {

/// A subvariety of medial quandles in which terms are normalized, together
/// with the coefficient ring of its free algebras.
class VarietySpec {
 public:
  enum class Kind {
    Medial,               // the whole variety, Laurent coefficients
    Symmetric,            // L_x^n = 1, modulus 1 + t + ... + t^{n-1}
    Reductive,            // m-reductive, modulus (1-t)^{m-1}
    SymmetricReductive2,  // n-symmetric and 2-reductive, ring Z_n
    CustomModulus,        // arbitrary f-quandles
  };

  static VarietySpec medial();
  static VarietySpec symmetric(unsigned n);            // n >= 2
  static VarietySpec reductive(unsigned m);            // m >= 2
  static VarietySpec symmetric_reductive2(Int n);
  static VarietySpec custom_modulus(LaurentPoly f);

  /// CLI flag forms: "medial", "sym:<n>", "red:<m>", "sym:<n>+red:2",
  /// "mod:<poly>". A combined flag with reductivity other than 2 is refused
  /// with UnsupportedIdeal.
  static VarietySpec parse(const std::string& flag);

  Kind kind() const { return kind_; }
  unsigned order() const { return order_; }           // Symmetric/Reductive
  const Int& mod_n() const { return n_; }             // SymmetricReductive2
  const LaurentPoly& modulus() const { return f_; }   // CustomModulus

  /// The free algebra of this variety over the given generators.
  ContextPtr context(GeneratorSet gens) const;

  std::string str() const;  // the canonical flag form

  bool operator==(const VarietySpec& rhs) const;
  bool operator!=(const VarietySpec& rhs) const { return !(*this == rhs); }

 private:
  VarietySpec() = default;
  Kind kind_ = Kind::Medial;
  unsigned order_ = 0;
  Int n_ = 0;
  LaurentPoly f_;
};

}  // namespace qf

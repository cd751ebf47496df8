#include "qf/variety.hpp"

#include <cctype>

#include "qf/errors.hpp"

namespace qf {

VarietySpec VarietySpec::medial() { return VarietySpec{}; }

VarietySpec VarietySpec::symmetric(unsigned n) {
  if (n < 2) raise(Errc::BadModulus, "symmetric order must be >= 2");
  VarietySpec v;
  v.kind_ = Kind::Symmetric;
  v.order_ = n;
  return v;
}

VarietySpec VarietySpec::reductive(unsigned m) {
  if (m < 2) raise(Errc::BadModulus, "reductivity level must be >= 2");
  VarietySpec v;
  v.kind_ = Kind::Reductive;
  v.order_ = m;
  return v;
}

VarietySpec VarietySpec::symmetric_reductive2(Int n) {
  if (n < 1) raise(Errc::BadModulus, "symmetric order must be >= 1");
  VarietySpec v;
  v.kind_ = Kind::SymmetricReductive2;
  v.n_ = std::move(n);
  return v;
}

VarietySpec VarietySpec::custom_modulus(LaurentPoly f) {
  RingSpec::quotient(f);  // validation only
  VarietySpec v;
  v.kind_ = Kind::CustomModulus;
  v.f_ = std::move(f);
  return v;
}

namespace {

unsigned parse_positive(const std::string& flag, std::size_t from, std::size_t to) {
  if (from >= to) throw SyntaxError(from, "expected a number in variety flag");
  unsigned v = 0;
  for (std::size_t k = from; k < to; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(flag[k])))
      throw SyntaxError(k, "expected a number in variety flag");
    v = v * 10 + static_cast<unsigned>(flag[k] - '0');
    if (v > 1u << 20) throw SyntaxError(k, "variety order out of range");
  }
  return v;
}

}  // namespace

VarietySpec VarietySpec::parse(const std::string& flag) {
  if (flag == "medial") return medial();
  if (flag.rfind("mod:", 0) == 0) return custom_modulus(LaurentPoly::parse(flag.substr(4)));
  if (flag.rfind("sym:", 0) == 0) {
    auto plus = flag.find('+');
    if (plus == std::string::npos) return symmetric(parse_positive(flag, 4, flag.size()));
    unsigned n = parse_positive(flag, 4, plus);
    if (flag.compare(plus, std::string::npos, "+red:2") != 0) {
      if (flag.compare(plus, 5, "+red:") == 0)
        raise(Errc::UnsupportedIdeal,
              "combined symmetric/reductive varieties are only available for red:2");
      throw SyntaxError(plus, "expected '+red:2' in variety flag");
    }
    return symmetric_reductive2(Int(n));
  }
  if (flag.rfind("red:", 0) == 0) return reductive(parse_positive(flag, 4, flag.size()));
  throw SyntaxError(0, "unrecognized variety '" + flag + "'");
}

ContextPtr VarietySpec::context(GeneratorSet gens) const {
  switch (kind_) {
    case Kind::Medial: return FreeContext::medial(std::move(gens));
    case Kind::Symmetric: return FreeContext::symmetric(std::move(gens), order_);
    case Kind::Reductive: return FreeContext::reductive(std::move(gens), order_);
    case Kind::SymmetricReductive2:
      return FreeContext::symmetric_reductive(std::move(gens), n_);
    case Kind::CustomModulus: return FreeContext::f_quandle(std::move(gens), f_);
  }
  return FreeContext::medial(std::move(gens));
}

std::string VarietySpec::str() const {
  switch (kind_) {
    case Kind::Medial: return "medial";
    case Kind::Symmetric: return "sym:" + std::to_string(order_);
    case Kind::Reductive: return "red:" + std::to_string(order_);
    case Kind::SymmetricReductive2: return "sym:" + n_.str() + "+red:2";
    case Kind::CustomModulus: return "mod:" + f_.str();
  }
  return "medial";
}

bool VarietySpec::operator==(const VarietySpec& rhs) const {
  return kind_ == rhs.kind_ && order_ == rhs.order_ && n_ == rhs.n_ && f_ == rhs.f_;
}

}  // namespace qf

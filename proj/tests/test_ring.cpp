#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qf/errors.hpp"
#include "qf/ring.hpp"

using namespace qf;

namespace {

RingElement elem(const char* poly, const RingSpec& spec) {
  return reduce(LaurentPoly::parse(poly), spec);
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  auto terms = rng() % 5;
  for (std::uint64_t i = 0; i < terms; ++i) {
    auto e = static_cast<LaurentPoly::Exp>(rng() % 11) - 5;
    auto c = static_cast<long>(rng() % 19) - 9;
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("ring spec construction and validation") {
  RingSpec l = RingSpec::laurent();
  CHECK(l.kind() == RingKind::Laurent);
  CHECK_THROWS_AS(l.modulus(), Error);
  CHECK_THROWS_AS(l.mod_n(), Error);

  RingSpec q = RingSpec::quotient(LaurentPoly::parse("1+t+t^2+t^3"));
  CHECK(q.kind() == RingKind::Quotient);
  CHECK(q.modulus() == LaurentPoly::parse("1+t+t^2+t^3"));

  // the ideal is unchanged by unit monomial factors, so the stored modulus
  // is shifted down to low degree 0
  RingSpec shifted = RingSpec::quotient(LaurentPoly::parse("t^2+t^3"));
  CHECK(shifted.modulus() == LaurentPoly::parse("1+t"));

  CHECK_THROWS_AS(RingSpec::quotient(LaurentPoly::parse("2+t")), Error);
  CHECK_THROWS_AS(RingSpec::quotient(LaurentPoly::parse("1+2t")), Error);
  CHECK_THROWS_AS(RingSpec::quotient(LaurentPoly::one()), Error);
  CHECK_THROWS_AS(RingSpec::quotient(LaurentPoly()), Error);
  try {
    RingSpec::quotient(LaurentPoly::parse("2+t"));
    CHECK(false);
  } catch (const Error& ex) {
    CHECK(ex.code() == Errc::BadModulus);
  }

  RingSpec z = RingSpec::int_mod(6);
  CHECK(z.kind() == RingKind::IntMod);
  CHECK(z.mod_n() == 6);
  CHECK_THROWS_AS(RingSpec::int_mod(0), Error);
}

TEST_CASE("ring spec text form round trips") {
  for (const char* text : {"laurent", "mod 1+t", "mod 1+t+t^2", "zmod 5"}) {
    RingSpec s = RingSpec::parse(text);
    CHECK(s.str() == text);
    CHECK(RingSpec::parse(s.str()) == s);
  }
  CHECK_THROWS_AS(RingSpec::parse("zmod five"), Error);
  CHECK_THROWS_AS(RingSpec::parse("galois 4"), Error);
  CHECK_THROWS_AS(RingSpec::parse("mod 2+t"), Error);
}

TEST_CASE("inverse of t in quotient rings") {
  CHECK(inv_t(RingSpec::quotient(LaurentPoly::parse("1+t+t^2+t^3"))).value ==
        LaurentPoly::parse("-1-t-t^2"));
  CHECK(inv_t(RingSpec::quotient(LaurentPoly::parse("1+t"))).value ==
        LaurentPoly::parse("-1"));
  CHECK(inv_t(RingSpec::quotient(LaurentPoly::parse("1-2t+t^2"))).value ==
        LaurentPoly::parse("2-t"));

  CHECK_THROWS_AS(inv_t(RingSpec::laurent()), Error);
  try {
    inv_t(RingSpec::laurent());
  } catch (const Error& ex) {
    CHECK(ex.code() == Errc::NotQuotient);
  }
}

TEST_CASE("t times its inverse is 1 for every admissible modulus") {
  for (const char* f : {"1+t", "1+t+t^2", "1-2t+t^2", "1-3t+3t^2-t^3", "1+t+t^2+t^3"}) {
    RingSpec spec = RingSpec::quotient(LaurentPoly::parse(f));
    RingElement t = reduce(LaurentPoly::t(), spec);
    CHECK(rmul(inv_t(spec), t).value == LaurentPoly::one());
  }
}

TEST_CASE("reduction to canonical representatives") {
  RingSpec f4 = RingSpec::quotient(LaurentPoly::parse("1+t+t^2+t^3"));
  CHECK(reduce(LaurentPoly::t(4), f4).value == LaurentPoly::one());
  // representatives stay strictly below the modulus degree: t^3 = -(1+t+t^2)
  CHECK(reduce(LaurentPoly::parse("2t^3"), f4).value == LaurentPoly::parse("-2-2t-2t^2"));
  CHECK(reduce(LaurentPoly(), f4).value == LaurentPoly());

  RingSpec f2 = RingSpec::quotient(LaurentPoly::parse("1+t"));
  CHECK(reduce(LaurentPoly::t(-1), f2).value == LaurentPoly::parse("-1"));
  CHECK(reduce(LaurentPoly::t() * LaurentPoly::t(), f2).value == LaurentPoly::one());

  // Laurent spec reduces nothing
  CHECK(reduce(LaurentPoly::t(-3), RingSpec::laurent()).value == LaurentPoly::t(-3));

  // the constant ring collapses t to 1 and takes the representative in [0, n)
  RingSpec z3 = RingSpec::int_mod(3);
  CHECK(reduce(LaurentPoly::parse("1+t"), z3).value == LaurentPoly::constant(2));
  CHECK(reduce(LaurentPoly::parse("-1"), z3).value == LaurentPoly::constant(2));
  CHECK(reduce(LaurentPoly::parse("t^-5"), z3).value == LaurentPoly::one());
  CHECK(reduce(LaurentPoly::parse("3t"), z3).value == LaurentPoly());
}

TEST_CASE("quotient arithmetic keeps representatives below the modulus degree") {
  RingSpec f4 = RingSpec::quotient(LaurentPoly::parse("1+t+t^2+t^3"));
  RingElement a = elem("t^3", f4);
  CHECK(a.value == LaurentPoly::parse("-1-t-t^2"));
  CHECK(radd(a, a).value == LaurentPoly::parse("-2-2t-2t^2"));
  RingElement t = elem("t", f4);
  RingElement prod = rmul(a, t);
  CHECK(prod.value == LaurentPoly::one());

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    RingElement x = reduce(random_poly(rng), f4);
    if (!x.value.is_zero()) {
      CHECK(x.value.low_degree() >= 0);
      CHECK(x.value.degree() <= 2);
    }
  }
}

TEST_CASE("operations on mismatched rings are refused") {
  RingElement a = elem("t", RingSpec::laurent());
  RingElement b = elem("t", RingSpec::quotient(LaurentPoly::parse("1+t")));
  CHECK_THROWS_AS(radd(a, b), Error);
  CHECK_THROWS_AS(rmul(a, b), Error);
  try {
    rsub(a, b);
  } catch (const Error& ex) {
    CHECK(ex.code() == Errc::SpecMismatch);
  }
}

TEST_CASE("ring axioms hold on random triples") {
  std::vector<RingSpec> specs = {
      RingSpec::laurent(),
      RingSpec::quotient(LaurentPoly::parse("1+t+t^2+t^3")),
      RingSpec::quotient(LaurentPoly::parse("1-2t+t^2")),
      RingSpec::int_mod(6),
  };
  std::mt19937_64 rng(29);
  for (const RingSpec& spec : specs) {
    RingElement zero = reduce(LaurentPoly(), spec);
    RingElement one = reduce(LaurentPoly::one(), spec);
    for (int i = 0; i < 1000; ++i) {
      RingElement a = reduce(random_poly(rng), spec);
      RingElement b = reduce(random_poly(rng), spec);
      RingElement c = reduce(random_poly(rng), spec);
      CHECK(radd(radd(a, b), c) == radd(a, radd(b, c)));
      CHECK(rmul(rmul(a, b), c) == rmul(a, rmul(b, c)));
      CHECK(radd(a, b) == radd(b, a));
      CHECK(rmul(a, b) == rmul(b, a));
      CHECK(rmul(a, radd(b, c)) == radd(rmul(a, b), rmul(a, c)));
      CHECK(radd(a, zero) == a);
      CHECK(rmul(a, one) == a);
      CHECK(rsub(a, a) == zero);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qf/errors.hpp"
#include "qf/laurent.hpp"

using namespace qf;

namespace {

LaurentPoly one_minus_t() { return LaurentPoly::one() - LaurentPoly::t(); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_deg = 5, int max_coeff = 9,
                        int max_terms = 4) {
  LaurentPoly p;
  auto terms = rng() % (max_terms + 1);
  for (std::uint64_t i = 0; i < terms; ++i) {
    auto e = static_cast<LaurentPoly::Exp>(rng() % (2 * max_deg + 1)) - max_deg;
    auto c = static_cast<long>(rng() % (2 * max_coeff + 1)) - max_coeff;
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("canonical form strips zero coefficients") {
  CHECK(LaurentPoly().is_zero());
  CHECK(LaurentPoly::monomial(3, 0).is_zero());
  CHECK(LaurentPoly::constant(0).is_zero());

  // cancellation must empty the map, not store a zero
  LaurentPoly p = LaurentPoly::t() - LaurentPoly::t();
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
}

TEST_CASE("addition") {
  CHECK(one_minus_t() + LaurentPoly::t() == LaurentPoly::one());
  LaurentPoly p = LaurentPoly::parse("1-t+2t^3");
  CHECK(LaurentPoly() + p == p);
  CHECK(p + LaurentPoly() == p);
  CHECK(p - p == LaurentPoly());
}

TEST_CASE("multiplication") {
  CHECK(one_minus_t() * (LaurentPoly::one() + LaurentPoly::t()) ==
        LaurentPoly::parse("1-t^2"));
  CHECK(one_minus_t() * one_minus_t() == LaurentPoly::parse("1-2t+t^2"));
  CHECK(pow(one_minus_t(), 2) == LaurentPoly::parse("1-2t+t^2"));
  CHECK(pow(one_minus_t(), 0) == LaurentPoly::one());
  CHECK(pow(one_minus_t(), 3) == LaurentPoly::parse("1-3t+3t^2-t^3"));
  CHECK(LaurentPoly::t(-1) * LaurentPoly::t() == LaurentPoly::one());
  CHECK(LaurentPoly() * LaurentPoly::parse("5t^7") == LaurentPoly());
}

TEST_CASE("degree bookkeeping") {
  LaurentPoly p = LaurentPoly::parse("t^-2+3t^5");
  CHECK(p.degree() == 5);
  CHECK(p.low_degree() == -2);
  CHECK(p.leading_coeff() == 3);
  CHECK(p.constant_coeff() == 0);
  CHECK(p.coeff(-2) == 1);
  CHECK(p.coeff(1) == 0);

  CHECK_THROWS_AS(LaurentPoly().degree(), Error);
  CHECK_THROWS_AS(LaurentPoly().leading_coeff(), Error);
}

TEST_CASE("evaluation at t = 1 sums the coefficients") {
  CHECK(one_minus_t().eval_at_one() == 0);
  CHECK(LaurentPoly::parse("1+t-t^2").eval_at_one() == 1);
  CHECK(LaurentPoly().eval_at_one() == 0);
  CHECK(LaurentPoly::parse("t^-3+t^3").eval_at_one() == 2);
}

TEST_CASE("eval_at_one is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    CHECK((p + q).eval_at_one() == p.eval_at_one() + q.eval_at_one());
    CHECK((p * q).eval_at_one() == p.eval_at_one() * q.eval_at_one());
  }
}

TEST_CASE("string form is compact and ascending") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::one().str() == "1");
  CHECK(LaurentPoly::t().str() == "t");
  CHECK((-LaurentPoly::t()).str() == "-t");
  CHECK(LaurentPoly::t(-1).str() == "t^-1");
  CHECK(LaurentPoly::monomial(3, 2).str() == "2t^3");
  CHECK(LaurentPoly::parse("1 - t + 2 t^3").str() == "1-t+2t^3");
  CHECK((one_minus_t() * LaurentPoly::constant(-1)).str() == "-1+t");
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }

  // whitespace never separates tokens semantically
  CHECK(LaurentPoly::parse("2 t^3") == LaurentPoly::monomial(3, 2));
  CHECK(LaurentPoly::parse("1 t") == LaurentPoly::t());
  CHECK(LaurentPoly::parse(" 1 - t ") == LaurentPoly::parse("1-t"));
}

TEST_CASE("parse rejects malformed input with a position") {
  CHECK_THROWS_AS(LaurentPoly::parse(""), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("  "), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("t+"), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("x"), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("t^"), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("t^^2"), SyntaxError);
  CHECK_THROWS_AS(LaurentPoly::parse("t^99999999999999999"), SyntaxError);

  try {
    LaurentPoly::parse("1+*t");
  } catch (const SyntaxError& ex) {
    CHECK(ex.position() == 2);
  }
}

TEST_CASE("division by 1 - t") {
  CHECK(divide_by_one_minus_t(LaurentPoly::parse("1-t^2")) ==
        LaurentPoly::parse("1+t"));
  CHECK(divide_by_one_minus_t(one_minus_t() * LaurentPoly::t(5)) ==
        LaurentPoly::t(5));
  CHECK(divide_by_one_minus_t(LaurentPoly::parse("t-t^3")) ==
        LaurentPoly::parse("t+t^2"));
  CHECK(divide_by_one_minus_t(LaurentPoly()) == LaurentPoly());

  CHECK_THROWS_AS(divide_by_one_minus_t(LaurentPoly::one()), Error);
  try {
    divide_by_one_minus_t(LaurentPoly::parse("1+t"));
    CHECK(false);
  } catch (const Error& ex) {
    CHECK(ex.code() == Errc::NotDivisible);
  }
}

TEST_CASE("division undoes multiplication by 1 - t") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly p = random_poly(rng);
    CHECK(divide_by_one_minus_t(one_minus_t() * p) == p);
  }
}

TEST_CASE("long division") {
  auto [q, r] = divmod(LaurentPoly::t(2), LaurentPoly::parse("1+t"));
  CHECK(q == LaurentPoly::parse("-1+t"));
  CHECK(r == LaurentPoly::one());

  auto [q2, r2] = divmod(LaurentPoly::parse("t^4-1"), LaurentPoly::parse("1+t+t^2+t^3"));
  CHECK(r2 == LaurentPoly());
  CHECK(q2 * LaurentPoly::parse("1+t+t^2+t^3") == LaurentPoly::parse("t^4-1"));

  // remainder degree is below the divisor degree
  std::mt19937_64 rng(17);
  LaurentPoly f = LaurentPoly::parse("1-2t+t^2");
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng);
    if (!a.is_zero() && a.low_degree() < 0) a = a.times_monomial(-a.low_degree(), 1);
    auto [qq, rr] = divmod(a, f);
    CHECK(qq * f + rr == a);
    CHECK((rr.is_zero() || rr.degree() < 2));
  }

  // a non-unit constant coefficient is fine; only the leading one must be a unit
  auto [q3, r3] = divmod(LaurentPoly::t(2), LaurentPoly::parse("2+t^2"));
  CHECK(q3 == LaurentPoly::one());
  CHECK(r3 == LaurentPoly::constant(-2));

  CHECK_THROWS_AS(divmod(LaurentPoly::t(-1), LaurentPoly::parse("1+t")), Error);
  CHECK_THROWS_AS(divmod(LaurentPoly::t(2), LaurentPoly::parse("1+2t^2")), Error);
}

TEST_CASE("comparison is a strict total order on samples") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(!(a < a));
    if (a != b) CHECK((a < b) != (b < a));
    if (a == b) CHECK((!(a < b) && !(b < a)));
  }
}

#include <doctest.h>

#include <random>

#include "hookpoly/error.hpp"
#include "hookpoly/exact_algebra.hpp"

using namespace hookpoly;

namespace {

Polynomial poly(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<BigRational> c;
  for (long v : coeffs_low_to_high) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial x_plus(long c) { return Polynomial::linear(BigRational(c)); }

// Small random polynomial with rational coefficients, degree <= 4.
Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 4);
  std::vector<BigRational> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  BigRational q = make_rational(6, -4);
  CHECK(serialize(q) == "-3/2");
  CHECK(serialize(BigRational(0)) == "0/1");
  CHECK(serialize(q + make_rational(3, 2)) == "0/1");
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("ring operations") {
  const Polynomial x = Polynomial::x();
  CHECK(x * x == poly({0, 0, 1}));
  CHECK(x_plus(1) - x == poly({1}));
  CHECK((x - x).is_zero());
  CHECK(!(x - x).degree().has_value());

  // (x-4)(x-1)(x+3) * x - (x-5)(x-3)(x+1)(x+5)
  const Polynomial p = x_plus(-4) * x_plus(-1) * x_plus(3) * x -
                       x_plus(-5) * x_plus(-3) * x_plus(1) * x_plus(5);
  CHECK(p == poly({-75, -38, 17}));
  CHECK(serialize(p) == R"([(2,"17/1"),(1,"-38/1"),(0,"-75/1")])");
  CHECK(to_pretty(p) == "17x^2-38x-75");
  CHECK_FALSE(is_zero(p));

  CHECK((x_plus(2) * x_plus(3)).degree() == 2u);
  CHECK((Polynomial{} * x).is_zero());
}

TEST_CASE("serialization of special cases") {
  CHECK(serialize(Polynomial{}) == "[]");
  CHECK(to_pretty(Polynomial{}) == "0");
  CHECK(to_pretty(Polynomial::x()) == "x");
  CHECK(to_pretty(-Polynomial::x() + poly({1})) == "-x+1");
  CHECK(to_pretty(rising_binomial(2)) == "(1/2)x^2+(1/2)x");
}

TEST_CASE("shift") {
  CHECK(poly_shift(Polynomial::x(), 1) == x_plus(1));
  CHECK(poly_shift(poly({0, 0, 1}), 1) == poly({1, 2, 1}));
  // g_(2,1)(x) = (x+1)(x-1)(x-3); shifted by one: (x+2) x (x-2)
  const Polynomial g = x_plus(1) * x_plus(-1) * x_plus(-3);
  CHECK(poly_shift(g, 1) == x_plus(2) * Polynomial::x() * x_plus(-2));
  CHECK(poly_shift(Polynomial{}, 5).is_zero());
  CHECK(poly_shift(poly({7}), 5) == poly({7}));
}

TEST_CASE("evaluation") {
  const Polynomial p = poly({-75, -38, 17});
  CHECK(poly_eval(p, 0) == -75);
  CHECK(poly_eval(Polynomial{}, 12) == 0);
  // Quotient (x+5)(x+1)(x-3)(x-5) / ((x+3)(x-2)(x-4)) at x = 1.
  const BigRational num = poly_eval(x_plus(5) * x_plus(1) * x_plus(-3) * x_plus(-5), 1);
  const BigRational den = poly_eval(x_plus(3) * x_plus(-2) * x_plus(-4), 1);
  CHECK(num == 6 * 2 * (-2) * (-4));
  CHECK(den == 4 * (-1) * (-3));
  CHECK(num / den == 8);
}

TEST_CASE("difference operator") {
  CHECK(difference(Polynomial::x()) == poly({1}));
  CHECK(difference(poly({42})).is_zero());
  CHECK(difference(poly({0, 0, 1})) == poly({1, 2}));
}

TEST_CASE("rising binomials") {
  CHECK(rising_binomial(0) == poly({1}));
  CHECK(rising_binomial(1) == Polynomial::x());
  CHECK(rising_binomial(2) == poly({0, 1, 1}) * make_rational(1, 2));
  for (unsigned k = 1; k <= 8; ++k) {
    // Values at nonnegative integers m are C(m+k-1, k).
    for (unsigned long m = 0; m < 6; ++m) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), m + k - 1, k);
      CHECK(poly_eval(rising_binomial(k), BigRational(static_cast<long>(m))) == BigRational(c));
    }
  }
}

TEST_CASE("Pascal recurrence on rising binomials") {
  for (unsigned k = 1; k <= 10; ++k) {
    // C(x+k-1,k) = C(x+k-2,k) + C(x+k-2,k-1): shift x by -1 on the right.
    const Polynomial lhs = rising_binomial(k);
    const Polynomial rhs = poly_shift(rising_binomial(k), -1) + rising_binomial(k - 1);
    CHECK(lhs == rhs);
    // D C(x+k-1,k) = C(x+k-1,k-1) evaluated one step up.
    CHECK(difference(rising_binomial(k)) == poly_shift(rising_binomial(k - 1), 1));
  }
}

TEST_CASE("ring and shift properties on random polynomials") {
  std::mt19937 rng(20081017);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    const BigRational a = make_rational(num(rng), den(rng));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(poly_shift(p * q, a) == poly_shift(p, a) * poly_shift(q, a));
    CHECK(poly_shift(poly_shift(p, a), -a) == p);
    // Shift agrees with evaluation at shifted points.
    for (int t = -2; t <= 2; ++t)
      CHECK(poly_eval(poly_shift(p, a), t) == poly_eval(p, BigRational(t) + a));
    // Degree drops by exactly one under D for nonconstant p.
    if (p.degree().value_or(0) >= 1) CHECK(difference(p).degree() == *p.degree() - 1);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == *p.degree() + *q.degree());
  }
}

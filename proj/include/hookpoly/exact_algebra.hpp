#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hookpoly {

using BigInt = mpz_class;

// GMP keeps mpq_class values canonical after every arithmetic operation
// (reduced, positive denominator, zero as 0/1). Values built from a raw
// numerator/denominator pair must go through make_rational().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

// "num/den", always with an explicit denominator ("17/1", "-3/2").
std::string serialize(const BigRational& q);
std::string serialize(const BigInt& z);

/// Univariate polynomial in x over the rationals, dense coefficients with the
/// index equal to the power of x. The coefficient at the degree is nonzero;
/// the zero polynomial stores nothing and has no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& c);
  static Polynomial x();
  // x + c
  static Polynomial linear(const BigRational& c);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  // Zero for powers above the degree.
  const BigRational& coefficient(std::size_t power) const;
  std::span<const BigRational> coefficients() const { return coeffs_; }

  BigRational operator()(const BigRational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const BigRational& s) { return lhs *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial rhs) { return rhs *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

// q(x) = p(x + a), by repeated synthetic division (Taylor shift).
Polynomial poly_shift(const Polynomial& p, const BigRational& a);
BigRational poly_eval(const Polynomial& p, const BigRational& a);

// (D p)(x) = p(x + 1) - p(x)
Polynomial difference(const Polynomial& p);

// C(x + k - 1, k) = x (x + 1) ... (x + k - 1) / k!
Polynomial rising_binomial(unsigned k);

// Product of a sequence of polynomials; the empty product is 1.
Polynomial product(std::span<const Polynomial> factors);

// [(2,"17/1"),(1,"-38/1"),(0,"-75/1")], highest power first; zero is "[]".
std::string serialize(const Polynomial& p);

// Human form: "17x^2-38x-75", "(1/2)x^2+(1/2)x", "0".
std::string to_pretty(const Polynomial& p);

// "(x+5)(x+1)(x-3)" for monic linear factors; other factors are wrapped
// pretty-printed.
std::string factored_form(std::span<const Polynomial> factors);

}  // namespace hookpoly

#include "hookpoly/exact_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hookpoly/error.hpp"

namespace hookpoly {

namespace {

const BigRational& zero_rational() {
  static const BigRational zero(0);
  return zero;
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string serialize(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string serialize(const BigInt& z) { return z.get_str(); }

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const BigRational& c) {
  return Polynomial(std::vector<BigRational>{c});
}

Polynomial Polynomial::x() {
  return Polynomial(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

Polynomial Polynomial::linear(const BigRational& c) {
  return Polynomial(std::vector<BigRational>{c, BigRational(1)});
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigRational& Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : zero_rational();
}

BigRational Polynomial::operator()(const BigRational& at) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& scalar) {
  if (hookpoly::is_zero(scalar)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (hookpoly::is_zero(lhs.coeffs_[i])) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  // Leading product of nonzero rationals is nonzero; no trim needed beyond that.
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && hookpoly::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_sub(const Polynomial& p, const Polynomial& q) { return p - q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial poly_shift(const Polynomial& p, const BigRational& a) {
  auto deg = p.degree();
  if (!deg || *deg == 0 || is_zero(a)) return p;
  std::vector<BigRational> c(p.coefficients().begin(), p.coefficients().end());
  const std::size_t d = *deg;
  BigRational tmp;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = d - 1;; --j) {
      tmp = a * c[j + 1];
      c[j] += tmp;
      if (j == i) break;
    }
  }
  return Polynomial(std::move(c));
}

BigRational poly_eval(const Polynomial& p, const BigRational& a) { return p(a); }

Polynomial difference(const Polynomial& p) {
  return poly_shift(p, BigRational(1)) - p;
}

Polynomial rising_binomial(unsigned k) {
  Polynomial out = Polynomial::constant(BigRational(1));
  BigInt factorial = 1;
  for (unsigned j = 0; j < k; ++j) {
    out *= Polynomial::linear(BigRational(j));
    factorial *= j + 1;
  }
  return out * make_rational(BigInt(1), factorial);
}

Polynomial product(std::span<const Polynomial> factors) {
  Polynomial out = Polynomial::constant(BigRational(1));
  for (const auto& f : factors) out *= f;
  return out;
}

std::string serialize(const Polynomial& p) {
  std::ostringstream os;
  os << '[';
  auto coeffs = p.coefficients();
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (is_zero(coeffs[i])) continue;
    if (!first) os << ',';
    first = false;
    os << '(' << i << ",\"" << serialize(coeffs[i]) << "\")";
  }
  os << ']';
  return os.str();
}

std::string to_pretty(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  auto coeffs = p.coefficients();
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const BigRational& c = coeffs[i];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const BigRational mag = abs(c);
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) {
      if (is_integer(mag))
        os << mag.get_num().get_str();
      else
        os << '(' << mag.get_num().get_str() << '/' << mag.get_den().get_str() << ')';
    }
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string factored_form(std::span<const Polynomial> factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) out += "(" + to_pretty(f) + ")";
  return out;
}

}  // namespace hookpoly

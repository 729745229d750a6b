#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "hookpoly/error.hpp"
#include "hookpoly/exact_algebra.hpp"
#include "hookpoly/partition.hpp"

namespace hookpoly {

template <class R>
R ring_from(const BigRational& q);
template <>
inline BigRational ring_from<BigRational>(const BigRational& q) { return q; }
template <>
inline Polynomial ring_from<Polynomial>(const BigRational& q) { return Polynomial::constant(q); }

struct SchurBasis {};
struct MonomialBasis {};

// Finite homogeneous linear combination of basis elements indexed by
// partitions, coefficients in R (BigRational or Polynomial). Zero
// coefficients are never stored; terms iterate reverse-lexicographically.
template <class R, class Basis>
class Expansion {
 public:
  using Terms = std::map<Partition, R, ReverseLex>;

  Expansion() = default;

  static Expansion unit(const Partition& lambda) {
    Expansion out;
    out.add_term(lambda, ring_from<R>(BigRational(1)));
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Size of every index partition; none for the empty expansion.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
  }

  // Zero when lambda is absent.
  R coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? R{} : it->second;
  }

  void add_term(const Partition& lambda, const R& c) {
    if (auto d = degree(); d && *d != lambda.size())
      throw Error(ErrorCode::InvalidArgument, "inhomogeneous expansion");
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  Expansion& operator+=(const Expansion& rhs) {
    if (auto a = degree(), b = rhs.degree(); a && b && *a != *b)
      throw Error(ErrorCode::InvalidArgument, "degree mismatch in expansion sum");
    for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
    return *this;
  }

  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }

  friend bool operator==(const Expansion& a, const Expansion& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

template <class R>
using SchurExpansion = Expansion<R, SchurBasis>;
template <class R>
using MonomialExpansion = Expansion<R, MonomialBasis>;

template <class R, class B>
Expansion<R, B> sf_add(const Expansion<R, B>& a, const Expansion<R, B>& b) {
  return a + b;
}

template <class R, class B>
Expansion<R, B> sf_scale(const R& c, const Expansion<R, B>& a) {
  Expansion<R, B> out;
  if (is_zero(c)) return out;
  for (const auto& [lambda, coeff] : a.terms()) out.add_term(lambda, c * coeff);
  return out;
}

template <class R>
SchurExpansion<R> schur_unit(const Partition& lambda) {
  return SchurExpansion<R>::unit(lambda);
}

// Applies f to every coefficient.
template <class R, class B, class F>
Expansion<R, B> map_coefficients(const Expansion<R, B>& a, F&& f) {
  Expansion<R, B> out;
  for (const auto& [lambda, c] : a.terms()) out.add_term(lambda, f(c));
  return out;
}

// p1 * s_mu = sum of s_lambda over lambda = mu plus one box (Pieri).
template <class R>
SchurExpansion<R> pieri_p1(const SchurExpansion<R>& a) {
  SchurExpansion<R> out;
  for (const auto& [mu, c] : a.terms())
    for (const auto& lambda : box_additions(mu)) out.add_term(lambda, c);
  return out;
}

// e_k as the one-column Schur function s_{1^k}.
template <class R>
SchurExpansion<R> elementary_as_schur(unsigned k) {
  return SchurExpansion<R>::unit(Partition(std::vector<int>(k, 1)));
}

// sum_{k=0..n} C(x+k-1, k) p1^k e_{n-k}
SchurExpansion<Polynomial> lhs_1_6(unsigned n);
// sum_{lambda |- n} g_lambda(x+n) / H_lambda s_lambda
SchurExpansion<Polynomial> rhs_1_6(unsigned n);

struct SchurCheckOutcome {
  std::string check;  // "THM_1_2", "REC_3_1" or "REC_3_2"
  unsigned n = 0;
  bool passed = false;
  std::string lhs;  // JSON expansions, filled on failure or capture
  std::string rhs;
};

SchurCheckOutcome check_theorem_1_2(unsigned n, unsigned max_n = 9, bool capture = false);

// R_n(x) = R_n(x-1) + p1 R_{n-1}(x) and L_n(x) = L_n(x-1) + p1 L_{n-1}(x);
// returns the REC_3_1 (right side) and REC_3_2 (left side) outcomes.
std::pair<SchurCheckOutcome, SchurCheckOutcome> check_recurrences_3(unsigned n, unsigned max_n = 9,
                                                                    bool capture = false);

// ---- monomial-basis oracle ----

// Number of semistandard tableaux of shape lambda and content mu, counted by
// filling cells in row-major order.
BigInt kostka(const Partition& lambda, const Partition& mu, int max_size = 8);

// s_lambda = sum_mu K_{lambda mu} m_mu, extended linearly.
template <class R>
MonomialExpansion<R> to_monomial(const SchurExpansion<R>& a, int max_size = 8) {
  MonomialExpansion<R> out;
  for (const auto& [lambda, c] : a.terms()) {
    if (lambda.size() > max_size)
      throw Error(ErrorCode::BoundExceeded, "monomial oracle bound exceeded");
    for (const auto& mu : enumerate_partitions(lambda.size())) {
      const BigInt k = kostka(lambda, mu, max_size);
      if (k != 0) out.add_term(mu, c * ring_from<R>(BigRational(k)));
    }
  }
  return out;
}

// Coefficient of m_lambda in m_1 * m_nu: the number of positions j at which
// lambda - e_j, as an exponent vector, is a rearrangement of nu.
BigInt monomial_p1_coefficient(const Partition& lambda, const Partition& nu);

template <class R>
MonomialExpansion<R> monomial_times_p1(const MonomialExpansion<R>& a) {
  MonomialExpansion<R> out;
  for (const auto& [nu, c] : a.terms()) {
    for (const auto& lambda : enumerate_partitions(nu.size() + 1)) {
      const BigInt k = monomial_p1_coefficient(lambda, nu);
      if (k != 0) out.add_term(lambda, c * ring_from<R>(BigRational(k)));
    }
  }
  return out;
}

// Left side of the Schur identity built entirely in the monomial basis
// (e_k = m_{1^k}, p1 products by exponent-vector counting).
MonomialExpansion<Polynomial> lhs_1_6_monomial(unsigned n);

std::string to_json(const SchurExpansion<Polynomial>& a);
std::string to_json(const SchurExpansion<BigRational>& a);
std::string to_json(const MonomialExpansion<Polynomial>& a);

}  // namespace hookpoly

#include "hookpoly/symfunc.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "hookpoly/shifted_parts.hpp"

namespace hookpoly {

namespace {

void check_bound(unsigned n, unsigned max_n) {
  if (n > max_n)
    throw Error(ErrorCode::BoundExceeded,
                "n=" + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
}

template <class Exp>
std::string expansion_json(const Exp& a) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : a.terms())
    arr.push_back({{"partition", format_partition(lambda)}, {"coefficient", serialize(c)}});
  return arr.dump();
}

SchurCheckOutcome compare(std::string check, unsigned n, const SchurExpansion<Polynomial>& lhs,
                          const SchurExpansion<Polynomial>& rhs, bool capture) {
  SchurCheckOutcome out{std::move(check), n, lhs == rhs, {}, {}};
  if (!out.passed || capture) {
    out.lhs = to_json(lhs);
    out.rhs = to_json(rhs);
  }
  return out;
}

SchurExpansion<Polynomial> shift_down(const SchurExpansion<Polynomial>& a) {
  return map_coefficients(a, [](const Polynomial& p) { return poly_shift(p, BigRational(-1)); });
}

}  // namespace

SchurExpansion<Polynomial> lhs_1_6(unsigned n) {
  SchurExpansion<Polynomial> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto term = elementary_as_schur<Polynomial>(n - k);
    for (unsigned j = 0; j < k; ++j) term = pieri_p1(term);
    out += sf_scale(rising_binomial(k), term);
  }
  return out;
}

SchurExpansion<Polynomial> rhs_1_6(unsigned n) {
  SchurExpansion<Polynomial> out;
  const BigRational shift(static_cast<int>(n));
  for (const auto& lambda : enumerate_partitions(static_cast<int>(n))) {
    Polynomial c = poly_shift(g_poly(lambda), shift) * make_rational(BigInt(1), hook_product(lambda));
    out.add_term(lambda, c);
  }
  return out;
}

SchurCheckOutcome check_theorem_1_2(unsigned n, unsigned max_n, bool capture) {
  check_bound(n, max_n);
  return compare("THM_1_2", n, lhs_1_6(n), rhs_1_6(n), capture);
}

std::pair<SchurCheckOutcome, SchurCheckOutcome> check_recurrences_3(unsigned n, unsigned max_n,
                                                                    bool capture) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "recurrences start at n=1");
  check_bound(n, max_n);
  const auto r = rhs_1_6(n);
  const auto l = lhs_1_6(n);
  return {compare("REC_3_1", n, r, shift_down(r) + pieri_p1(rhs_1_6(n - 1)), capture),
          compare("REC_3_2", n, l, shift_down(l) + pieri_p1(lhs_1_6(n - 1)), capture)};
}

BigInt kostka(const Partition& lambda, const Partition& mu, int max_size) {
  if (lambda.size() != mu.size())
    throw Error(ErrorCode::InvalidArgument, "Kostka number needs |lambda| = |mu|");
  if (lambda.size() > max_size)
    throw Error(ErrorCode::BoundExceeded, "Kostka oracle bound exceeded");

  std::vector<std::vector<int>> tableau(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) tableau[r].assign(lambda.parts()[r], 0);
  std::vector<int> remaining(mu.parts().begin(), mu.parts().end());
  const int max_value = static_cast<int>(mu.length());

  BigInt count = 0;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == tableau.size()) {
      ++count;
      return;
    }
    if (c == tableau[r].size()) {
      fill(r + 1, 0);
      return;
    }
    const int low_row = c > 0 ? tableau[r][c - 1] : 1;
    const int low_col = r > 0 ? tableau[r - 1][c] + 1 : 1;
    for (int v = std::max(low_row, low_col); v <= max_value; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      tableau[r][c] = v;
      fill(r, c + 1);
      ++remaining[v - 1];
    }
    tableau[r][c] = 0;
  };
  fill(0, 0);
  return count;
}

BigInt monomial_p1_coefficient(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size() + 1) return 0;
  BigInt count = 0;
  for (std::size_t j = 0; j < lambda.length(); ++j) {
    std::vector<int> exps(lambda.parts().begin(), lambda.parts().end());
    --exps[j];
    std::sort(exps.begin(), exps.end(), std::greater<>());
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    if (std::equal(exps.begin(), exps.end(), nu.parts().begin(), nu.parts().end())) ++count;
  }
  return count;
}

MonomialExpansion<Polynomial> lhs_1_6_monomial(unsigned n) {
  MonomialExpansion<Polynomial> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto term = MonomialExpansion<Polynomial>::unit(Partition(std::vector<int>(n - k, 1)));
    for (unsigned j = 0; j < k; ++j) term = monomial_times_p1(term);
    out += sf_scale(rising_binomial(k), term);
  }
  return out;
}

std::string to_json(const SchurExpansion<Polynomial>& a) { return expansion_json(a); }
std::string to_json(const SchurExpansion<BigRational>& a) { return expansion_json(a); }
std::string to_json(const MonomialExpansion<Polynomial>& a) { return expansion_json(a); }

}  // namespace hookpoly

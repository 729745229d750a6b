#include "hookpoly/shifted_parts.hpp"

#include <algorithm>

#include "hookpoly/error.hpp"

namespace hookpoly {

namespace {

using Clock = std::chrono::steady_clock;

BigRational as_rational(const BigInt& z) { return BigRational(z); }

Polynomial x_minus(int n) { return Polynomial::linear(BigRational(-n)); }

// prod over k in [1, n], k != skip, of (x + lambda_k - k)
Polynomial g_without(const Partition& lambda, std::size_t skip) {
  Polynomial out = Polynomial::constant(BigRational(1));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(lambda.size()); ++k)
    if (k != skip) out *= g_factor(lambda, k);
  return out;
}

template <class Side>
VerificationOutcome make_outcome(IdentityId id, const Partition& lambda,
                                 std::optional<std::size_t> corner, bool passed,
                                 const Side& lhs, const Side& rhs, bool capture,
                                 Clock::time_point started) {
  VerificationOutcome out;
  out.identity = id;
  out.partition = lambda;
  out.corner_index = corner;
  out.passed = passed;
  if (!passed || capture) {
    out.lhs = serialize(lhs);
    out.rhs = serialize(rhs);
  }
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
  return out;
}

struct CornerContext {
  CornerData corners;
  BigInt h_lambda;
  std::vector<BigInt> h_removed;  // aligned with corners.in_corners
};

CornerContext corner_context(const Partition& lambda, const ShapeEvaluator& eval) {
  CornerContext ctx{corner_sets(lambda), eval.hook_product(lambda), {}};
  for (const auto& mu : ctx.corners.removals) ctx.h_removed.push_back(eval.hook_product(mu));
  return ctx;
}

// H_lambda / H_{lambda^{i-}} for every in-corner.
std::vector<BigRational> corner_weights(const CornerContext& ctx) {
  std::vector<BigRational> out;
  for (const auto& h : ctx.h_removed) out.push_back(make_rational(ctx.h_lambda, h));
  return out;
}

BigInt product_except(const std::vector<BigInt>& values, std::size_t skip) {
  BigInt out = 1;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (k != skip) out *= values[k];
  return out;
}

// Sum over corners i of c_i * prod_{j in T, j != i} (x + lambda_j - j) * extra.
Polynomial corner_sum(const Partition& lambda, const CornerContext& ctx, bool over_all_factors) {
  const auto weights = corner_weights(ctx);
  const auto& t = ctx.corners.in_corners;
  Polynomial sum;
  for (std::size_t k = 0; k < t.size(); ++k) {
    Polynomial term;
    if (over_all_factors) {
      term = g_without(lambda, t[k]);
    } else {
      term = Polynomial::constant(BigRational(1));
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != k) term *= g_factor(lambda, t[j]);
    }
    sum += term * weights[k];
  }
  return sum;
}

}  // namespace

Polynomial g_factor(const Partition& lambda, std::size_t i, int shift) {
  return Polynomial::linear(BigRational(lambda.part(i) - static_cast<int>(i) + shift));
}

Polynomial g_poly(const Partition& lambda) {
  Polynomial out = Polynomial::constant(BigRational(1));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(lambda.size()); ++i)
    out *= g_factor(lambda, i);
  return out;
}

QuotientFactors g_quotient_factors(const Partition& lambda) {
  const CornerData cd = corner_sets(lambda);
  QuotientFactors out;
  for (std::size_t i : cd.out_corners) out.numerator.push_back(g_factor(lambda, i, 1));
  for (std::size_t i : cd.in_corners) out.denominator.push_back(g_factor(lambda, i));
  return out;
}

QuotientFactors corner_quotient_factors(const Partition& lambda, std::size_t row) {
  const CornerData cd = corner_sets(lambda);
  if (std::find(cd.in_corners.begin(), cd.in_corners.end(), row) == cd.in_corners.end())
    throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(row) + " is not an in-corner");
  const Partition mu = remove_corner(lambda, row);
  QuotientFactors out;
  for (std::size_t i : cd.out_corners) out.numerator.push_back(g_factor(lambda, i, 1));
  for (std::size_t i : cd.in_corners) out.denominator.push_back(g_factor(mu, i));
  return out;
}

Polynomial corner_numerator(const Partition& lambda) {
  const QuotientFactors q = g_quotient_factors(lambda);
  return Polynomial::x() * product(q.denominator) - product(q.numerator);
}

Polynomial non_corner_factor(const Partition& lambda) {
  const CornerData cd = corner_sets(lambda);
  Polynomial out = Polynomial::constant(BigRational(1));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(lambda.size()); ++k)
    if (std::find(cd.in_corners.begin(), cd.in_corners.end(), k) == cd.in_corners.end())
      out *= g_factor(lambda, k);
  return out;
}

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::THM_1_1: return "THM_1_1";
    case IdentityId::REC_1_2: return "REC_1_2";
    case IdentityId::REC_1_3: return "REC_1_3";
    case IdentityId::REMARK_DN: return "REMARK_DN";
    case IdentityId::CORNER_RATIO_2_2: return "CORNER_RATIO_2_2";
    case IdentityId::QUOTIENT_4_2: return "QUOTIENT_4_2";
    case IdentityId::THM_4_1: return "THM_4_1";
    case IdentityId::EQ_4_6: return "EQ_4_6";
    case IdentityId::THM_4_2: return "THM_4_2";
    case IdentityId::COR_4_4: return "COR_4_4";
  }
  return "?";
}

IdentityId identity_from_name(std::string_view name) {
  for (IdentityId id : kAllIdentities)
    if (identity_name(id) == name) return id;
  throw Error(ErrorCode::UnknownIdentity, "unknown identity '" + std::string(name) + "'");
}

bool is_per_corner(IdentityId id) {
  return id == IdentityId::CORNER_RATIO_2_2 || id == IdentityId::QUOTIENT_4_2;
}

BigInt ShapeEvaluator::hook_product(const Partition& lambda) const {
  if (!perturbation_ || perturbation_->target != Perturbation::Target::HookLength ||
      perturbation_->shape != lambda)
    return hookpoly::hook_product(lambda);
  BigInt h = 1;
  const auto grid = hook_grid(lambda);
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      long v = static_cast<long>(grid[r][c]);
      if (perturbation_->cell == Cell{r + 1, c + 1}) v += perturbation_->delta;
      h *= v;
    }
  }
  return h;
}

Polynomial ShapeEvaluator::g_poly(const Partition& lambda) const {
  if (!perturbation_ || perturbation_->target != Perturbation::Target::GFactor ||
      perturbation_->shape != lambda)
    return hookpoly::g_poly(lambda);
  Polynomial out = Polynomial::constant(BigRational(1));
  for (std::size_t i = 1; i <= static_cast<std::size_t>(lambda.size()); ++i)
    out *= g_factor(lambda, i, i == perturbation_->factor ? perturbation_->delta : 0);
  return out;
}

ClearedForm cleared_thm_1_1(const Partition& lambda, const ShapeEvaluator& eval) {
  const CornerContext ctx = corner_context(lambda, eval);
  const Polynomial g = eval.g_poly(lambda);
  BigInt all = 1;
  for (const auto& h : ctx.h_removed) all *= h;
  ClearedForm out;
  out.lhs = (poly_shift(g, BigRational(1)) - g) * as_rational(all);
  for (const auto& term : thm_1_1_corner_terms(lambda, eval)) out.rhs += term;
  return out;
}

std::vector<Polynomial> thm_1_1_corner_terms(const Partition& lambda, const ShapeEvaluator& eval) {
  const CornerContext ctx = corner_context(lambda, eval);
  std::vector<Polynomial> terms;
  for (std::size_t k = 0; k < ctx.corners.removals.size(); ++k) {
    const BigInt scale = ctx.h_lambda * product_except(ctx.h_removed, k);
    terms.push_back(eval.g_poly(ctx.corners.removals[k]) * as_rational(scale));
  }
  return terms;
}

ClearedForm cleared_thm_4_1(const Partition& lambda, const ShapeEvaluator& eval) {
  const CornerContext ctx = corner_context(lambda, eval);
  const int n = lambda.size();
  const Polynomial g = eval.g_poly(lambda);
  ClearedForm out;
  out.lhs = corner_sum(lambda, ctx, /*over_all_factors=*/true);
  out.rhs = Polynomial::x() * g - x_minus(n) * poly_shift(g, BigRational(1));
  return out;
}

ClearedForm cleared_thm_4_2(const Partition& lambda, const ShapeEvaluator& eval) {
  const CornerContext ctx = corner_context(lambda, eval);
  ClearedForm out;
  out.lhs = corner_sum(lambda, ctx, /*over_all_factors=*/false);
  out.rhs = corner_numerator(lambda);
  return out;
}

std::vector<VerificationOutcome> check_identity(IdentityId id, const Partition& lambda,
                                                const CheckOptions& options) {
  if (lambda.empty())
    throw Error(ErrorCode::InvalidArgument,
                std::string(identity_name(id)) + " needs a nonempty partition");
  if (lambda.size() > options.max_size)
    throw Error(ErrorCode::BoundExceeded,
                "partition size " + std::to_string(lambda.size()) + " exceeds bound " +
                    std::to_string(options.max_size));

  const ShapeEvaluator& eval = options.evaluator;
  const bool capture = options.capture_witness;
  const int n = lambda.size();
  std::vector<VerificationOutcome> out;
  auto started = Clock::now();

  auto whole = [&](bool passed, const auto& lhs, const auto& rhs) {
    out.push_back(make_outcome(id, lambda, std::nullopt, passed, lhs, rhs, capture, started));
  };

  switch (id) {
    case IdentityId::THM_1_1: {
      const ClearedForm f = cleared_thm_1_1(lambda, eval);
      whole(f.lhs == f.rhs, f.lhs, f.rhs);
      break;
    }
    case IdentityId::REC_1_2: {
      const CornerContext ctx = corner_context(lambda, eval);
      const BigRational f = make_rational(factorial(n), ctx.h_lambda);
      BigRational sum(0);
      bool integral = is_integer(f);
      for (const auto& h : ctx.h_removed) {
        const BigRational fmu = make_rational(factorial(n - 1), h);
        integral = integral && is_integer(fmu);
        sum += fmu;
      }
      whole(integral && f == sum, f, sum);
      break;
    }
    case IdentityId::REC_1_3: {
      const CornerContext ctx = corner_context(lambda, eval);
      BigInt all = 1, partial_sum = 0;
      for (const auto& h : ctx.h_removed) all *= h;
      for (std::size_t k = 0; k < ctx.h_removed.size(); ++k)
        partial_sum += product_except(ctx.h_removed, k);
      const BigInt lhs = BigInt(n) * all;
      const BigInt rhs = ctx.h_lambda * partial_sum;
      whole(lhs == rhs, lhs, rhs);
      break;
    }
    case IdentityId::REMARK_DN: {
      Polynomial p = eval.g_poly(lambda) * make_rational(BigInt(1), eval.hook_product(lambda));
      for (int k = 0; k < n; ++k) p = difference(p);
      const Polynomial f = Polynomial::constant(BigRational(syt_count(lambda)));
      whole(p == f, p, f);
      break;
    }
    case IdentityId::CORNER_RATIO_2_2: {
      const CornerContext ctx = corner_context(lambda, eval);
      const Polynomial g = eval.g_poly(lambda);
      for (std::size_t k = 0; k < ctx.corners.in_corners.size(); ++k) {
        started = Clock::now();
        const std::size_t i = ctx.corners.in_corners[k];
        const Partition& mu = ctx.corners.removals[k];
        const BigRational at(static_cast<int>(i) - lambda.part(i));
        const BigRational lhs = as_rational(ctx.h_lambda) * eval.g_poly(mu)(at);
        const BigRational rhs = as_rational(ctx.h_removed[k]) * g(at + 1);
        out.push_back(make_outcome(id, lambda, i, lhs == rhs, lhs, rhs, capture, started));
      }
      break;
    }
    case IdentityId::QUOTIENT_4_2: {
      const CornerData cd = corner_sets(lambda);
      const Polynomial g = eval.g_poly(lambda);
      for (std::size_t k = 0; k < cd.in_corners.size(); ++k) {
        started = Clock::now();
        const std::size_t i = cd.in_corners[k];
        const Polynomial lhs = eval.g_poly(cd.removals[k]) * g_factor(lambda, i) * x_minus(n);
        const Polynomial rhs = g * g_factor(lambda, i, -1);
        out.push_back(make_outcome(id, lambda, i, lhs == rhs, lhs, rhs, capture, started));
      }
      break;
    }
    case IdentityId::THM_4_1: {
      const ClearedForm f = cleared_thm_4_1(lambda, eval);
      whole(f.lhs == f.rhs, f.lhs, f.rhs);
      break;
    }
    case IdentityId::EQ_4_6: {
      const QuotientFactors q = g_quotient_factors(lambda);
      const Polynomial g = eval.g_poly(lambda);
      const Polynomial lhs = x_minus(n) * poly_shift(g, BigRational(1)) * product(q.denominator);
      const Polynomial rhs = product(q.numerator) * g;
      whole(lhs == rhs, lhs, rhs);
      break;
    }
    case IdentityId::THM_4_2: {
      const ClearedForm f = cleared_thm_4_2(lambda, eval);
      whole(f.lhs == f.rhs, f.lhs, f.rhs);
      break;
    }
    case IdentityId::COR_4_4: {
      const CornerContext ctx = corner_context(lambda, eval);
      BigRational sum(0);
      for (const auto& w : corner_weights(ctx)) sum += w;
      const BigRational rhs(n);
      whole(sum == rhs, sum, rhs);
      break;
    }
  }
  return out;
}

}  // namespace hookpoly

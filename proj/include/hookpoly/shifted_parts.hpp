#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookpoly/exact_algebra.hpp"
#include "hookpoly/partition.hpp"

namespace hookpoly {

// g_lambda(x) = prod_{i=1..n} (x + lambda_i - i), n = |lambda|, lambda_i = 0
// past the length. The product runs to |lambda|, not to the number of parts.
Polynomial g_poly(const Partition& lambda);

// x + lambda_i - i + shift
Polynomial g_factor(const Partition& lambda, std::size_t i, int shift = 0);

struct QuotientFactors {
  std::vector<Polynomial> numerator;
  std::vector<Polynomial> denominator;
};

// (x - n) g(x+1) / g(x) = prod_{i in B} (x + lambda_i - i + 1) / prod_{i in T} (x + lambda_i - i)
QuotientFactors g_quotient_factors(const Partition& lambda);

// g_lambda(x+1) / g_mu(x) for mu = lambda with the corner of `row` removed,
// after cancelling common factors: numerator over B with lambda's parts,
// denominator over T with mu's parts.
QuotientFactors corner_quotient_factors(const Partition& lambda, std::size_t row);

// The polynomial x * prod_T - prod_B, numerator of x - prod_B / prod_T.
Polynomial corner_numerator(const Partition& lambda);

enum class IdentityId {
  THM_1_1,
  REC_1_2,
  REC_1_3,
  REMARK_DN,
  CORNER_RATIO_2_2,
  QUOTIENT_4_2,
  THM_4_1,
  EQ_4_6,
  THM_4_2,
  COR_4_4,
};

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::THM_1_1,          IdentityId::REC_1_2,      IdentityId::REC_1_3,
    IdentityId::REMARK_DN,        IdentityId::CORNER_RATIO_2_2, IdentityId::QUOTIENT_4_2,
    IdentityId::THM_4_1,          IdentityId::EQ_4_6,       IdentityId::THM_4_2,
    IdentityId::COR_4_4,
};

std::string_view identity_name(IdentityId id);
// Throws Error(UnknownIdentity).
IdentityId identity_from_name(std::string_view name);
bool is_per_corner(IdentityId id);

struct VerificationOutcome {
  IdentityId identity{};
  Partition partition;
  std::optional<std::size_t> corner_index;
  bool passed = false;
  // Serialized sides; always present on failure, on pass only when witness
  // capture is requested.
  std::string lhs;
  std::string rhs;
  std::chrono::nanoseconds elapsed{0};
};

// Fault injection for harness self-tests: alters one hook length or one
// linear factor of g for a single shape.
struct Perturbation {
  enum class Target { HookLength, GFactor };
  Target target = Target::HookLength;
  Partition shape;
  Cell cell;               // HookLength
  std::size_t factor = 1;  // GFactor, 1-based index into the n factors
  int delta = 1;
};

// Source of H_lambda and g_lambda for the identity checks; the default is
// exact, a perturbed evaluator corrupts exactly one shape.
class ShapeEvaluator {
 public:
  ShapeEvaluator() = default;
  explicit ShapeEvaluator(Perturbation p) : perturbation_(std::move(p)) {}

  BigInt hook_product(const Partition& lambda) const;
  Polynomial g_poly(const Partition& lambda) const;

 private:
  std::optional<Perturbation> perturbation_;
};

struct CheckOptions {
  int max_size = 25;
  bool capture_witness = false;
  ShapeEvaluator evaluator;
};

// One outcome, or one per in-corner for CORNER_RATIO_2_2 and QUOTIENT_4_2.
// Every identity is compared in denominator-free polynomial or integer form.
// Throws Error(InvalidArgument) for the empty partition and
// Error(BoundExceeded) above options.max_size.
std::vector<VerificationOutcome> check_identity(IdentityId id, const Partition& lambda,
                                                const CheckOptions& options = {});

// Two sides of a cleared polynomial identity.
struct ClearedForm {
  Polynomial lhs;
  Polynomial rhs;
};

// (g(x+1) - g(x)) prod_mu H_mu  vs  sum_mu g_mu(x) H_lambda prod_{nu != mu} H_nu
ClearedForm cleared_thm_1_1(const Partition& lambda, const ShapeEvaluator& eval = {});

// The right side of cleared_thm_1_1 split into its per-corner summands.
std::vector<Polynomial> thm_1_1_corner_terms(const Partition& lambda,
                                             const ShapeEvaluator& eval = {});

// Corner sum sum_i c_i / (x + lambda_i - i), c_i = H_lambda / H_{lambda^{i-}},
// against x - (x-n) g(x+1)/g(x), both multiplied by g(x).
ClearedForm cleared_thm_4_1(const Partition& lambda, const ShapeEvaluator& eval = {});

// The same corner sum against x - prod_B/prod_T, both multiplied by prod_T.
ClearedForm cleared_thm_4_2(const Partition& lambda, const ShapeEvaluator& eval = {});

// prod of (x + lambda_k - k) over 1 <= k <= n, k not in T: g(x) / prod_T.
Polynomial non_corner_factor(const Partition& lambda);

}  // namespace hookpoly

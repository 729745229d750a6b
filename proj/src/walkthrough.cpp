#include "hookpoly/walkthrough.hpp"

#include <iomanip>
#include <sstream>

#include "hookpoly/shifted_parts.hpp"

namespace hookpoly {

namespace {

std::string index_set(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

// "(6)(2)(-2)(-4)"
std::string evaluated_factors(const std::vector<Polynomial>& factors, const BigRational& at) {
  std::string out;
  for (const auto& f : factors) out += "(" + f(at).get_str() + ")";
  return out;
}

}  // namespace

std::string render_hook_grid(const Partition& lambda) {
  std::ostringstream os;
  const auto grid = hook_grid(lambda);
  std::size_t width = 1;
  for (const auto& row : grid)
    for (std::size_t h : row) width = std::max(width, std::to_string(h).size());
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::setw(width) << row[c];
    os << '\n';
  }
  return os.str();
}

std::string walkthrough_55331() {
  const Partition lambda({5, 5, 3, 3, 1});
  const std::size_t row = 4;
  const Partition mu = remove_corner(lambda, row);
  const int n = lambda.size();
  std::ostringstream os;

  os << "lambda = " << format_partition(lambda) << ", n = " << n << "\n\n";
  os << "hook lengths of lambda (H = " << hook_product(lambda).get_str() << "):\n"
     << render_hook_grid(lambda) << '\n';
  os << "remove the corner in row " << row << ": lambda' = " << format_partition(mu) << "\n";
  os << "hook lengths of lambda' (H = " << hook_product(mu).get_str() << "):\n"
     << render_hook_grid(mu) << '\n';

  const BigRational ratio = make_rational(hook_product(lambda), hook_product(mu));
  os << "H_lambda / H_lambda' = " << ratio.get_str() << '\n';

  const CornerData cd = corner_sets(lambda);
  os << "T=" << index_set(cd.in_corners) << "  B=" << index_set(cd.out_corners) << '\n';
  const QuotientFactors q = corner_quotient_factors(lambda, row);
  os << "g_lambda(x+1) / g_lambda'(x) = " << factored_form(q.numerator) << " / "
     << factored_form(q.denominator) << '\n';
  const BigRational at(static_cast<int>(row) - lambda.part(row));
  BigRational num(1), den(1);
  for (const auto& f : q.numerator) num *= f(at);
  for (const auto& f : q.denominator) den *= f(at);
  os << "at x = " << row << " - " << lambda.part(row) << " = " << at.get_str() << ": "
     << evaluated_factors(q.numerator, at) << " / " << evaluated_factors(q.denominator, at) << " = "
     << BigRational(num / den).get_str() << '\n';
  const bool corner_ok = check_identity(IdentityId::CORNER_RATIO_2_2, lambda).at(1).passed;
  os << "H_lambda * g_lambda'(" << at.get_str() << ") = H_lambda' * g_lambda(" << BigRational(at + 1).get_str()
     << "): " << (corner_ok ? "holds" : "FAILS") << "\n\n";

  os << "corner removals:";
  for (std::size_t k = 0; k < cd.in_corners.size(); ++k)
    os << "  lambda^{" << cd.in_corners[k] << "-}=" << format_partition(cd.removals[k]);
  os << '\n';
  const QuotientFactors full = g_quotient_factors(lambda);
  os << "(x-" << n << ") g(x+1)/g(x) = " << factored_form(full.numerator) << " / "
     << factored_form(full.denominator) << '\n';
  os << "x - prod_B/prod_T = (" << to_pretty(corner_numerator(lambda)) << ") / "
     << factored_form(full.denominator) << '\n';
  BigRational sum(0);
  for (std::size_t k = 0; k < cd.removals.size(); ++k) {
    const BigRational w = make_rational(hook_product(lambda), hook_product(cd.removals[k]));
    os << "H_lambda / H_lambda^{" << cd.in_corners[k] << "-} = " << w.get_str() << '\n';
    sum += w;
  }
  os << "sum of corner weights = " << sum.get_str() << " = n\n";
  return os.str();
}

}  // namespace hookpoly

#include "hookpoly/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hookpoly/error.hpp"

namespace hookpoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::InvalidArgument, "partition parts not weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "0") return Partition{};

  std::vector<int> parts;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw Error(ErrorCode::Parse, "non-numeric character in partition '" + std::string(text) + "'");
      parts.push_back(ch - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::Parse, "non-numeric token '" + std::string(tok) + "'");
      parts.push_back(value);
      pos = end + 1;
    }
  }

  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw Error(ErrorCode::Parse, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::Parse, "partition parts not weakly decreasing");
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& lambda) {
  if (lambda.empty()) return "0";
  std::string out;
  for (int p : lambda.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest available part first gives reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(lambda.empty() ? 0 : lambda.part(1), 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++parts[j];
  return Partition(std::move(parts));
}

bool contains(const Partition& lambda, Cell v) {
  return v.row >= 1 && v.col >= 1 && v.row <= lambda.length() &&
         v.col <= static_cast<std::size_t>(lambda.part(v.row));
}

std::size_t hook_length(const Partition& lambda, Cell v) {
  if (!contains(lambda, v))
    throw Error(ErrorCode::InvalidArgument, "cell outside the diagram");
  std::size_t arm = lambda.part(v.row) - v.col;
  std::size_t leg = 0;
  for (std::size_t r = v.row + 1; r <= lambda.length() && lambda.part(r) >= static_cast<int>(v.col); ++r)
    ++leg;
  return arm + leg + 1;
}

std::vector<std::vector<std::size_t>> hook_grid(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<std::vector<std::size_t>> grid(lambda.length());
  for (std::size_t r = 1; r <= lambda.length(); ++r) {
    for (std::size_t c = 1; c <= static_cast<std::size_t>(lambda.part(r)); ++c)
      grid[r - 1].push_back((lambda.part(r) - c) + (conj.part(c) - r) + 1);
  }
  return grid;
}

std::vector<std::size_t> hook_multiset(const Partition& lambda) {
  std::vector<std::size_t> out;
  for (const auto& row : hook_grid(lambda)) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BigInt hook_product(const Partition& lambda) {
  BigInt h = 1;
  for (const auto& row : hook_grid(lambda))
    for (std::size_t v : row) h *= static_cast<unsigned long>(v);
  return h;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt syt_count(const Partition& lambda) {
  const BigInt h = hook_product(lambda);
  const BigInt nf = factorial(static_cast<unsigned>(lambda.size()));
  if (!mpz_divisible_p(nf.get_mpz_t(), h.get_mpz_t()))
    throw Error(ErrorCode::Internal, "n! not divisible by the hook product of " + format_partition(lambda));
  BigInt f;
  mpz_divexact(f.get_mpz_t(), nf.get_mpz_t(), h.get_mpz_t());
  return f;
}

BigInt syt_count_bruteforce(const Partition& lambda, int max_size) {
  if (lambda.size() > max_size)
    throw Error(ErrorCode::BoundExceeded, "brute-force SYT bound exceeded");
  // filled[r] = number of entries placed so far in row r.
  std::vector<int> filled(lambda.length(), 0);
  BigInt count = 0;
  std::function<void(int)> place = [&](int next) {
    if (next > lambda.size()) {
      ++count;
      return;
    }
    for (std::size_t r = 0; r < filled.size(); ++r) {
      const bool room = filled[r] < lambda.parts()[r];
      const bool above_done = r == 0 || filled[r - 1] > filled[r];
      if (room && above_done) {
        ++filled[r];
        place(next + 1);
        --filled[r];
      }
    }
  };
  place(1);
  return count;
}

Partition remove_corner(const Partition& lambda, std::size_t row) {
  if (row < 1 || row > lambda.length() || lambda.part(row) <= lambda.part(row + 1))
    throw Error(ErrorCode::InvalidArgument, "row has no removable corner");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (--parts[row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

CornerData corner_sets(const Partition& lambda) {
  if (lambda.empty())
    throw Error(ErrorCode::InvalidArgument, "the empty partition has no corners");
  CornerData out;
  out.out_corners.push_back(1);
  // Rows past the length have lambda_j = 0 and never qualify.
  for (std::size_t j = 1; j <= lambda.length(); ++j) {
    if (lambda.part(j) > lambda.part(j + 1)) {
      out.in_corners.push_back(j);
      out.out_corners.push_back(j + 1);
      out.removals.push_back(remove_corner(lambda, j));
    }
  }
  return out;
}

std::vector<Partition> corner_removals(const Partition& lambda) {
  return corner_sets(lambda).removals;
}

std::vector<Partition> box_additions(const Partition& mu) {
  std::vector<Partition> out;
  for (std::size_t r = 1; r <= mu.length() + 1; ++r) {
    if (r == 1 || mu.part(r - 1) > mu.part(r)) {
      std::vector<int> parts(mu.parts().begin(), mu.parts().end());
      if (r > parts.size())
        parts.push_back(1);
      else
        ++parts[r - 1];
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace hookpoly

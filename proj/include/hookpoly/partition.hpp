#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hookpoly/exact_algebra.hpp"

namespace hookpoly {

// Integer partition: weakly decreasing, strictly positive parts. The empty
// partition is the unique partition of 0.
//
// Diagrams use English orientation: row 1 on top, the leg of a hook points
// down. Hook multisets (and so every quantity computed here) are the same as
// in the French drawing where the leg points up.
class Partition {
 public:
  Partition() = default;
  // Throws Error(InvalidArgument) unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  // 1-based; rows beyond the length read as 0.
  int part(std::size_t row) const {
    return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Orders partitions reverse-lexicographically: (4) < (3,1) < (2,2) in this
// comparator, i.e. larger first parts come first.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct Cell {
  std::size_t row = 0;  // 1-based
  std::size_t col = 0;  // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CornerData {
  std::vector<std::size_t> in_corners;   // T, increasing
  std::vector<std::size_t> out_corners;  // B = {1} u {i+1 : i in T}, increasing
  std::vector<Partition> removals;       // removals[k] = lambda with row T[k] shortened
};

// "5,5,3,3,1", compact "55331" (every part a single digit), "" or "0" for the
// empty partition. Throws Error(Parse).
Partition parse_partition(std::string_view text);

// Comma-separated parts, no whitespace; the empty partition is "0".
std::string format_partition(const Partition& lambda);

// All partitions of n, reverse-lexicographic.
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

bool contains(const Partition& lambda, Cell v);
std::size_t hook_length(const Partition& lambda, Cell v);

// hooks[row-1][col-1]
std::vector<std::vector<std::size_t>> hook_grid(const Partition& lambda);
std::vector<std::size_t> hook_multiset(const Partition& lambda);  // sorted descending

BigInt hook_product(const Partition& lambda);
BigInt factorial(unsigned n);

// n!/H, with the exact division checked.
BigInt syt_count(const Partition& lambda);

// Enumerates standard fillings by placing 1..n one at a time into an addable
// cell of the growing shape. Throws Error(BoundExceeded) above max_size.
BigInt syt_count_bruteforce(const Partition& lambda, int max_size = 10);

// Throws Error(InvalidArgument) for the empty partition.
CornerData corner_sets(const Partition& lambda);
std::vector<Partition> corner_removals(const Partition& lambda);

// lambda with the last box of `row` erased; `row` must be an in-corner.
Partition remove_corner(const Partition& lambda, std::size_t row);

// Every partition obtained by adding one box, ordered by the row of the new
// box (top row first).
std::vector<Partition> box_additions(const Partition& mu);

}  // namespace hookpoly

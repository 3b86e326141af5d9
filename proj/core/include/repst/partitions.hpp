#pragma once

// Young diagram primitives.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "repst/exactalg.hpp"

namespace repst {

/// A Young diagram: weakly decreasing positive parts. The empty sequence is
/// the empty diagram.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }
  /// 1-based row length; 0 beyond the last row.
  int row(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
  int first_row() const { return row(1); }

  /// "2,1"; empty string for the empty diagram.
  std::string to_string() const;
  /// Inverse of to_string. Throws Parse on malformed input.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Cell {
  int row;  // 1-based
  int col;  // 1-based
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::vector<Cell> cells(const Partition& lambda);

Partition conjugate(const Partition& lambda);

std::map<Cell, int> hook_lengths(const Partition& lambda);
Integer hook_product(const Partition& lambda);

enum class ContentConvention {
  ColMinusRow,  // classical eigenvalue-compatible convention
  RowMinusCol,
};

int content_sum(const Partition& lambda, ContentConvention convention = ContentConvention::ColMinusRow);

struct CornerSets {
  std::set<Partition> added;    // one addable cell added
  std::set<Partition> removed;  // one corner removed
  std::set<Partition> moved;    // corner removed then re-added elsewhere, != lambda
  int corner_count = 0;
};

CornerSets corner_sets(const Partition& lambda);

/// (n - |lambda|, lambda_1, lambda_2, ...). Throws TooSmall when
/// n - |lambda| < lambda_1.
Partition pad(const Partition& lambda, int n);

/// Nonnegative integers not of the form N - 1 + k - lambda*_k, k >= 1.
std::set<int> b_set(const Partition& lambda);

/// Standard Young tableaux count, by branching over removable corners.
Integer standard_tableaux_count(const Partition& lambda);

/// All partitions of n in reverse lexicographic order, (n) first.
/// Throws LimitExceeded when n exceeds the configured cap.
std::vector<Partition> enumerate_partitions(int n);

/// All partitions with size at most max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace repst

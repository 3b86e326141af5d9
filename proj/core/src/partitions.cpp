#include "repst/partitions.hpp"

#include <charconv>
#include <mutex>
#include <sstream>

#include "repst/limits.hpp"

namespace repst {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
  return out.str();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return {};
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::Parse, "malformed partition part '" + std::string(item) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) out.push_back({static_cast<int>(i), j});
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first_row()), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

std::map<Cell, int> hook_lengths(const Partition& lambda) {
  const Partition dual = conjugate(lambda);
  std::map<Cell, int> hooks;
  for (const Cell& c : cells(lambda)) {
    hooks[c] = lambda.row(static_cast<std::size_t>(c.row)) - c.col +
               dual.row(static_cast<std::size_t>(c.col)) - c.row + 1;
  }
  return hooks;
}

Integer hook_product(const Partition& lambda) {
  Integer product = 1;
  for (const auto& [cell, h] : hook_lengths(lambda)) product *= h;
  return product;
}

int content_sum(const Partition& lambda, ContentConvention convention) {
  int sum = 0;
  for (const Cell& c : cells(lambda)) sum += c.col - c.row;
  return convention == ContentConvention::ColMinusRow ? sum : -sum;
}

namespace {

// Rows (1-based, up to length+1) where a cell can be added.
std::vector<std::size_t> addable_rows(const std::vector<int>& parts) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    const int here = i < parts.size() ? parts[i] : 0;
    if (i == 0 || parts[i - 1] > here) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> corner_rows(const std::vector<int>& parts) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int below = i + 1 < parts.size() ? parts[i + 1] : 0;
    if (parts[i] > below) rows.push_back(i);
  }
  return rows;
}

std::vector<int> with_cell_added(std::vector<int> parts, std::size_t row) {
  if (row == parts.size()) {
    parts.push_back(1);
  } else {
    ++parts[row];
  }
  return parts;
}

std::vector<int> with_cell_removed(std::vector<int> parts, std::size_t row) {
  if (--parts[row] == 0) parts.pop_back();
  return parts;
}

}  // namespace

CornerSets corner_sets(const Partition& lambda) {
  CornerSets out;
  const auto& parts = lambda.parts();
  for (std::size_t r : addable_rows(parts)) out.added.insert(Partition(with_cell_added(parts, r)));
  const auto corners = corner_rows(parts);
  out.corner_count = static_cast<int>(corners.size());
  for (std::size_t r : corners) {
    auto smaller = with_cell_removed(parts, r);
    out.removed.insert(Partition(smaller));
    for (std::size_t a : addable_rows(smaller)) {
      Partition moved(with_cell_added(smaller, a));
      if (moved != lambda) out.moved.insert(std::move(moved));
    }
  }
  return out;
}

Partition pad(const Partition& lambda, int n) {
  const int first = n - lambda.size();
  if (first < lambda.first_row()) {
    throw Error(ErrorKind::TooSmall, "cannot pad (" + lambda.to_string() + ") to n=" + std::to_string(n));
  }
  std::vector<int> parts{first};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  if (first == 0) parts.clear();  // only for the empty diagram at n = 0
  return Partition(std::move(parts));
}

std::set<int> b_set(const Partition& lambda) {
  const Partition dual = conjugate(lambda);
  const int n = lambda.size();
  // The excluded sequence is strictly increasing with value n-1+k for k > lambda_1,
  // so everything at or above n + lambda_1 is excluded.
  std::set<int> excluded;
  for (int k = 1; k <= lambda.first_row() + 1; ++k) excluded.insert(n - 1 + k - dual.row(static_cast<std::size_t>(k)));
  std::set<int> out;
  for (int v = 0; v < n + lambda.first_row(); ++v) {
    if (!excluded.contains(v)) out.insert(v);
  }
  return out;
}

Integer standard_tableaux_count(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, Integer> memo;
  if (lambda.size() <= 1) return 1;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  }
  Integer count = 0;
  for (std::size_t r : corner_rows(lambda.parts())) {
    count += standard_tableaux_count(Partition(with_cell_removed(lambda.parts(), r)));
  }
  std::lock_guard lock(mutex);
  memo.emplace(lambda, count);
  return count;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative partition size");
  if (n > limits().partition_size) {
    throw Error(ErrorKind::LimitExceeded, "partitions of " + std::to_string(n) + " exceed the cap " +
                                              std::to_string(limits().partition_size));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Partition>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  std::lock_guard lock(mutex);
  cache.emplace(n, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace repst

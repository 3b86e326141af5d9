#include "repst/snoracle.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace repst {

CycleType::CycleType(std::vector<int> counts) : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative cycle count");
    support_ += counts_[i] * static_cast<int>(i + 2);
  }
}

int CycleType::cycles_of_length(int length) const {
  const auto idx = static_cast<std::size_t>(length - 2);
  return length >= 2 && idx < counts_.size() ? counts_[idx] : 0;
}

Integer CycleType::centralizer_on_support() const {
  Integer z = 1;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    Integer len_pow;
    mpz_ui_pow_ui(len_pow.get_mpz_t(), i + 2, static_cast<unsigned long>(counts_[i]));
    z *= factorial(static_cast<unsigned long>(counts_[i])) * len_pow;
  }
  return z;
}

std::vector<int> CycleType::cycle_lengths() const {
  std::vector<int> lengths;
  for (std::size_t i = counts_.size(); i-- > 0;) {
    for (int c = 0; c < counts_[i]; ++c) lengths.push_back(static_cast<int>(i + 2));
  }
  return lengths;
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < counts_.size(); ++i) out << (i ? "," : "") << counts_[i];
  return out.str();
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> counts;
  if (text.empty()) return {};
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
      throw Error(ErrorKind::Parse, "malformed cycle count '" + std::string(item) + "'");
    }
    counts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return CycleType(std::move(counts));
}

CycleType CycleType::from_cycle_lengths(const std::vector<int>& lengths) {
  std::vector<int> counts;
  for (int len : lengths) {
    if (len < 2) throw Error(ErrorKind::InvalidArgument, "cycle lengths must be at least 2");
    const auto idx = static_cast<std::size_t>(len - 2);
    if (counts.size() <= idx) counts.resize(idx + 1, 0);
    ++counts[idx];
  }
  return CycleType(std::move(counts));
}

std::vector<CycleType> cycle_types_up_to(int max_support) {
  std::vector<CycleType> out;
  for (int s = 0; s <= max_support; ++s) {
    for (const Partition& p : enumerate_partitions(s)) {
      const auto& parts = p.parts();
      if (std::all_of(parts.begin(), parts.end(), [](int x) { return x >= 2; })) {
        out.push_back(CycleType::from_cycle_lengths(parts));
      }
    }
  }
  return out;
}

std::vector<CycleType> conjugacy_classes(int n) { return cycle_types_up_to(n); }

Integer hook_dim(const Partition& mu) {
  return factorial(static_cast<unsigned long>(mu.size())) / hook_product(mu);
}

namespace {

using Beta = std::vector<int>;  // strictly decreasing bead positions

Beta beta_numbers(const Partition& mu) {
  const int len = static_cast<int>(mu.length());
  Beta beta;
  for (int i = 1; i <= len; ++i) beta.push_back(mu.row(static_cast<std::size_t>(i)) + len - i);
  return beta;
}

Partition from_beta(const Beta& beta) {
  std::vector<int> parts;
  const int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

// Cycles are consumed from `cycles[from]` onward (decreasing lengths). Once
// only fixed points remain the character is the dimension of what is left.
Integer mn_recurse(const Beta& beta, const std::vector<int>& cycles, std::size_t from,
                   std::map<std::pair<Beta, std::size_t>, Integer>& memo) {
  if (from == cycles.size()) return hook_dim(from_beta(beta));
  const auto key = std::make_pair(beta, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = cycles[from];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Leg length = number of beads strictly between target and beta[i].
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
    Beta next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    const Integer sub = mn_recurse(next, cycles, from + 1, memo);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& mu, const CycleType& rho) {
  if (rho.support() > mu.size()) {
    throw Error(ErrorKind::SizeMismatch, "cycle type support " + std::to_string(rho.support()) +
                                             " exceeds |mu| = " + std::to_string(mu.size()));
  }
  // Keyed per (beta set, position in this cycle list); the list itself is
  // fixed for the duration of one call, so the cache is per call.
  std::map<std::pair<Beta, std::size_t>, Integer> memo;
  return mn_recurse(beta_numbers(mu), rho.cycle_lengths(), 0, memo);
}

Integer class_size(int n, const CycleType& rho) {
  const int m = rho.support();
  if (m > n) throw Error(ErrorKind::SizeMismatch, "cycle type does not fit in S_" + std::to_string(n));
  Integer falling = 1;
  for (int j = 0; j < m; ++j) falling *= n - j;
  return falling / rho.centralizer_on_support();
}

Rational central_eigenvalue_classical(int n, const CycleType& rho, const Partition& mu) {
  if (mu.size() != n) throw Error(ErrorKind::SizeMismatch, "mu is not a partition of n");
  return make_rational(class_size(n, rho) * mn_character(mu, rho), hook_dim(mu));
}

}  // namespace repst

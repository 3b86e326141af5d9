#include <doctest.h>

#include <algorithm>
#include <set>

#include "repst/limits.hpp"
#include "repst/partitions.hpp"

using namespace repst;

namespace {

std::set<std::pair<int, int>> cell_set(const Partition& p) {
  std::set<std::pair<int, int>> out;
  for (const auto& c : cells(p)) out.emplace(c.row, c.col);
  return out;
}

// Euler's pentagonal recurrence for p(n).
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
    }
  }
  return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("partition validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
  for (const char* bad : {"1,", ",1", "a", "1,2", "2,-1", "1 ,1"}) {
    try {
      (void)Partition::parse(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
}

TEST_CASE("conjugate matches cell transposition and is an involution") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      std::set<std::pair<int, int>> transposed;
      for (const auto& [r, c] : cell_set(p)) transposed.emplace(c, r);
      CHECK(cell_set(conjugate(p)) == transposed);
      CHECK(conjugate(conjugate(p)) == p);
    }
  }
}

TEST_CASE("hookLengths examples") {
  CHECK(hook_lengths(Partition({1})) == std::map<Cell, int>{{{1, 1}, 1}});
  CHECK(hook_lengths(Partition({2, 1})) == std::map<Cell, int>{{{1, 1}, 3}, {{1, 2}, 1}, {{2, 1}, 1}});
  CHECK(hook_product(Partition({3, 2})) == 24);
}

TEST_CASE("hook lengths by arm and leg counting") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const auto cs = cell_set(p);
      const auto hooks = hook_lengths(p);
      for (const auto& [r, c] : cs) {
        int arm = 0, leg = 0;
        while (cs.contains({r, c + arm + 1})) ++arm;
        while (cs.contains({r + leg + 1, c})) ++leg;
        CHECK(hooks.at(Cell{r, c}) == arm + leg + 1);
      }
      // The hook multiset sum is invariant under conjugation.
      int sum = 0, dual_sum = 0;
      for (const auto& [cell, h] : hooks) sum += h;
      for (const auto& [cell, h] : hook_lengths(conjugate(p))) dual_sum += h;
      CHECK(sum == dual_sum);
    }
  }
}

TEST_CASE("contentSum examples and convention") {
  CHECK(content_sum(Partition({1})) == 0);
  CHECK(content_sum(Partition({2})) == 1);
  CHECK(content_sum(Partition({1, 1})) == -1);
  CHECK(content_sum(Partition({2}), ContentConvention::RowMinusCol) == -1);
  for (const auto& p : enumerate_partitions(7)) CHECK(content_sum(conjugate(p)) == -content_sum(p));
}

TEST_CASE("cornerSets examples") {
  const auto empty = corner_sets(Partition());
  CHECK(empty.added == std::set<Partition>{Partition({1})});
  CHECK(empty.removed.empty());
  CHECK(empty.moved.empty());
  CHECK(empty.corner_count == 0);

  const auto one = corner_sets(Partition({1}));
  CHECK(one.added == std::set<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(one.removed == std::set<Partition>{Partition()});
  CHECK(one.moved.empty());
  CHECK(one.corner_count == 1);

  const auto hook = corner_sets(Partition({2, 1}));
  CHECK(hook.added == std::set<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
  CHECK(hook.removed == std::set<Partition>{Partition({2}), Partition({1, 1})});
  CHECK(hook.moved == std::set<Partition>{Partition({3}), Partition({1, 1, 1})});
  CHECK(hook.corner_count == 2);
}

TEST_CASE("corner sets agree with exhaustive cell comparison") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto sets = corner_sets(lambda);
      const auto cs = cell_set(lambda);
      std::set<Partition> added, removed, moved;
      for (const auto& mu : enumerate_partitions(n + 1)) {
        const auto ms = cell_set(mu);
        if (std::includes(ms.begin(), ms.end(), cs.begin(), cs.end())) added.insert(mu);
      }
      if (n > 0) {
        for (const auto& mu : enumerate_partitions(n - 1)) {
          const auto ms = cell_set(mu);
          if (std::includes(cs.begin(), cs.end(), ms.begin(), ms.end())) removed.insert(mu);
        }
        // Same size, differing in exactly one cell.
        for (const auto& mu : enumerate_partitions(n)) {
          if (mu == lambda) continue;
          const auto ms = cell_set(mu);
          std::vector<std::pair<int, int>> common;
          std::set_intersection(cs.begin(), cs.end(), ms.begin(), ms.end(), std::back_inserter(common));
          if (static_cast<int>(common.size()) == n - 1) moved.insert(mu);
        }
      }
      CHECK(sets.added == added);
      CHECK(sets.removed == removed);
      CHECK(sets.moved == moved);
      CHECK(sets.corner_count == static_cast<int>(removed.size()));
    }
  }
}

TEST_CASE("corner operations are mutually inverse") {
  const auto all = partitions_up_to(8);
  for (const auto& lambda : all) {
    const auto sets = corner_sets(lambda);
    for (const auto& mu : sets.added) CHECK(corner_sets(mu).removed.contains(lambda));
    for (const auto& mu : sets.moved) CHECK(corner_sets(mu).moved.contains(lambda));
  }
}

TEST_CASE("pad examples") {
  CHECK(pad(Partition(), 5) == Partition({5}));
  CHECK(pad(Partition({1}), 4) == Partition({3, 1}));
  try {
    (void)pad(Partition({2, 1}), 4);
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooSmall);
  }
  CHECK(pad(Partition({2, 1}), 5) == Partition({2, 2, 1}));
  CHECK(pad(Partition(), 0) == Partition());
}

TEST_CASE("bSet examples and size") {
  CHECK(b_set(Partition({1})) == std::set<int>{1});
  CHECK(b_set(Partition({2})) == std::set<int>{0, 3});
  CHECK(b_set(Partition()).empty());
  for (const auto& p : partitions_up_to(10)) {
    const auto b = b_set(p);
    CHECK(static_cast<int>(b.size()) == p.size());
    // Brute force against a long prefix of the excluded sequence.
    const auto dual = conjugate(p);
    std::set<int> excluded;
    for (int k = 1; k <= 40; ++k) excluded.insert(p.size() - 1 + k - dual.row(static_cast<std::size_t>(k)));
    for (int v = 0; v < 30; ++v) CHECK(b.contains(v) == !excluded.contains(v));
  }
}

TEST_CASE("enumeratePartitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 25; ++n) {
    const auto ps = enumerate_partitions(n);
    CHECK(static_cast<long>(ps.size()) == partition_count(n));
    CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
    for (const auto& p : ps) CHECK(p.size() == n);
  }
  try {
    (void)enumerate_partitions(limits().partition_size + 1);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
}

TEST_CASE("standard tableaux count by brute-force filling") {
  // Count fillings of the cells with 1..n increasing along rows and columns.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const auto cs = cells(p);
      std::vector<int> labels(cs.size());
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
      long count = 0;
      do {
        std::map<std::pair<int, int>, int> at;
        for (std::size_t i = 0; i < cs.size(); ++i) at[{cs[i].row, cs[i].col}] = labels[i];
        bool ok = true;
        for (const auto& [rc, v] : at) {
          auto right = at.find({rc.first, rc.second + 1});
          auto down = at.find({rc.first + 1, rc.second});
          if ((right != at.end() && right->second < v) || (down != at.end() && down->second < v)) ok = false;
        }
        count += ok ? 1 : 0;
      } while (std::next_permutation(labels.begin(), labels.end()));
      CHECK(standard_tableaux_count(p) == count);
    }
  }
}

TEST_CASE("limits parsing") {
  const Limits l = parse_limits("partitions=60,sweep=50");
  CHECK(l.partition_size == 60);
  CHECK(l.sweep_n == 50);
  CHECK(l.stirling_m == Limits{}.stirling_m);
  CHECK_THROWS_AS(parse_limits("bogus=1"), Error);
  CHECK_THROWS_AS(parse_limits("sweep=x"), Error);
  CHECK_THROWS_AS(parse_limits("sweep"), Error);
}

#include <doctest.h>

#include <functional>
#include <map>

#include "repst/deligne.hpp"
#include "repst/schurweyl.hpp"

using namespace repst;

namespace {

const Polynomial t = Polynomial::t();
const Polynomial one(1);

// Semistandard fillings of lambda with entries 1..d.
long ssyt_count(const Partition& lambda, int d) {
  const auto cs = cells(lambda);
  std::map<std::pair<int, int>, int> at;
  std::function<long(std::size_t)> go = [&](std::size_t i) -> long {
    if (i == cs.size()) return 1;
    long total = 0;
    for (int v = 1; v <= d; ++v) {
      auto l = at.find({cs[i].row, cs[i].col - 1});
      auto u = at.find({cs[i].row - 1, cs[i].col});
      if (l != at.end() && l->second > v) continue;
      if (u != at.end() && u->second >= v) continue;
      at[{cs[i].row, cs[i].col}] = v;
      total += go(i + 1);
      at.erase({cs[i].row, cs[i].col});
    }
    return total;
  };
  return go(0);
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  for (std::size_t i = 1; i <= static_cast<std::size_t>(mu.length()) + 1; ++i) {
    if (mu.row(i) < lambda.row(i)) return false;
    if (lambda.row(i) < mu.row(i + 1)) return false;
  }
  return lambda.length() <= mu.length();
}

}  // namespace

TEST_CASE("unital Hilbert series validation") {
  try {
    UnitalHilbert({2, 1});
    FAIL("expected BadConstantTerm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadConstantTerm);
  }
  CHECK_THROWS_AS(UnitalHilbert({1, -1}), Error);
  CHECK(UnitalHilbert({1, 2, 3}).total_dimension() == 6);
  CHECK(UnitalHilbert::ungraded(4).coeffs() == std::vector<Integer>{1, 4});
}

TEST_CASE("tensorPowerHilbert examples") {
  const auto binom = tensor_power_hilbert(UnitalHilbert({1, 1}), 8);
  for (int k = 0; k <= 8; ++k) CHECK(binom.coefficient({k}) == Polynomial::binomial(0, static_cast<unsigned>(k)));

  const auto two = tensor_power_hilbert(UnitalHilbert({1, 2}), 2);
  CHECK(two.coefficient({0}) == one);
  CHECK(two.coefficient({1}) == Polynomial(2) * t);
  CHECK(two.coefficient({2}) == Polynomial(2) * t * (t - one));
  CHECK(two.coefficient({2})(2) == 4);

  for (const auto& h : {UnitalHilbert({1, 3}), UnitalHilbert({1, 0, 2, 5})}) {
    CHECK(tensor_power_hilbert(h, 5).coefficient({0}) == one);
  }
}

TEST_CASE("tensorPowerHilbert at t = n is the n-th power") {
  const UnitalHilbert h({1, 2, 0, 1});
  const int degree = 6;
  std::vector<Integer> power(static_cast<std::size_t>(degree) + 1, 0);
  power[0] = 1;
  const auto series = tensor_power_hilbert(h, degree);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= degree; ++k) CHECK(series.coefficient({k})(n) == Rational(power[static_cast<std::size_t>(k)]));
    std::vector<Integer> next(power.size(), 0);
    for (std::size_t a = 0; a < power.size(); ++a) {
      for (std::size_t b = 0; b < h.coeffs().size() && a + b < next.size(); ++b) next[a + b] += power[a] * h.coeffs()[b];
    }
    power = next;
  }
}

TEST_CASE("schurDimPrincipal examples and tableau count") {
  for (int d = 1; d <= 6; ++d) CHECK(schur_dim_principal(Partition({1}), d) == d);
  CHECK(schur_dim_principal(Partition({2}), 2) == 3);
  CHECK(schur_dim_principal(Partition({1, 1}), 1) == 0);
  for (const auto& lambda : partitions_up_to(5)) {
    for (int d = 1; d <= 3; ++d) CHECK(schur_dim_principal(lambda, d) == ssyt_count(lambda, d));
  }
}

TEST_CASE("gradedDecompositionCheck") {
  // binom(t,2) = 1 + (t-1) + t(t-3)/2
  CHECK(Polynomial::binomial(0, 2) == one + (t - one) + dim_x(Partition({2})));
  const auto r = graded_decomposition_check(1, 2);
  CHECK(r.pass);
  CHECK_FALSE(r.first_failure.has_value());
  for (int d = 1; d <= 3; ++d) CHECK(graded_decomposition_check(d, 6).pass);
}

TEST_CASE("filtrationDegree1Dim examples") {
  CHECK(filtration_degree1_dim(1) == one);
  CHECK(filtration_degree1_dim(2) == t + one);
  CHECK(filtration_degree1_dim(3) == Polynomial(2) * t + one);
  for (int v = 1; v <= 6; ++v) {
    const auto series = tensor_power_hilbert(UnitalHilbert::ungraded(v - 1), 1);
    CHECK(filtration_degree1_dim(v) == series.coefficient({0}) + series.coefficient({1}));
  }
}

TEST_CASE("vermaReducibilityCandidates examples") {
  for (int n = 2; n <= 5; ++n) {
    const auto ranks = verma_candidate_ranks({Partition(), n}, 10);
    CHECK(ranks.size() == 11);
    for (const auto& c : verma_reducibility_candidates({Partition(), n}, 10)) {
      CHECK(c.i == 1);
      CHECK(c.m == c.t + 1);
    }
  }
  CHECK(verma_candidate_ranks({Partition({1}), 3}, 5) == std::set<int>{0, 2, 3, 4, 5});
  CHECK(verma_reducibility_candidates({Partition({1}), 3}, 0) ==
        std::set<ReducibilityCandidate>{ReducibilityCandidate{0, 2, 1}});
  // Every candidate satisfies the defining constraints.
  for (const auto& lambda : partitions_up_to(4)) {
    for (int n = lambda.length() + 1; n <= 5; ++n) {
      for (const auto& c : verma_reducibility_candidates({lambda, n}, 12)) {
        CHECK(c.m >= 1);
        CHECK(c.i >= 1);
        CHECK(c.i <= n - 1);
        const auto i = static_cast<std::size_t>(c.i);
        if (c.i > 1) CHECK(lambda.row(i - 1) >= lambda.row(i) + c.m);
        CHECK(c.t == lambda.size() + lambda.row(i) + c.m - c.i);
      }
    }
  }
}

TEST_CASE("isIrreducibleGuaranteed examples") {
  CHECK(is_irreducible_guaranteed(Rank{make_rational(1, 2)}, {Partition(), 3}));
  CHECK(is_irreducible_guaranteed(Rank{make_rational(1, 2)}, {Partition({2, 1}), 4}));
  CHECK(is_irreducible_guaranteed(Rank{NonIntegerRank{}}, {Partition({1}), 3}));
  for (int n = 3; n <= 6; ++n) CHECK(is_irreducible_guaranteed(Rank{Rational(1)}, {Partition({1}), n}));
  CHECK_FALSE(is_irreducible_guaranteed(Rank{Rational(3)}, {Partition(), 3}));
  CHECK(is_irreducible_guaranteed(Rank{Rational(-2)}, {Partition(), 3}));
  const Rational huge(Integer("100000000000000000000000"));
  CHECK_FALSE(is_irreducible_guaranteed(Rank{huge}, {Partition(), 3}));
  // Agreement with the enumerated candidate set on a window.
  for (const auto& lambda : partitions_up_to(4)) {
    for (int n = lambda.length() + 1; n <= 5; ++n) {
      const auto ranks = verma_candidate_ranks({lambda, n}, 20);
      for (int r = 0; r <= 20; ++r) CHECK(is_irreducible_guaranteed(Rank{Rational(r)}, {lambda, n}) == !ranks.contains(r));
    }
  }
}

TEST_CASE("interlaceBranch examples") {
  const auto row = interlace_branch(Partition(), 2, 3);
  CHECK(std::set<Partition>(row.begin(), row.end()) ==
        std::set<Partition>{Partition(), Partition({1}), Partition({2}), Partition({3})});
  const auto three = interlace_branch(Partition({1}), 3, 2);
  CHECK(std::set<Partition>(three.begin(), three.end()) ==
        std::set<Partition>{Partition({1}), Partition({2}), Partition({1, 1})});
  const auto two = interlace_branch(Partition({1}), 2, 2);
  CHECK(std::set<Partition>(two.begin(), two.end()) == std::set<Partition>{Partition({1}), Partition({2})});
}

TEST_CASE("interlaceBranch against brute-force filtering") {
  for (const auto& lambda : partitions_up_to(4)) {
    for (int n = lambda.length() + 1; n <= 4; ++n) {
      for (int bound = lambda.size(); bound <= lambda.size() + 4; ++bound) {
        std::set<Partition> expected;
        for (const auto& mu : partitions_up_to(bound)) {
          if (mu.length() <= n - 1 && interlaces(mu, lambda)) expected.insert(mu);
        }
        const auto got = interlace_branch(lambda, n, bound);
        CHECK(std::set<Partition>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
        const auto [branched, direct] = branching_dimension_check(lambda, n, bound);
        CHECK(branched == direct);
      }
    }
  }
}

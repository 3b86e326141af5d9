#include "repst/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "repst/bounds.hpp"
#include "repst/deligne.hpp"
#include "repst/groupalg.hpp"
#include "repst/schurweyl.hpp"
#include "repst/snoracle.hpp"

namespace repst {

void SuiteReport::merge(SuiteReport other) {
  checks += other.checks;
  for (auto& f : other.failures) failures.push_back(std::move(f));
}

Json SuiteReport::to_json() const {
  Json list = Json::array();
  for (const auto& f : failures) list.push_back({{"check", f.check}, {"detail", f.detail}});
  return {{"suite", suite}, {"pass", pass()}, {"checks", checks}, {"failures", list}};
}

namespace {

// Runs task(i) for i < count on a small worker pool; results are merged in
// index order so reports do not depend on scheduling.
template <typename Task>
SuiteReport run_parallel(const std::string& name, std::size_t count, Task task) {
  std::vector<SuiteReport> parts(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        parts[i] = task(i);
      } catch (const Error& e) {
        parts[i].checks += 1;
        parts[i].failures.push_back({name + "-exception", Json{{"item", i}, {"error", e.what()}}});
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SuiteReport report{name, 0, {}};
  for (auto& p : parts) report.merge(std::move(p));
  return report;
}

void expect_equal(SuiteReport& r, const std::string& check, const Rational& expected, const Rational& actual,
                  Json context) {
  ++r.checks;
  if (expected == actual) return;
  context["expected"] = expected.get_str();
  context["actual"] = actual.get_str();
  r.failures.push_back({check, std::move(context)});
}

void expect_true(SuiteReport& r, const std::string& check, bool ok, Json context) {
  ++r.checks;
  if (!ok) r.failures.push_back({check, std::move(context)});
}

int pad_start(const Partition& lambda) { return lambda.size() + lambda.first_row(); }

}  // namespace

SuiteReport dimension_oracle_sweep(int max_size, int max_n) {
  const auto lambdas = partitions_up_to(max_size);
  return run_parallel("dimension-oracle", lambdas.size(), [&](std::size_t idx) {
    SuiteReport r;
    const Partition& lambda = lambdas[idx];
    const Polynomial dim = dim_x(lambda);
    for (int n = pad_start(lambda); n <= max_n; ++n) {
      expect_equal(r, "dim-oracle", Rational(hook_dim(pad(lambda, n))), dim(n),
                   {{"lambda", lambda.to_string()}, {"n", n}});
    }
    return r;
  });
}

SuiteReport central_oracle_sweep(int max_size, int max_m, int max_n, ContentConvention convention) {
  std::vector<std::pair<Partition, CycleType>> items;
  for (const auto& lambda : partitions_up_to(max_size)) {
    for (const auto& rho : cycle_types_up_to(max_m)) items.emplace_back(lambda, rho);
  }
  const CycleType transposition({1});
  return run_parallel("central-oracle", items.size(), [&](std::size_t idx) {
    SuiteReport r;
    const auto& [lambda, rho] = items[idx];
    const Polynomial omega = omega_eigenvalue(rho, lambda);
    const Polynomial frob = frob_coefficient(lambda, rho);
    const bool with_jm = rho == transposition;
    const Polynomial jm = with_jm ? jm_eigenvalue(lambda, convention) : Polynomial();
    for (int n = std::max(pad_start(lambda), rho.support()); n <= max_n; ++n) {
      const Partition padded = pad(lambda, n);
      const Json ctx{{"lambda", lambda.to_string()}, {"rho", rho.to_string()}, {"n", n}};
      const Rational classical = central_eigenvalue_classical(n, rho, padded);
      expect_equal(r, "omega-oracle", classical, omega(n), ctx);
      expect_equal(r, "frobenius-character", Rational(mn_character(padded, rho)), frob(n), ctx);
      if (with_jm) expect_equal(r, "jm-oracle", classical, jm(n), ctx);
    }
    return r;
  });
}

SuiteReport jm_agreement_sweep(int max_size) {
  const auto lambdas = partitions_up_to(max_size);
  const CycleType transposition({1});
  return run_parallel("jm-agreement", lambdas.size(), [&](std::size_t idx) {
    SuiteReport r;
    const Partition& lambda = lambdas[idx];
    const Polynomial omega = omega_eigenvalue(transposition, lambda);
    const Polynomial jm = jm_eigenvalue(lambda);
    expect_true(r, "omega1-equals-jm", omega == jm,
                {{"lambda", lambda.to_string()}, {"omega", omega.to_string()}, {"jm", jm.to_string()}});
    return r;
  });
}

SuiteReport variable_stability_sweep(int max_size, int max_m) {
  std::vector<std::pair<Partition, CycleType>> items;
  for (const auto& lambda : partitions_up_to(max_size)) {
    for (const auto& rho : cycle_types_up_to(max_m)) items.emplace_back(lambda, rho);
  }
  return run_parallel("variable-stability", items.size(), [&](std::size_t idx) {
    SuiteReport r;
    const auto& [lambda, rho] = items[idx];
    const Polynomial base = frob_coefficient(lambda, rho);
    const Polynomial wider = frob_coefficient(lambda, rho, 1);
    expect_true(r, "frobenius-variable-count", base == wider,
                {{"lambda", lambda.to_string()}, {"rho", rho.to_string()}});
    return r;
  });
}

SuiteReport pieri_sweep(int max_size) {
  const auto lambdas = partitions_up_to(max_size);
  const Polynomial h0 = Polynomial::t() - Polynomial(1);
  return run_parallel("pieri", lambdas.size(), [&](std::size_t idx) {
    SuiteReport r;
    const Partition& lambda = lambdas[idx];
    const Decomposition decomposition = pieri_h0(lambda);
    Polynomial rhs;
    for (const auto& [mu, mult] : decomposition.terms()) rhs += dim_x(mu) * Polynomial(static_cast<long>(mult));
    const Polynomial lhs = h0 * dim_x(lambda);
    expect_true(r, "pieri-dimension", lhs == rhs,
                {{"lambda", lambda.to_string()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
    for (const auto& [mu, mult] : decomposition.terms()) {
      if (mu.size() > max_size) continue;
      const int back = pieri_h0(mu).multiplicity(lambda);
      expect_true(r, "pieri-symmetry", back == mult,
                  {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"forward", mult}, {"backward", back}});
    }
    return r;
  });
}

SuiteReport integer_valued_sweep(int dim_size, int omega_size, int max_m) {
  struct Item {
    enum Kind { Dim, ClassSize, Omega } kind;
    Partition lambda;
    CycleType rho;
  };
  std::vector<Item> items;
  for (const auto& lambda : partitions_up_to(dim_size)) items.push_back({Item::Dim, lambda, {}});
  for (const auto& rho : cycle_types_up_to(max_m)) {
    items.push_back({Item::ClassSize, {}, rho});
    for (const auto& lambda : partitions_up_to(omega_size)) items.push_back({Item::Omega, lambda, rho});
  }
  return run_parallel("integer-valued", items.size(), [&](std::size_t idx) {
    SuiteReport r;
    const Item& item = items[idx];
    Polynomial p;
    const char* what = "";
    switch (item.kind) {
      case Item::Dim: p = dim_x(item.lambda); what = "dim"; break;
      case Item::ClassSize: p = class_size_poly(item.rho); what = "class-size"; break;
      case Item::Omega: p = omega_eigenvalue(item.rho, item.lambda); what = "omega"; break;
    }
    Json ctx{{"quantity", what}, {"lambda", item.lambda.to_string()}, {"rho", item.rho.to_string()}};
    ++r.checks;
    try {
      integer_valued_certificate(p);
    } catch (const Error& e) {
      ctx["error"] = e.what();
      r.failures.push_back({"integer-valued", ctx});
    }
    return r;
  });
}

SuiteReport stirling_sweep(int max_m, int max_n, int row_sum_n) {
  const std::size_t row_tasks = row_sum_n >= 1 ? static_cast<std::size_t>(row_sum_n) : 0;
  const std::size_t coeff_tasks = static_cast<std::size_t>(max_m) + 1;
  return run_parallel("stirling", coeff_tasks + row_tasks, [&](std::size_t idx) {
    SuiteReport r;
    if (idx < coeff_tasks) {
      const int m = static_cast<int>(idx);
      const Polynomial stirling = stirling_hilbert_coeff(m);
      for (int n = 2 * m + 1; n <= max_n; ++n) {
        expect_equal(r, "stirling-value", Rational(elementary_consecutive(m, n)), stirling(n), {{"m", m}, {"n", n}});
      }
      const Polynomial gamma = gamma_ratio_coeff(m);
      expect_true(r, "gamma-route", gamma == stirling,
                  {{"m", m}, {"stirling", stirling.to_string()}, {"gamma", gamma.to_string()}});
      ++r.checks;
      try {
        integer_valued_certificate(stirling);
      } catch (const Error& e) {
        r.failures.push_back({"stirling-integer-valued", {{"m", m}, {"error", e.what()}}});
      }
      return r;
    }
    const int n = static_cast<int>(idx - coeff_tasks) + 1;
    Rational total = 0;
    for (int m = 0; m <= n - 1; ++m) total += stirling_hilbert_coeff(m)(n);
    expect_equal(r, "row-sum-factorial", Rational(factorial(static_cast<unsigned long>(n))), total, {{"n", n}});
    return r;
  });
}

SuiteReport bounds_sweep(int max_n) {
  return run_parallel("bounds", static_cast<std::size_t>(std::max(max_n, 0)), [&](std::size_t idx) {
    SuiteReport r;
    const int n = static_cast<int>(idx) + 1;
    const BoundSweepReport sweep = bound_sweep(n);
    expect_true(r, "dimension-bound", sweep.pass, to_json(sweep));
    if (n <= 12) {
      for (const Partition& mu : enumerate_partitions(n)) {
        const AmgmReport amgm = amgm_check(mu);
        Json ctx = to_json(amgm);
        ctx["mu"] = mu.to_string();
        expect_true(r, "amgm", amgm.pass && amgm.hook_identity, ctx);
      }
    }
    if (n >= 10 && n <= 15) {
      const auto violations = lemma_scan(1, 1, n);
      Json list = Json::array();
      for (const auto& mu : violations) list.push_back(mu.to_string());
      expect_true(r, "lemma-scan", violations.empty(), {{"n", n}, {"violations", list}});
    }
    return r;
  });
}

SuiteReport graded_sweep(int max_d, int degree) {
  std::vector<std::function<SuiteReport()>> tasks;

  tasks.emplace_back([] {
    SuiteReport r;
    const TruncatedSeries series = tensor_power_hilbert(UnitalHilbert({1, 1}), 10);
    for (int k = 0; k <= 10; ++k) {
      expect_true(r, "binomial-series", series.coefficient({k}) == Polynomial::binomial(0, static_cast<unsigned>(k)),
                  {{"k", k}});
    }
    return r;
  });
  for (const auto& coeffs : std::vector<std::vector<Integer>>{{1, 1, 1}, {1, 2, 3}, {1, 3, 0, 1}}) {
    tasks.emplace_back([coeffs, degree] {
      SuiteReport r;
      const UnitalHilbert h(coeffs);
      const TruncatedSeries series = tensor_power_hilbert(h, degree);
      TruncatedSeries base({degree});
      for (std::size_t k = 0; k < coeffs.size(); ++k) base.add_term({static_cast<int>(k)}, Polynomial(coeffs[k]));
      for (unsigned n = 0; n <= 6; ++n) {
        const TruncatedSeries power = pow(base, n);
        for (int k = 0; k <= degree; ++k) {
          expect_equal(r, "tensor-power", power.coefficient({k}).coeff(0), series.coefficient({k})(Rational(n)),
                       {{"h", coeffs.size()}, {"n", n}, {"k", k}});
        }
      }
      return r;
    });
  }
  for (int d = 1; d <= max_d; ++d) {
    tasks.emplace_back([d, degree] {
      SuiteReport r;
      const auto report = graded_decomposition_check(d, degree);
      expect_true(r, "graded-decomposition", report.pass, to_json(report));
      return r;
    });
  }
  tasks.emplace_back([] {
    SuiteReport r;
    for (int v = 1; v <= 5; ++v) {
      const TruncatedSeries series = tensor_power_hilbert(UnitalHilbert::ungraded(v - 1), 1);
      const Polynomial low = series.coefficient({0}) + series.coefficient({1});
      expect_true(r, "filtration-degree-1", filtration_degree1_dim(v) == low, {{"v", v}});
    }
    return r;
  });
  tasks.emplace_back([] {
    SuiteReport r;
    const int t_max = 10;
    std::set<int> all;
    for (int t = 0; t <= t_max; ++t) all.insert(t);
    std::set<int> all_but_one = all;
    all_but_one.erase(1);
    for (int dim_v = 2; dim_v <= 5; ++dim_v) {
      expect_true(r, "verma-empty", verma_candidate_ranks({Partition(), dim_v}, t_max) == all, {{"N", dim_v}});
    }
    for (int dim_v = 3; dim_v <= 5; ++dim_v) {
      expect_true(r, "verma-one-box", verma_candidate_ranks({Partition({1}), dim_v}, t_max) == all_but_one,
                  {{"N", dim_v}});
    }
    for (const auto& lambda : partitions_up_to(4)) {
      for (int dim_v = static_cast<int>(lambda.length()) + 1; dim_v <= static_cast<int>(lambda.length()) + 3; ++dim_v) {
        for (const auto& c : verma_reducibility_candidates({lambda, dim_v}, t_max)) {
          expect_true(r, "verma-range", c.t >= 0 && c.t <= t_max,
                      {{"lambda", lambda.to_string()}, {"N", dim_v}, {"t", c.t}});
        }
      }
    }
    return r;
  });
  tasks.emplace_back([] {
    SuiteReport r;
    for (const auto& lambda : partitions_up_to(3)) {
      for (int dim_v = static_cast<int>(lambda.length()) + 1; dim_v <= 4; ++dim_v) {
        for (int bound = 0; bound <= 6; ++bound) {
          const auto [branched, direct] = branching_dimension_check(lambda, dim_v, bound);
          expect_true(r, "interlace-dimension", branched == direct,
                      {{"lambda", lambda.to_string()}, {"N", dim_v}, {"bound", bound}});
        }
      }
    }
    return r;
  });

  return run_parallel("graded", tasks.size(), [&](std::size_t idx) { return tasks[idx](); });
}

}  // namespace repst

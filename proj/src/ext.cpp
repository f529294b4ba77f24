#include "extschur/ext.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <mutex>
#include <tuple>

#include <omp.h>

#include "extschur/brauer.hpp"
#include "extschur/lie.hpp"
#include "extschur/polyfunctor.hpp"
#include "extschur/symgroup.hpp"

namespace extschur {

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names{kOracleCatLie, kOracleUbCharacter,
                                              kOracleUbSymmetrizer, kOracleSolver};
  return names;
}

bool is_oracle_name(const std::string& name) {
  const auto& names = oracle_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

bool values_agree(const ExtReport& r) {
  for (const auto& [name, value] : r.oracles)
    if (value && *value != r.closed) return false;
  return true;
}

std::uint64_t ext0_closed(const ExtQuery& q) { return q.lambda == q.mu ? 1 : 0; }

std::uint64_t ext1_grop_closed(const ExtQuery& q) {
  const int n = q.lambda.size();
  if (q.mu.size() != n - 1 || n < 2) return 0;
  const Partition pair = Partition::column(2);
  const Partition box = Partition::row(1);
  std::uint64_t total = 0;
  for (const auto& rho : enumerate_partitions(n - 2))
    total += lr_coefficient(q.lambda, rho, pair) * lr_coefficient(q.mu, rho, box);
  return total;
}

std::uint64_t ext1_closed(const ExtQuery& q) {
  const int n = q.lambda.size();
  const int m = q.mu.size();
  if (m == n - 1) return ext1_grop_closed(q);
  if (m == n + 2) return lr_coefficient(q.mu, q.lambda, Partition::row(2));
  return 0;
}

namespace {

Rational class_pair_trace(Bimodule kind, int n, int m, const Permutation& sigma,
                          const Permutation& tau) {
  if (kind == Bimodule::catlie) return bimodule_trace(n, m, sigma, tau);
  return Rational(static_cast<long>(ub_bimodule_trace(n, m, sigma, tau)));
}

template <bool Parallel>
BimoduleCharacter compute_character(Bimodule kind, int n, int m) {
  const auto target_classes = enumerate_partitions(m);
  const auto source_classes = enumerate_partitions(n);
  BimoduleCharacter chi{kind, n, m, {}};
  chi.trace.assign(target_classes.size(), std::vector<Rational>(source_classes.size()));
  const auto cols = static_cast<std::ptrdiff_t>(source_classes.size());
  const auto cells = static_cast<std::ptrdiff_t>(target_classes.size()) * cols;
  // Warm the shared caches before threads touch them.
  if (cells > 0)
    class_pair_trace(kind, n, m, Permutation::identity(m), Permutation::identity(n));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    const auto r = static_cast<std::size_t>(cell / cols);
    const auto c = static_cast<std::size_t>(cell % cols);
    try {
      chi.trace[r][c] =
          class_pair_trace(kind, n, m, Permutation::class_representative(target_classes[r]),
                           Permutation::class_representative(source_classes[c]));
    } catch (...) {
#pragma omp critical(extschur_character_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return chi;
}

}  // namespace

const BimoduleCharacter& bimodule_character(Bimodule kind, int n, int m) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<BimoduleCharacter>> cache;
  const std::tuple<int, int, int> key{static_cast<int>(kind), n, m};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<BimoduleCharacter>(compute_character<true>(kind, n, m));
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::move(computed);
  return *slot;
}

BimoduleCharacter bimodule_character_serial(Bimodule kind, int n, int m) {
  return compute_character<false>(kind, n, m);
}

std::uint64_t bimodule_multiplicity(const BimoduleCharacter& chi, const Partition& mu,
                                    const Partition& lambda) {
  if (mu.size() != chi.m || lambda.size() != chi.n)
    throw ContractViolation("partition sizes do not match the bimodule");
  const auto target_classes = enumerate_partitions(chi.m);
  const auto source_classes = enumerate_partitions(chi.n);
  Rational sum = 0;
  for (std::size_t r = 0; r < target_classes.size(); ++r) {
    const Rational left = Rational(static_cast<long>(class_size(target_classes[r]))) *
                          static_cast<long>(character_value(mu, target_classes[r]));
    if (sgn(left) == 0) continue;
    for (std::size_t c = 0; c < source_classes.size(); ++c) {
      if (sgn(chi.trace[r][c]) == 0) continue;
      sum += left * static_cast<long>(class_size(source_classes[c])) *
             static_cast<long>(character_value(lambda, source_classes[c])) * chi.trace[r][c];
    }
  }
  sum /= Rational(static_cast<long>(factorial(chi.m))) * static_cast<long>(factorial(chi.n));
  if (sum.get_den() != 1 || sgn(sum) < 0)
    throw std::logic_error("bimodule multiplicity is not a non-negative integer: " +
                           sum.get_str());
  return sum.get_num().get_ui();
}

std::uint64_t ext1_oracle_catlie(const ExtQuery& q) {
  const int n = q.lambda.size();
  if (q.mu.size() != n - 1) throw ContractViolation("catLie oracle needs |mu| = |lambda| - 1");
  return bimodule_multiplicity(bimodule_character(Bimodule::catlie, n, n - 1), q.mu,
                               q.lambda);
}

std::uint64_t ext1_oracle_ub_character(const ExtQuery& q) {
  const int n = q.lambda.size();
  if (q.mu.size() != n + 2) throw ContractViolation("ub oracle needs |mu| = |lambda| + 2");
  return bimodule_multiplicity(bimodule_character(Bimodule::upward_brauer, n, n + 2), q.mu,
                               q.lambda);
}

std::uint64_t ext1_oracle_ub_symmetrizer(const ExtQuery& q) {
  const int n = q.lambda.size();
  if (q.mu.size() != n + 2)
    throw ContractViolation("symmetrizer oracle needs |mu| = |lambda| + 2");
  if (q.mu.size() > kSymmetrizerCap)
    throw MethodUnavailable("symmetrizer ranks are capped at |mu| <= " +
                            std::to_string(kSymmetrizerCap));
  return symmetrizer_multiplicity(q.mu, right_ideal_with_embedded_symmetrizer(q.lambda, n + 2));
}

std::uint64_t ext1_oracle_solver(const ExtQuery& q) {
  const int n = q.lambda.size();
  const int m = q.mu.size();
  if (q.lambda.is_row() && q.mu.is_row())
    return solve_casimir_constraints({FunctorFamily::symmetric, n}, {FunctorFamily::symmetric, m})
        .kernel.size();
  if (q.lambda.is_column() && q.mu.is_column() && m != n - 1)
    return solve_casimir_constraints({FunctorFamily::exterior, n}, {FunctorFamily::exterior, m})
        .kernel.size();
  throw MethodUnavailable("the constraint solver covers one-row pairs and one-column pairs "
                          "outside |mu| = |lambda| - 1");
}

namespace {

std::optional<std::uint64_t> run_oracle(const std::string& name, const ExtQuery& q) {
  const int n = q.lambda.size();
  const int m = q.mu.size();
  try {
    if (name == kOracleCatLie) {
      if (m != n - 1) return std::nullopt;
      return ext1_oracle_catlie(q);
    }
    if (name == kOracleUbCharacter) {
      if (m != n + 2) return std::nullopt;
      return ext1_oracle_ub_character(q);
    }
    if (name == kOracleUbSymmetrizer) {
      if (m != n + 2) return std::nullopt;
      return ext1_oracle_ub_symmetrizer(q);
    }
    if (name == kOracleSolver) return ext1_oracle_solver(q);
  } catch (const MethodUnavailable&) {
    return std::nullopt;
  }
  throw std::invalid_argument("unknown oracle: " + name);
}

const std::vector<std::string>& table_oracles() {
  static const std::vector<std::string> names{kOracleCatLie, kOracleUbCharacter,
                                              kOracleUbSymmetrizer};
  return names;
}

}  // namespace

ExtReport evaluate_query(const ExtQuery& q, const std::vector<std::string>& oracles) {
  const auto start = std::chrono::steady_clock::now();
  ExtReport r;
  r.query = q;
  r.closed = ext1_closed(q);
  for (const auto& name : oracles) r.oracles[name] = run_oracle(name, q);
  r.agree = values_agree(r);
  r.timing = std::chrono::steady_clock::now() - start;
  return r;
}

ExtReport evaluate_query(const ExtQuery& q) { return evaluate_query(q, table_oracles()); }

namespace {

std::vector<ExtQuery> all_queries(int max_size) {
  if (max_size < 0) throw ContractViolation("max_size must be non-negative");
  const auto parts = partitions_up_to(max_size);
  std::vector<ExtQuery> out;
  out.reserve(parts.size() * parts.size());
  for (const auto& lambda : parts)
    for (const auto& mu : parts) out.push_back({lambda, mu});
  return out;
}

void sort_reports(std::vector<ExtReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const ExtReport& a, const ExtReport& b) { return a.query < b.query; });
}

}  // namespace

std::vector<ExtReport> verify_range(int max_size, int jobs) {
  const auto queries = all_queries(max_size);
  std::vector<ExtReport> reports(queries.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] = evaluate_query(queries[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(extschur_range_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  sort_reports(reports);
  return reports;
}

std::vector<ExtReport> verify_range_serial(int max_size) {
  std::vector<ExtReport> reports;
  for (const auto& q : all_queries(max_size)) reports.push_back(evaluate_query(q));
  sort_reports(reports);
  return reports;
}

}  // namespace extschur

#include <set>

#include <doctest.h>

#include "extschur/ext.hpp"
#include "oracles.hpp"

using namespace extschur;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
ExtQuery Q(std::vector<int> lambda, std::vector<int> mu) { return {P(std::move(lambda)), P(std::move(mu))}; }

// Independent evaluation of the closed formula through character-based LR.
std::uint64_t ext1_by_characters(const ExtQuery& q) {
  const int n = q.lambda.size();
  const int m = q.mu.size();
  if (m == n + 2) return static_cast<std::uint64_t>(oracle::lr_by_characters(q.mu, q.lambda, P({2})));
  if (m != n - 1 || n < 2) return 0;
  std::int64_t total = 0;
  for (const auto& rho : enumerate_partitions(n - 2))
    total += oracle::lr_by_characters(q.lambda, rho, P({1, 1})) *
             oracle::lr_by_characters(q.mu, rho, P({1}));
  return static_cast<std::uint64_t>(total);
}

}  // namespace

TEST_SUITE("ext") {
  TEST_CASE("ext0 examples") {
    CHECK(ext0_closed(Q({2, 1}, {2, 1})) == 1);
    CHECK(ext0_closed(Q({2}, {1, 1})) == 0);
    CHECK(ext0_closed(Q({}, {})) == 1);
    for (const auto& l : partitions_up_to(4))
      for (const auto& m : partitions_up_to(4)) CHECK(ext0_closed({l, m}) == (l == m ? 1u : 0u));
  }

  TEST_CASE("ext1 closed examples") {
    CHECK(ext1_closed(Q({1, 1}, {1})) == 1);
    for (int d = 0; d <= 3; ++d) CHECK(ext1_closed({Partition::row(d), Partition::row(d + 2)}) == 1);
    CHECK(ext1_closed(Q({2}, {1})) == 0);
    CHECK(ext1_closed(Q({2, 1}, {2, 1})) == 0);
  }

  TEST_CASE("ext1 closed against character-based LR") {
    for (const auto& l : partitions_up_to(5))
      for (const auto& m : partitions_up_to(6)) CHECK(ext1_closed({l, m}) == ext1_by_characters({l, m}));
  }

  TEST_CASE("grop branch") {
    CHECK(ext1_grop_closed(Q({1, 1}, {1})) == 1);
    CHECK(ext1_grop_closed(Q({1}, {3})) == 0);
    CHECK(ext1_grop_closed(Q({2, 1}, {2})) == 1);
    for (const auto& l : partitions_up_to(6))
      for (const auto& m : partitions_up_to(6)) {
        if (m.size() == l.size() - 1) CHECK(ext1_grop_closed({l, m}) == ext1_closed({l, m}));
        else CHECK(ext1_grop_closed({l, m}) == 0);
      }
  }

  TEST_CASE("catlie oracle") {
    CHECK(ext1_oracle_catlie(Q({1, 1}, {1})) == 1);
    CHECK(ext1_oracle_catlie(Q({2}, {1})) == 0);
    CHECK(ext1_oracle_catlie(Q({2, 1}, {2})) == 1);
    CHECK_THROWS_AS(ext1_oracle_catlie(Q({2}, {2})), ContractViolation);
    for (int n = 1; n <= 5; ++n)
      for (const auto& l : enumerate_partitions(n))
        for (const auto& m : enumerate_partitions(n - 1))
          CHECK(ext1_oracle_catlie({l, m}) == ext1_closed({l, m}));
  }

  TEST_CASE("ub oracles") {
    CHECK(ext1_oracle_ub_character(Q({1}, {3})) == 1);
    CHECK(ext1_oracle_ub_character(Q({1}, {1, 1, 1})) == 0);
    CHECK(ext1_oracle_ub_character(Q({}, {2})) == 1);
    CHECK(ext1_oracle_ub_symmetrizer(Q({1}, {3})) == 1);
    CHECK(ext1_oracle_ub_symmetrizer(Q({2}, {2, 2})) == lr_coefficient(P({2, 2}), P({2}), P({2})));
    CHECK(ext1_oracle_ub_symmetrizer(Q({1, 1}, {2, 1, 1})) == 1);
    CHECK_THROWS_AS(ext1_oracle_ub_character(Q({1}, {2})), ContractViolation);
    CHECK_THROWS_AS(ext1_oracle_ub_symmetrizer(Q({1}, {2})), ContractViolation);
    CHECK_THROWS_AS(ext1_oracle_ub_symmetrizer(Q({5}, {7})), MethodUnavailable);
    for (int n = 0; n <= 3; ++n)
      for (const auto& l : enumerate_partitions(n))
        for (const auto& m : enumerate_partitions(n + 2)) {
          CHECK(ext1_oracle_ub_character({l, m}) == ext1_closed({l, m}));
          CHECK(ext1_oracle_ub_symmetrizer({l, m}) == ext1_closed({l, m}));
        }
  }

  TEST_CASE("solver oracle") {
    for (int d = 0; d <= 3; ++d)
      for (int t = 0; t <= 6; ++t) {
        const ExtQuery q{Partition::row(d), Partition::row(t)};
        CHECK(ext1_oracle_solver(q) == ext1_closed(q));
      }
    for (int l = 1; l <= 4; ++l)
      CHECK(ext1_oracle_solver({Partition::column(l), Partition::column(l + 2)}) == 0);
    CHECK_THROWS_AS(ext1_oracle_solver(Q({2, 1}, {2})), MethodUnavailable);
    CHECK_THROWS_AS(ext1_oracle_solver(Q({1, 1}, {1})), MethodUnavailable);
  }

  TEST_CASE("bimodule characters") {
    for (int n = 1; n <= 4; ++n) {
      const auto& par = bimodule_character(Bimodule::catlie, n, n - 1);
      const auto ser = bimodule_character_serial(Bimodule::catlie, n, n - 1);
      CHECK(par.trace == ser.trace);
    }
    for (int n = 0; n <= 3; ++n) {
      const auto& par = bimodule_character(Bimodule::upward_brauer, n, n + 2);
      CHECK(par.trace == bimodule_character_serial(Bimodule::upward_brauer, n, n + 2).trace);
      // Trace at the identity pair is the dimension.
      CHECK(par.trace.back().back() == Rational(static_cast<long>(factorial(n + 2) / 2)));
    }
  }

  TEST_CASE("evaluate_query") {
    const auto r = evaluate_query(Q({1, 1}, {1}));
    CHECK(r.closed == 1);
    CHECK(r.oracles.at(kOracleCatLie) == std::optional<std::uint64_t>(1));
    CHECK_FALSE(r.oracles.at(kOracleUbCharacter).has_value());
    CHECK(r.agree);
    CHECK(r.oracles.count(kOracleSolver) == 0);

    const auto s = evaluate_query(Q({2}, {4}), {kOracleUbCharacter, kOracleSolver});
    CHECK(s.oracles.size() == 2);
    CHECK(s.oracles.at(kOracleSolver) == std::optional<std::uint64_t>(1));
    CHECK(s.agree);
    CHECK_THROWS_AS(evaluate_query(Q({1}, {1}), {"bogus"}), std::invalid_argument);

    ExtReport bad = r;
    bad.oracles[kOracleCatLie] = 0;
    CHECK_FALSE(values_agree(bad));
  }

  TEST_CASE("verify_range") {
    const auto zero = verify_range(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].query == Q({}, {}));
    CHECK(zero[0].closed == 0);

    const auto two = verify_range(2);
    CHECK(two.size() == 16);
    for (const auto& r : two) CHECK(r.agree);

    const auto four = verify_range(4, 2);
    CHECK(std::is_sorted(four.begin(), four.end(),
                         [](const ExtReport& a, const ExtReport& b) { return a.query < b.query; }));
    const auto serial = verify_range_serial(4);
    REQUIRE(four.size() == serial.size());
    for (std::size_t i = 0; i < four.size(); ++i) {
      CHECK(four[i].agree);
      CHECK(four[i].query == serial[i].query);
      CHECK(four[i].closed == serial[i].closed);
      CHECK(four[i].oracles == serial[i].oracles);
      const auto& q = four[i].query;
      if (q.lambda.is_row() && q.mu.is_row() && q.mu.size() == q.lambda.size() + 2)
        CHECK(four[i].closed == 1);
    }
  }

  TEST_CASE("vanishing branch") {
    for (const auto& l : partitions_up_to(4))
      for (const auto& m : partitions_up_to(4)) {
        if (m.size() == l.size() - 1 || m.size() == l.size() + 2) continue;
        const auto r = evaluate_query({l, m}, oracle_names());
        CHECK(r.closed == 0);
        for (const auto& [name, v] : r.oracles)
          if (v) CHECK(*v == 0);
      }
  }

  TEST_CASE("exterior column and symmetric row") {
    // At d' = 0 the listed 1^1 would need a partition of -1; the value is 0.
    CHECK(ext1_closed({P({1}), P({})}) == 0);
    CHECK(ext1_oracle_catlie({P({1}), P({})}) == 0);
    for (int dp = 1; dp <= 4; ++dp) {
      std::set<Partition> expected;
      auto add = [&](std::vector<int> parts) {
        for (int p : parts) if (p <= 0) return;
        expected.insert(P(std::move(parts)));
      };
      if (dp >= 3) {
        std::vector<int> v{2, 2};
        v.insert(v.end(), static_cast<std::size_t>(dp - 3), 1);
        add(v);
      }
      if (dp >= 2) {
        std::vector<int> v{2};
        v.insert(v.end(), static_cast<std::size_t>(dp - 1), 1);
        add(v);
      }
      add(std::vector<int>(static_cast<std::size_t>(dp + 1), 1));
      std::set<Partition> found;
      for (const auto& l : partitions_up_to(6)) {
        const auto v = ext1_closed({l, Partition::column(dp)});
        CHECK(v <= 1);
        if (v) found.insert(l);
      }
      CHECK(found == expected);
    }
    for (int d = 0; d <= 4; ++d)
      for (int t = 0; t <= 8; ++t)
        CHECK(ext1_closed({Partition::row(d), Partition::row(t)}) == (t == d + 2 ? 1u : 0u));
  }
}

#include <random>

#include <doctest.h>

#include "extschur/symgroup.hpp"
#include "oracles.hpp"

using namespace extschur;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

GroupAlgebraElement element(int n, std::initializer_list<std::pair<Permutation, long>> terms) {
  GroupAlgebraElement x(n);
  for (const auto& [p, c] : terms) x.add_term(p, c);
  return x;
}

std::uint64_t stabilizer_size(const Partition& p) {
  std::uint64_t s = 1;
  for (int part : p.parts()) s *= factorial(part);
  return s;
}

}  // namespace

TEST_SUITE("symgroup") {
  TEST_CASE("permutation basics") {
    const auto t12 = Permutation::from_cycles(3, {{1, 2}});
    const auto t13 = Permutation::from_cycles(3, {{1, 3}});
    CHECK(t12 == Permutation::from_images({2, 1, 3}));
    // Right-to-left composition: (12)(13) = (132).
    CHECK(t12 * t13 == Permutation::from_cycles(3, {{1, 3, 2}}));
    CHECK(t12.sign() == -1);
    CHECK((t12 * t13).sign() == 1);
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation::from_cycles(4, {{1, 2, 3, 4}}).cycle_type() == P({4}));
    CHECK(Permutation::class_representative(P({2, 1})).cycle_type() == P({2, 1}));
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), ContractViolation);

    const auto all = all_permutations(4);
    CHECK(all.size() == 24);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(permutation_rank(all[i]) == i);
      CHECK((all[i] * all[i].inverse()).is_identity());
      const CycleType type = all[i].cycle_type();
      CHECK(all[i].sign() == ((type.size() - type.length()) % 2 == 0 ? 1 : -1));
    }
  }

  TEST_CASE("group algebra multiplication") {
    const auto e = Permutation::identity(2);
    const auto s = Permutation::from_images({2, 1});
    const auto a = element(2, {{e, 3}, {s, -1}});
    CHECK(multiply(GroupAlgebraElement::basis(e), a) == a);
    CHECK(multiply(element(2, {{e, 1}, {s, 1}}), element(2, {{e, 1}, {s, -1}})).is_zero());
    CHECK_THROWS_AS(multiply(a, GroupAlgebraElement(3)), ContractViolation);

    // Associativity on random elements of K S_3.
    std::mt19937 rng(5);
    const auto perms = all_permutations(3);
    auto random_element = [&] {
      GroupAlgebraElement x(3);
      for (const auto& p : perms) x.add_term(p, static_cast<long>(rng() % 5) - 2);
      return x;
    };
    for (int i = 0; i < 10; ++i) {
      const auto x = random_element(), y = random_element(), z = random_element();
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));
    }
  }

  TEST_CASE("young symmetrizer examples") {
    const auto e2 = Permutation::identity(2);
    const auto s = Permutation::from_images({2, 1});
    CHECK(young_symmetrizer(P({2})).element == element(2, {{e2, 1}, {s, 1}}));
    CHECK(young_symmetrizer(P({1, 1})).element == element(2, {{e2, 1}, {s, -1}}));

    const auto e3 = Permutation::identity(3);
    const auto expected = element(3, {{e3, 1},
                                      {Permutation::from_cycles(3, {{1, 2}}), 1},
                                      {Permutation::from_cycles(3, {{1, 3}}), -1},
                                      {Permutation::from_cycles(3, {{1, 3, 2}}), -1}});
    const auto c21 = young_symmetrizer(P({2, 1})).element;
    CHECK(c21 == expected);
    CHECK(multiply(c21, c21) == Rational(3) * c21);
  }

  TEST_CASE("symmetrizer invariants up to size 5") {
    for (int n = 0; n <= 5; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto c = young_symmetrizer(lambda).element;
        // Row and column stabilizers meet trivially, so no cancellation.
        CHECK(c.terms().size() == stabilizer_size(lambda) * stabilizer_size(lambda.conjugate()));
        const Rational constant(static_cast<long>(factorial(n) / hook_dimension(lambda)));
        CHECK(multiply(c, c) == constant * c);
        if (n <= 5) CHECK(left_ideal_dim(c) == hook_dimension(lambda));
      }
  }

  TEST_CASE("left ideal dimension examples") {
    CHECK(left_ideal_dim(young_symmetrizer(P({2, 1})).element) == 2);
    CHECK(left_ideal_dim(GroupAlgebraElement::basis(Permutation::identity(4))) == 24);
    GroupAlgebraElement total(4);
    for (const auto& p : all_permutations(4)) total.add_term(p, 1);
    CHECK(left_ideal_dim(total) == 1);
  }

  TEST_CASE("right ideal with an embedded symmetrizer") {
    auto span_rank = [](const std::vector<GroupAlgebraElement>& xs) {
      SparseEchelonBasis b;
      for (const auto& x : xs) b.insert(x.coordinates());
      return b.rank();
    };
    const auto one = right_ideal_with_embedded_symmetrizer(P({1}), 3);
    CHECK(one.size() == 6);
    CHECK(span_rank(one) == 3);
    CHECK(span_rank(right_ideal_with_embedded_symmetrizer(P({}), 2)) == 1);
    CHECK(span_rank(right_ideal_with_embedded_symmetrizer(P({2}), 4)) == 6);
    CHECK_THROWS_AS(right_ideal_with_embedded_symmetrizer(P({2}), 3), ContractViolation);

    // Induced dimension: binomial(n+2, 2) * dim S_lambda.
    for (int n = 0; n <= 3; ++n)
      for (const auto& lambda : enumerate_partitions(n))
        CHECK(span_rank(right_ideal_with_embedded_symmetrizer(lambda, n + 2)) ==
              binomial(n + 2, 2) * hook_dimension(lambda));
  }

  TEST_CASE("symmetrizer multiplicity examples") {
    const auto span = right_ideal_with_embedded_symmetrizer(P({1}), 3);
    CHECK(symmetrizer_multiplicity(P({3}), span) == 1);
    CHECK(symmetrizer_multiplicity(P({1, 1, 1}), span) == 0);
    CHECK(symmetrizer_multiplicity(P({2, 1}), span) == 1);
    CHECK_THROWS_AS(symmetrizer_multiplicity(P({2}), span), ContractViolation);
  }

  TEST_CASE("symmetrizer multiplicity equals the Pieri coefficient") {
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto span = right_ideal_with_embedded_symmetrizer(lambda, n + 2);
        for (const auto& mu : enumerate_partitions(n + 2))
          CHECK(symmetrizer_multiplicity(mu, span) == lr_coefficient(mu, lambda, P({2})));
      }
  }

  TEST_CASE("regular representation decomposition") {
    for (int n = 0; n <= 4; ++n) {
      std::vector<GroupAlgebraElement> regular;
      for (const auto& p : all_permutations(n)) regular.push_back(GroupAlgebraElement::basis(p));
      std::uint64_t total = 0;
      for (const auto& mu : enumerate_partitions(n)) {
        const auto mult = symmetrizer_multiplicity(mu, regular);
        CHECK(mult == hook_dimension(mu));
        total += mult * hook_dimension(mu);
      }
      CHECK(total == factorial(n));
    }
  }
}

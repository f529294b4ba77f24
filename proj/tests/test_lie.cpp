#include <random>

#include <doctest.h>

#include "extschur/lie.hpp"
#include "oracles.hpp"

using namespace extschur;

namespace {

BracketTree relabel(const BracketTree& t, const std::vector<int>& to) {
  if (t.is_leaf()) return BracketTree::leaf(to[static_cast<std::size_t>(t.label())]);
  return BracketTree::bracket(relabel(t.left(), to), relabel(t.right(), to));
}

// Full matrix of v -> sigma . v . tau on catLie(n, m), built from the
// explicit basis by rewriting every relabelled tree.
RationalMatrix action_matrix(int n, int m, const Permutation& sigma, const Permutation& tau) {
  const auto basis = catlie_basis(n, m);
  std::map<CatLieBasisElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  RationalMatrix out(basis.size(), basis.size());

  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& b = basis[col];
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      g[static_cast<std::size_t>(tau(j))] = sigma(b.fiber_assignment[static_cast<std::size_t>(j)]);
    auto fibre = [&](const std::vector<int>& f, int slot) {
      std::vector<int> xs;
      for (int j = 0; j < n; ++j)
        if (f[static_cast<std::size_t>(j)] == slot) xs.push_back(j);
      return xs;
    };
    // Coefficient vector per target slot.
    std::vector<RationalVector> slot_vectors(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto src = fibre(b.fiber_assignment, i);
      const auto dst = fibre(g, sigma(i));
      const auto tree = lie_basis(static_cast<int>(src.size()))[static_cast<std::size_t>(
          b.slot_basis[static_cast<std::size_t>(i)])];
      std::vector<int> to(src.size() + 1);
      for (std::size_t p = 0; p < src.size(); ++p)
        to[p + 1] = static_cast<int>(std::find(dst.begin(), dst.end(), tau(src[p])) - dst.begin()) + 1;
      slot_vectors[static_cast<std::size_t>(sigma(i))] = rewrite_to_basis(relabel(tree, to));
    }
    // Expand the tensor product of the slot vectors.
    std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, Rational(1)}};
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [idx, c] : partial)
        for (std::size_t k = 0; k < slot_vectors[static_cast<std::size_t>(i)].size(); ++k) {
          const Rational& v = slot_vectors[static_cast<std::size_t>(i)][k];
          if (sgn(v) == 0) continue;
          auto grown = idx;
          grown.push_back(static_cast<int>(k));
          next.emplace_back(grown, c * v);
        }
      partial = std::move(next);
    }
    for (const auto& [idx, c] : partial) out(index.at({g, idx}), col) += c;
  }
  return out;
}

Rational trace(const RationalMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST_SUITE("lie") {
  TEST_CASE("bracket trees") {
    const auto t = BracketTree::parse("[[1,2],3]");
    CHECK(t.str() == "[[1,2],3]");
    CHECK(t.labels() == std::vector<int>{1, 2, 3});
    CHECK(BracketTree::left_normed({1, 3, 2}).str() == "[[1,3],2]");
    CHECK_THROWS(BracketTree::parse("[1,2"));
    CHECK_THROWS(BracketTree::parse("[1 2]"));
  }

  TEST_CASE("expand_bracket examples") {
    CHECK(expand_bracket(BracketTree::parse("[1,2]")) ==
          MultilinearPoly{{{1, 2}, 1}, {{2, 1}, -1}});
    CHECK(expand_bracket(BracketTree::parse("[[1,2],3]")) ==
          MultilinearPoly{{{1, 2, 3}, 1}, {{2, 1, 3}, -1}, {{3, 1, 2}, -1}, {{3, 2, 1}, 1}});
    CHECK_THROWS_AS(expand_bracket(BracketTree::parse("[1,1]")), ContractViolation);
  }

  TEST_CASE("lie_dim") {
    CHECK(lie_dim(1) == 1);
    CHECK(lie_dim(3) == 2);
    CHECK(lie_dim(5) == 24);
    for (int k = 1; k <= 6; ++k) CHECK(lie_dim(k) == factorial(k - 1));
    // Dense rank of the basis expansions gives the same count.
    const auto basis = lie_basis(4);
    RationalMatrix m(basis.size(), 24);
    const auto words = all_permutations(4);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (const auto& [w, c] : expand_bracket(basis[r])) {
        std::vector<int> zero_based;
        for (int x : w) zero_based.push_back(x - 1);
        m(r, permutation_rank(Permutation(zero_based))) = c;
      }
    CHECK(rank(m) == 6);
  }

  TEST_CASE("rewrite_to_basis examples") {
    CHECK(rewrite_to_basis(BracketTree::parse("[[1,2],3]")) == RationalVector{1, 0});
    // [1,[2,3]] = [[1,2],3] - [[1,3],2].
    CHECK(rewrite_to_basis(BracketTree::parse("[1,[2,3]]")) == RationalVector{1, -1});
    CHECK(rewrite_to_basis(BracketTree::parse("[2,1]")) == RationalVector{-1});
    // A non-Lie element is rejected.
    CHECK_THROWS_AS(rewrite_to_basis(MultilinearPoly{{{1, 2}, 1}}, 2), std::logic_error);
  }

  TEST_CASE("rewrite_to_basis respects antisymmetry and Jacobi") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> labels{1, 2, 3, 4};
      std::shuffle(labels.begin(), labels.end(), rng);
      auto leaf = [&](int i) { return BracketTree::leaf(labels[static_cast<std::size_t>(i)]); };
      const auto a = BracketTree::bracket(leaf(0), leaf(1));
      const auto b = leaf(2);
      const auto c = leaf(3);
      auto sum = [](RationalVector x, const RationalVector& y, long s = 1) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * y[i];
        return x;
      };
      const RationalVector zero(6);
      const auto bc = BracketTree::bracket(b, c);
      CHECK(sum(rewrite_to_basis(BracketTree::bracket(a, bc)),
                rewrite_to_basis(BracketTree::bracket(bc, a))) == zero);
      const auto jacobi = sum(sum(rewrite_to_basis(BracketTree::bracket(a, BracketTree::bracket(b, c))),
                                  rewrite_to_basis(BracketTree::bracket(b, BracketTree::bracket(c, a)))),
                              rewrite_to_basis(BracketTree::bracket(c, BracketTree::bracket(a, b))));
      CHECK(jacobi == zero);
    }
  }

  TEST_CASE("catlie dimensions") {
    CHECK(catlie_dim(2, 1) == 1);
    CHECK(catlie_dim(1, 2) == 0);
    CHECK(catlie_dim(3, 2) == 6);
    CHECK(catlie_dim(0, 0) == 1);
    for (int n = 2; n <= 6; ++n) CHECK(catlie_dim(n, n - 1) == binomial(n, 2) * factorial(n - 1));
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= n; ++m) CHECK(catlie_basis(n, m).size() == catlie_dim(n, m));
    // Surjection count by inclusion-exclusion.
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= 4; ++m) {
        std::int64_t count = 0;
        for (int k = 0; k <= m; ++k) {
          std::int64_t power = 1;
          for (int i = 0; i < n; ++i) power *= m - k;
          count += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(binomial(m, k)) * power;
        }
        CHECK(static_cast<std::int64_t>(surjections(n, m).size()) == count);
      }
  }

  TEST_CASE("bimodule_trace examples") {
    CHECK(bimodule_trace(2, 1, Permutation::identity(1), Permutation::identity(2)) == 1);
    CHECK(bimodule_trace(2, 1, Permutation::identity(1), Permutation::from_images({2, 1})) == -1);
    CHECK(bimodule_trace(3, 2, Permutation::identity(2), Permutation::identity(3)) == 6);
    CHECK_THROWS_AS(bimodule_trace(3, 2, Permutation::identity(3), Permutation::identity(3)),
                    ContractViolation);
  }

  TEST_CASE("bimodule_trace matches explicit action matrices") {
    std::mt19937 rng(3);
    for (int n = 2; n <= 4; ++n)
      for (int m = 1; m < n; ++m)
        for (int trial = 0; trial < 6; ++trial) {
          const auto sigma = random_permutation(rng, m);
          const auto tau = random_permutation(rng, n);
          const auto both = action_matrix(n, m, sigma, tau);
          const auto left = action_matrix(n, m, sigma, Permutation::identity(n));
          const auto right = action_matrix(n, m, Permutation::identity(m), tau);
          // The two actions commute and compose to the joint action.
          CHECK(left * right == right * left);
          CHECK(left * right == both);
          CHECK(trace(both) == bimodule_trace(n, m, sigma, tau));
        }
  }

  TEST_CASE("bimodule_trace is a class function") {
    std::mt19937 rng(9);
    for (int n = 2; n <= 5; ++n) {
      const int m = n - 1;
      for (int trial = 0; trial < 8; ++trial) {
        const auto sigma = random_permutation(rng, m);
        const auto tau = random_permutation(rng, n);
        const auto g = random_permutation(rng, m);
        const auto h = random_permutation(rng, n);
        CHECK(bimodule_trace(n, m, sigma, tau) ==
              bimodule_trace(n, m, g * sigma * g.inverse(), h * tau * h.inverse()));
      }
    }
  }
}

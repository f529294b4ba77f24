#include <random>

#include <doctest.h>

#include "extschur/partition.hpp"
#include "extschur/polyfunctor.hpp"
#include "extschur/symgroup.hpp"

using namespace extschur;

namespace {

const FunctorKind Sym(int d) { return {FunctorFamily::symmetric, d}; }
const FunctorKind Wedge(int d) { return {FunctorFamily::exterior, d}; }

HopfGenerator gen(GeneratorKind k, int slot, int arity) { return {k, slot, arity}; }

// A random word of generators starting at `arity`, keeping arities small.
GeneratorWord random_word(std::mt19937& rng, int arity, int length) {
  GeneratorWord w(arity);
  for (int i = 0; i < length; ++i) {
    const int a = w.target();
    std::vector<GeneratorKind> options{GeneratorKind::unit, GeneratorKind::antipode};
    if (a >= 1 && a < 6) options.push_back(GeneratorKind::comult);
    if (a >= 1) options.push_back(GeneratorKind::counit);
    if (a >= 2) {
      options.push_back(GeneratorKind::mult);
      options.push_back(GeneratorKind::swap);
    }
    if (a == 0) options = {GeneratorKind::unit};
    if (a >= 6) options = {GeneratorKind::mult};
    const auto kind = options[rng() % options.size()];
    int last = a;
    if (kind == GeneratorKind::unit) last = a + 1;
    if (kind == GeneratorKind::mult || kind == GeneratorKind::swap) last = a - 1;
    w.then(kind, 1 + static_cast<int>(rng() % static_cast<unsigned>(last)));
  }
  return w;
}

}  // namespace

TEST_SUITE("polyfunctor") {
  TEST_CASE("generator matrices") {
    CHECK(generator_matrix(gen(GeneratorKind::comult, 1, 1)) == RationalMatrix{{1}, {1}});
    CHECK(generator_matrix(gen(GeneratorKind::counit, 1, 1)) == RationalMatrix(0, 1));
    CHECK(generator_matrix(gen(GeneratorKind::antipode, 1, 1)) == RationalMatrix{{-1}});
    CHECK(generator_matrix(gen(GeneratorKind::mult, 1, 2)) == RationalMatrix{{1, 1}});
    CHECK(generator_matrix(gen(GeneratorKind::unit, 2, 2)) ==
          RationalMatrix{{1, 0}, {0, 0}, {0, 1}});
    CHECK(generator_matrix(gen(GeneratorKind::swap, 1, 2)) == RationalMatrix{{0, 1}, {1, 0}});
    CHECK(generator_matrix(gen(GeneratorKind::counit, 2, 3)) ==
          RationalMatrix{{1, 0, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(generator_matrix(gen(GeneratorKind::mult, 2, 2)), ContractViolation);
    CHECK_THROWS_AS(generator_matrix(gen(GeneratorKind::swap, 1, 1)), ContractViolation);
    CHECK_THROWS_AS(generator_matrix(gen(GeneratorKind::unit, 3, 1)), ContractViolation);
  }

  TEST_CASE("word matrices") {
    CHECK(word_matrix(GeneratorWord(3)) == RationalMatrix::identity(3));
    // ad abelianizes to (a, b) -> b.
    const GeneratorWord ad = adjoint_word();
    CHECK(ad.source() == 2);
    CHECK(ad.target() == 1);
    CHECK(word_matrix(ad) == RationalMatrix{{0, 1}});

    for (int slot : {1, 2}) {
      GeneratorWord w(1);
      w.then(GeneratorKind::comult, 1).then(GeneratorKind::counit, slot);
      CHECK(word_matrix(w) == RationalMatrix::identity(1));
    }
    // Antipode axiom: mu (S (x) id) Delta = eta epsilon.
    GeneratorWord anti(1);
    anti.then(GeneratorKind::comult, 1).then(GeneratorKind::antipode, 1).then(GeneratorKind::mult, 1);
    GeneratorWord unit_counit(1);
    unit_counit.then(GeneratorKind::counit, 1).then(GeneratorKind::unit, 1);
    CHECK(word_matrix(anti) == word_matrix(unit_counit));

    GeneratorWord bad(2);
    CHECK_THROWS_AS(bad.then(GeneratorKind::mult, 2), ContractViolation);
    GeneratorWord with_casimir(0);
    with_casimir.then_casimir(1);
    CHECK_THROWS_AS(word_matrix(with_casimir), ContractViolation);
    CHECK(with_casimir.casimir_count() == 1);
    CHECK(with_casimir.target() == 2);
  }

  TEST_CASE("embedded words") {
    const GeneratorWord e = adjoint_word().embedded(1, 2);
    CHECK(e.source() == 5);
    CHECK(e.target() == 4);
    const auto m = word_matrix(e);
    CHECK(m == RationalMatrix{{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  }

  TEST_CASE("functor bases") {
    CHECK(functor_basis(Sym(2), 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(functor_basis(Wedge(2), 3) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(functor_dim(Sym(3), 4) == 20);
    CHECK(functor_dim(Wedge(4), 3) == 0);
    CHECK(functor_dim(Sym(0), 0) == 1);
    CHECK(functor_dim(Sym(2), 0) == 0);
    for (int a = 0; a <= 5; ++a)
      for (int d = 0; d <= 5; ++d) {
        CHECK(functor_dim(Sym(d), a) == schur_dim(Partition::row(d), a));
        CHECK(functor_dim(Wedge(d), a) == schur_dim(Partition::column(d), a));
      }
  }

  TEST_CASE("functor matrix examples") {
    const auto comult = generator_matrix(gen(GeneratorKind::comult, 1, 1));
    const auto sq = functor_matrix(Sym(2), comult);
    CHECK(sq == RationalMatrix{{1}, {2}, {1}});
    CHECK(functor_matrix(Wedge(3), RationalMatrix::identity(4)) == RationalMatrix::identity(4));
    const auto swap = generator_matrix(gen(GeneratorKind::swap, 1, 2));
    CHECK(functor_matrix(Wedge(2), swap) == RationalMatrix{{-1}});
    CHECK(render(Sym(2), apply_linear(Sym(2), comult, {{{2}, Rational(1)}})) ==
          "x1^2 + 2*x1*x2 + x2^2");
  }

  TEST_CASE("functoriality on random words") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const int arity = 1 + static_cast<int>(rng() % 4);
      const auto a = random_word(rng, arity, 3);
      const auto b = random_word(rng, a.target(), 3);
      for (const auto& kind : {Sym(2), Sym(3), Wedge(2)}) {
        const auto ma = word_matrix(a);
        const auto mb = word_matrix(b);
        CHECK(functor_matrix(kind, mb * ma) == functor_matrix(kind, mb) * functor_matrix(kind, ma));
      }
      GeneratorWord ab = a;
      ab.then_word(b, 0);
      CHECK(word_matrix(ab) == word_matrix(b) * word_matrix(a));
    }
  }

  TEST_CASE("render and vectors") {
    CHECK(render(Sym(3), canonical_generator(Sym(3))) == "x1*x2*x3");
    CHECK(render(Wedge(2), canonical_generator(Wedge(2))) == "x1 ^ x2");
    CHECK(render(Sym(1), {}) == "0");
    CHECK(render(Sym(2), {{{2, 0}, Rational(-3)}, {{0, 2}, make_rational(1, 2)}}) ==
          "-3*x1^2 + 1/2*x2^2");
    const FunctorElement x{{{1, 1}, Rational(5)}};
    CHECK(from_vector(Sym(2), 2, to_vector(Sym(2), 2, x)) == x);
  }

  TEST_CASE("Casimir constraint kernels for symmetric powers") {
    for (int d = 0; d <= 4; ++d)
      for (int t = 0; t <= 7; ++t) {
        const auto report = solve_casimir_constraints(Sym(d), Sym(t));
        CHECK(report.arity == d + 2);
        CHECK(report.kernel.size() == (t == d + 2 ? 1u : 0u));
        if (t == d + 2) {
          // Spanned by x1...x_(d+2), which every permutation of variables fixes.
          const auto& v = report.kernel.front();
          REQUIRE(v.size() == 1);
          CHECK(v.begin()->first == std::vector<int>(static_cast<std::size_t>(d + 2), 1));
          for (const auto& p : all_permutations(d + 2)) {
            RationalMatrix perm(static_cast<std::size_t>(d + 2), static_cast<std::size_t>(d + 2));
            for (int j = 0; j < d + 2; ++j) perm(static_cast<std::size_t>(p(j)), static_cast<std::size_t>(j)) = 1;
            CHECK(apply_linear(Sym(t), perm, v) == v);
          }
        }
      }
    // The dense matrix gives the same kernel dimension.
    CHECK(kernel_basis(casimir_constraint_matrix(Sym(2), Sym(4))).size() == 1);
    CHECK(kernel_basis(casimir_constraint_matrix(Sym(2), Sym(3))).empty());
  }

  TEST_CASE("Casimir constraint kernels for exterior powers") {
    for (int l = 0; l <= 4; ++l) {
      CHECK(solve_casimir_constraints(Wedge(l), Wedge(l + 2)).kernel.empty());
      CHECK(kernel_basis(casimir_constraint_matrix(Wedge(l), Wedge(l + 2))).empty());
    }
    CHECK(solve_casimir_constraints(Wedge(2), Wedge(4)).kernel.empty());
    for (int l = 0; l <= 4; ++l)
      for (int t = 0; t <= 6; ++t)
        if (t != l - 1) CHECK(solve_casimir_constraints(Wedge(l), Wedge(t)).kernel.empty());
  }
}

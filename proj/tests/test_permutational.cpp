#include <random>

#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {
  std::vector<oracle::Map> images(TransformationMonoid const& M) {
    std::vector<oracle::Map> out;
    for (auto const& f : M.elements()) {
      out.push_back(f.image());
    }
    return out;
  }

  // Number of towers the literal search may visit.
  double literal_cost(BinaryAlgebra const& A, std::size_t k, std::size_t words) {
    double const n    = double(A.size());
    double const move = double(A.number_of_ops()) * n;
    double       c    = n * n * move;
    for (std::size_t i = 1; i < k; ++i) {
      c *= move * double(words);
    }
    return c;
  }

  void compare_with_literal(BinaryAlgebra const& A,
                            std::size_t          k,
                            bool                 words,
                            bool                 outer) {
    auto const W = words ? oracle::word_monoid(A)
                         : std::vector<oracle::Map>{UnaryMap::identity(A.size()).image()};
    auto const r = words ? is_k_permutational(A, k, {default_monoid_cap, outer})
                         : is_k_permutational_nowords(A, k);
    auto const o = oracle::first_separating_tower(A, k, W, outer && words);
    REQUIRE(r.holds == !o.has_value());
    if (!o) {
      REQUIRE_FALSE(r.witness.has_value());
      return;
    }
    REQUIRE(r.witness.has_value());
    auto const& w = *r.witness;
    REQUIRE(w.y == o->y);
    REQUIRE(w.z == o->z);
    REQUIRE(w.args == o->args);
    REQUIRE(w.word_indices == o->words);
    REQUIRE(w.value_y == o->vy);
    REQUIRE(w.value_z == o->vz);
    for (std::size_t i = 0; i < k; ++i) {
      REQUIRE(w.spec.levels[i].op == o->ops[i]);
      REQUIRE(w.spec.levels[i].word.image() == W[o->words[i]]);
    }
    REQUIRE(omega_eval(A, w.spec, w.y, w.args) == w.value_y);
    REQUIRE(omega_eval(A, w.spec, w.z, w.args) == w.value_z);
  }
}  // namespace

TEST_CASE("word monoid matches breadth-first closure", "[permutational]") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    auto const A = oracle::random_algebra(1 + trial % 6, rng);
    auto const M = monoid_closure(sigma_generators(A), A.size());
    REQUIRE(images(M) == oracle::word_monoid(A));
    REQUIRE(M.elements().front().is_identity());
    for (std::size_t i = 0; i < M.size(); ++i) {
      REQUIRE(M.index_of(M.elements()[i]) == std::optional<std::size_t>{i});
      for (auto const& g : M.generators()) {
        REQUIRE(M.contains(g.after(M.elements()[i])));
      }
    }
  }
}

TEST_CASE("monoid cap is enforced", "[permutational]") {
  auto const A = as_algebra(clamped_successor(4));
  auto const M = monoid_closure(sigma_generators(A), A.size());
  CHECK(M.size() == 6);
  CHECK_THROWS_AS(monoid_closure(sigma_generators(A), A.size(), 5), CapExceeded);
  CHECK_NOTHROW(monoid_closure(sigma_generators(A), A.size(), 6));
  CHECK_THROWS_AS(is_k_permutational(A, 2, {3, false}), CapExceeded);
  CHECK_THROWS_AS(monoid_closure({UnaryMap::identity(3)}, 4), InvalidInput);
}

TEST_CASE("tower evaluation", "[permutational]") {
  auto const A = as_algebra(five_point_degenerate());
  TowerSpec  spec;
  spec.levels.push_back({UnaryMap::identity(5), sigma_op});
  spec.levels.push_back({UnaryMap::constant(5, 3), tau_op});
  // sigma_a(b) = e, then constant
  CHECK(omega_eval(A, spec, 0, {1, 2}) == 3);
  spec.levels.pop_back();
  CHECK(omega_eval(A, spec, 0, {1}) == 4);
  CHECK(omega_eval(A, spec, 1, {1}) == 0);
  CHECK_THROWS_AS(omega_eval(A, spec, 0, {1, 2}), InvalidInput);
  CHECK(omega_eval(A, TowerSpec{}, 3, {}) == 3);
}

TEST_CASE("pair propagation agrees with literal tower enumeration",
          "[permutational][property]") {
  std::mt19937_64 rng(77);
  std::size_t     compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t const n = 2 + trial % 3;
    auto const        A = oracle::random_algebra(n, rng);
    auto const        M = oracle::word_monoid(A).size();
    for (std::size_t k = 0; k <= 3; ++k) {
      compare_with_literal(A, k, false, false);
      if (literal_cost(A, k, M) < 2e5) {
        compare_with_literal(A, k, true, false);
        compare_with_literal(A, k, true, true);
        ++compared;
      }
    }
  }
  CHECK(compared > 800);
}

TEST_CASE("literal comparison on small solutions", "[permutational]") {
  std::size_t i = 0;
  for (auto const& S : enumerate_solutions(3)) {
    if (i++ % 7 != 0) {
      continue;
    }
    auto const A = as_algebra(S);
    for (std::size_t k = 0; k <= 2; ++k) {
      compare_with_literal(A, k, true, false);
      compare_with_literal(A, k, false, false);
    }
  }
}

TEST_CASE("outer word quantification never changes the answer",
          "[permutational][property]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto const A = oracle::random_algebra(2 + trial % 5, rng);
    for (std::size_t k = 0; k <= 3; ++k) {
      REQUIRE(is_k_permutational(A, k).holds
              == is_k_permutational(A, k, {default_monoid_cap, true}).holds);
    }
  }
}

TEST_CASE("k-permutational iff level at most k on small solutions",
          "[permutational]") {
  std::vector<Solution> corpus;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto all = enumerate_solutions(n);
    corpus.insert(corpus.end(), all.begin(), all.end());
  }
  auto samples = sample_solutions(4, 100, 19);
  REQUIRE(samples.size() == 100);
  corpus.insert(corpus.end(), samples.begin(), samples.end());
  for (auto const& S : corpus) {
    auto const A = as_algebra(S);
    auto const m = oracle::mpl(A);
    for (std::size_t k = 0; k <= 3; ++k) {
      REQUIRE(is_k_permutational(A, k).holds == (m && *m <= k));
    }
    REQUIRE(mpl2_equations_hold(S) == (m && *m <= 2));
  }
}

TEST_CASE("level-two equations need a solution", "[permutational]") {
  Solution bad(2, {1, 1, 0, 0}, {0, 1, 0, 1});
  REQUIRE_FALSE(check_braid_direct(bad));
  CHECK_THROWS_AS(mpl2_equations_hold(bad), NotASolution);
}

TEST_CASE("five-point example is 2- but not 1-permutational",
          "[permutational][example]") {
  auto const A = as_algebra(five_point_degenerate());
  CHECK_FALSE(is_k_permutational(A, 1).holds);
  CHECK(is_k_permutational(A, 2).holds);
  CHECK(mpl2_equations_hold(five_point_degenerate()));
}

TEST_CASE("clamped successor: words are needed", "[permutational][example]") {
  for (std::size_t n = 3; n <= 7; ++n) {
    auto const A = as_algebra(clamped_successor(n));
    // Without words the n-level towers are constant.
    CHECK(is_k_permutational_nowords(A, n).holds);
    CHECK_FALSE(is_k_permutational_nowords(A, n - 1).holds);

    auto const r = is_k_permutational(A, n);
    REQUIRE_FALSE(r.holds);
    CHECK(r.monoid_size == n + 2);
    auto const& w = *r.witness;
    CHECK(w.y == 0);
    CHECK(w.z == 1);
    CHECK(w.value_y == 2);
    CHECK(w.value_z == 3);
    // One non-identity word, on the second-to-last level.
    for (std::size_t i = 0; i < n; ++i) {
      CHECK((w.word_indices[i] != 0) == (i + 2 == n));
    }
    CHECK(omega_eval(A, w.spec, w.y, w.args) == w.value_y);
    CHECK(omega_eval(A, w.spec, w.z, w.args) == w.value_z);

    auto const r1 = is_k_permutational(A, n - 1);
    REQUIRE_FALSE(r1.holds);
    CHECK(r1.witness->value_y == n - 1);
    CHECK(r1.witness->value_z == n);
    for (auto idx : r1.witness->word_indices) {
      CHECK(idx == 0);
    }
  }
}

TEST_CASE("height zero", "[permutational]") {
  BinaryAlgebra one(1, {OpTable("f", CurrySide::left, 1, {0})});
  CHECK(is_k_permutational(one, 0).holds);
  auto const r = is_k_permutational(as_algebra(projection_solution(2)), 0);
  CHECK_FALSE(r.holds);
  CHECK(r.witness->args.empty());
  CHECK(is_k_permutational(as_algebra(projection_solution(2)), 1).holds);
}

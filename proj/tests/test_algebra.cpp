#include <random>

#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {
  BinaryAlgebra relabel(BinaryAlgebra const& A, std::vector<element_type> const& p) {
    auto const n = A.size();
    std::vector<OpTable> ops;
    for (auto const& op : A.ops()) {
      std::vector<element_type> t(n * n);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          t[p[x] * n + p[y]] = p[op(x, y)];
        }
      }
      ops.emplace_back(op.name(), op.curry_side(), n, t);
    }
    return BinaryAlgebra(n, ops);
  }
}  // namespace

TEST_CASE("unary maps compose right to left", "[algebra]") {
  UnaryMap f({1, 2, 0});
  UnaryMap g({0, 0, 2});
  CHECK(f.after(g).image() == std::vector<element_type>{1, 1, 0});
  CHECK(g.after(f).image() == std::vector<element_type>{0, 2, 0});
  CHECK(UnaryMap::identity(3).is_identity());
  CHECK(f.is_bijection());
  CHECK_FALSE(g.is_bijection());
  CHECK(UnaryMap::constant(4, 2).image() == std::vector<element_type>(4, 2));
}

TEST_CASE("curried maps follow the curry side", "[algebra]") {
  // f(x, y) = table[x][y]
  std::vector<element_type> t{0, 1, 2, 2, 2, 2, 1, 0, 1};
  OpTable left("f", CurrySide::left, 3, t);
  OpTable right("f", CurrySide::right, 3, t);
  CHECK(left.curried(1).image() == std::vector<element_type>{2, 2, 2});
  CHECK(right.curried(1).image() == std::vector<element_type>{1, 2, 0});
  CHECK(left.curried_at(2, 0) == 1);
  CHECK(right.curried_at(2, 0) == 2);
}

TEST_CASE("malformed tables are rejected", "[algebra]") {
  CHECK_THROWS_AS(OpTable("f", CurrySide::left, 2, {0, 1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(OpTable("f", CurrySide::left, 2, {0, 1, 1}), InvalidInput);
  OpTable f("f", CurrySide::left, 2, {0, 1, 1, 0});
  OpTable g("f", CurrySide::right, 2, {0, 0, 0, 0});
  CHECK_THROWS_AS(BinaryAlgebra(2, {f, g}), InvalidInput);
  CHECK_THROWS_AS(BinaryAlgebra(3, {f}), InvalidInput);
  CHECK_THROWS_AS(BinaryAlgebra(0, {}), InvalidInput);
}

TEST_CASE("partitions are canonical", "[algebra]") {
  auto P = Partition::from_labels(std::vector<element_type>{7, 3, 7, 3, 9});
  auto Q = Partition::from_classes(5, {{4}, {1, 3}, {0, 2}});
  CHECK(P == Q);
  CHECK(P.number_of_classes() == 3);
  CHECK(P.classes()
        == std::vector<std::vector<element_type>>{{0, 2}, {1, 3}, {4}});
  CHECK(Partition::identity(5).refines(P));
  CHECK(P.refines(Partition::full(5)));
  CHECK_FALSE(P.refines(Partition::identity(5)));
  auto R = Partition::from_classes(5, {{0, 1}, {2}, {3}, {4}});
  CHECK(P.join(R).classes()
        == std::vector<std::vector<element_type>>{{0, 1, 2, 3}, {4}});
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Partition::from_classes(3, {{0, 1}, {1, 2}}), InvalidInput);
}

TEST_CASE("set partitions are counted by the Bell numbers", "[algebra]") {
  // Bell numbers from the triangle recurrence.
  std::vector<std::size_t> bell{1};
  std::vector<std::size_t> row{1};
  for (int i = 0; i < 7; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (auto v : row) {
      next.push_back(next.back() + v);
    }
    row = next;
    bell.push_back(row.front());
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t count = 0;
    std::set<std::vector<element_type>> seen;
    for_each_set_partition(n, [&](auto const& rgs) {
      ++count;
      seen.insert(rgs);
    });
    CHECK(count == bell[n]);
    CHECK(seen.size() == count);
  }
}

TEST_CASE("congruences and quotients agree with brute force", "[algebra]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t const n = 2 + trial % 4;
    auto const        A = oracle::random_algebra(n, rng);
    oracle::all_partitions(n, [&](oracle::Labels const& L) {
      auto const P = Partition::from_labels(L);
      REQUIRE(is_congruence(A, P) == oracle::congruence(A, L));
      if (oracle::congruence(A, L)) {
        auto const Q = quotient(A, P);
        auto const R = oracle::quotient(A, L);
        for (std::size_t o = 0; o < A.number_of_ops(); ++o) {
          REQUIRE(Q.op(o).table() == R.op(o).table());
        }
      } else {
        REQUIRE_THROWS_AS(quotient(A, P), NotACongruence);
      }
    });
  }
}

TEST_CASE("congruences below a partition", "[algebra]") {
  std::mt19937_64 rng(5);
  auto const      A   = oracle::random_algebra(5, rng);
  auto const      all = all_congruences_below(A, Partition::full(5));
  std::size_t     expected = 0;
  oracle::all_partitions(5, [&](oracle::Labels const& L) {
    expected += oracle::congruence(A, L);
  });
  CHECK(all.size() == expected);
  // Congruences are closed under join, so a maximum exists.
  CHECK(maximum_partition(all).has_value());
  CHECK(maximum_partition(all)->is_full());
  CHECK_THROWS_AS(all_congruences_below(A, Partition::full(5), 4),
                  CarrierTooLarge);
  CHECK_FALSE(maximum_partition({}).has_value());
  CHECK_FALSE(maximum_partition({Partition::from_classes(3, {{0, 1}, {2}}),
                                 Partition::from_classes(3, {{0}, {1, 2}})})
                  .has_value());
}

TEST_CASE("isomorphism survives relabelling", "[algebra][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const         n = 1 + trial % 6;
    auto const                A = oracle::random_algebra(n, rng);
    std::vector<element_type> p(n);
    std::iota(p.begin(), p.end(), element_type(0));
    std::shuffle(p.begin(), p.end(), rng);
    auto const B = relabel(A, p);
    REQUIRE(are_isomorphic(A, B));
    REQUIRE(are_isomorphic(B, A));
  }
}

TEST_CASE("non-isomorphic algebras are told apart", "[algebra]") {
  // Brute force over all 2-element single-operation algebras.
  std::vector<BinaryAlgebra> all;
  for (int code = 0; code < 16; ++code) {
    std::vector<element_type> t(4);
    for (int i = 0; i < 4; ++i) {
      t[i] = element_type(code >> i & 1);
    }
    all.emplace_back(2, std::vector<OpTable>{{"f", CurrySide::left, 2, t}});
  }
  for (auto const& A : all) {
    for (auto const& B : all) {
      bool const direct = A.op(0).table() == B.op(0).table()
                          || A.op(0).table() == relabel(B, {1, 0}).op(0).table();
      REQUIRE(are_isomorphic(A, B) == direct);
    }
  }
}

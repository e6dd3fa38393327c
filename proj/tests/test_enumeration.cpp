#include <fstream>
#include <random>

#include "catch_amalgamated.hpp"

#include "support/oracles.hpp"
#include "ybe/io.hpp"
#include "ybe/ybe.hpp"

using namespace ybe;

namespace {
  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  nlohmann::json counts_fixture() {
    return nlohmann::json::parse(
        oracle::read_file(std::string(YBE_FIXTURES) + "/solution_counts.json"));
  }
}  // namespace

TEST_CASE("solution counts match the unpruned count", "[enumeration]") {
  auto const expected = counts_fixture();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const c = expected[std::to_string(n)].get<std::size_t>();
    CHECK(count_solutions(n) == c);
    CHECK(count_solutions(n, 3) == c);
    CHECK(enumerate_solutions(n).size() == c);
  }
}

TEST_CASE("n = 2 by brute force over all 256 table pairs", "[enumeration]") {
  auto const brute = oracle::all_solutions_brute(2);
  CHECK(brute.size() == 43);
  std::set<std::vector<element_type>> a, b;
  for (auto const& S : brute) {
    a.insert(oracle::key(S));
  }
  for (auto const& S : enumerate_solutions(2)) {
    b.insert(oracle::key(S));
  }
  CHECK(a == b);
}

TEST_CASE("every enumerated pair satisfies the braid relation", "[enumeration]") {
  std::set<std::vector<element_type>> seen;
  for (auto const& S : enumerate_solutions(3)) {
    REQUIRE(oracle::braid(S));
    REQUIRE(seen.insert(oracle::key(S)).second);
  }
}

TEST_CASE("enumeration order does not depend on threads", "[enumeration]") {
  auto const one  = enumerate_solutions(3, {false, 1});
  auto const many = enumerate_solutions(3, {false, 4});
  CHECK(one == many);
  CHECK(enumerate_solutions(3, {true, 1}) == enumerate_solutions(3, {true, 5}));
}

TEST_CASE("isomorphism classes", "[enumeration]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const all   = enumerate_solutions(n);
    auto const reps  = enumerate_solutions(n, {true, 1});
    CHECK(reps.size() == oracle::iso_classes(all));
    // Orbit-stabiliser: class sizes add up to the total.
    std::size_t total = 0;
    for (auto const& R : reps) {
      REQUIRE(is_canonical(R));
      total += factorial(n) / automorphism_count(R);
    }
    CHECK(total == all.size());
    if (n == 2) {
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          REQUIRE_FALSE(are_isomorphic(as_algebra(reps[i]), as_algebra(reps[j])));
        }
      }
    }
  }
}

TEST_CASE("canonical form is a relabelling invariant", "[enumeration][property]") {
  std::mt19937_64 rng(5);
  for (auto const& S : sample_solutions(4, 60, 9)) {
    auto const C = canonical_form(S);
    REQUIRE(canonical_form(C) == C);
    std::vector<element_type> p{0, 1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<element_type> s(16), t(16);
    for (element_type x = 0; x < 4; ++x) {
      for (element_type y = 0; y < 4; ++y) {
        s[p[x] * 4 + p[y]] = p[S.sigma(x, y)];
        t[p[x] * 4 + p[y]] = p[S.tau(x, y)];
      }
    }
    REQUIRE(canonical_form(Solution(4, s, t)) == C);
    REQUIRE(are_isomorphic(as_algebra(S), as_algebra(C)));
  }
}

TEST_CASE("random sampling returns valid solutions", "[enumeration]") {
  for (std::size_t n : {4, 5}) {
    auto const a = sample_solutions(n, 30, 123);
    auto const b = sample_solutions(n, 30, 123);
    CHECK(a.size() == 30);
    CHECK(a == b);
    for (auto const& S : a) {
      REQUIRE(S.size() == n);
      REQUIRE(oracle::braid(S));
    }
  }
  for (auto const& S : sample_random_tables(2, 2000, 4)) {
    REQUIRE(oracle::braid(S));
  }
}

TEST_CASE("census against definitions", "[enumeration]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const all = enumerate_solutions(n);
    std::map<std::string, std::size_t> expected;
    for (auto const& S : all) {
      auto const A = as_algebra(S);
      auto const c = classify(S);
      ++expected["is_solution"];
      ++expected[c.degenerate ? "degenerate" : "nondegenerate"];
      expected["involutive"] += c.involutive;
      auto const L = oracle::max_congruence(A);
      expected["irretractable"] += std::set(L.begin(), L.end()).size() == n;
      expected["sim_not_congruence"] += !oracle::congruence(A, oracle::sim(A));
      auto const m = oracle::mpl(A);
      ++expected[m ? "mpl_equals(" + std::to_string(*m) + ")" : "mpl_undefined"];
    }
    std::erase_if(expected, [](auto const& kv) { return kv.second == 0; });
    auto const r = census(n);
    CHECK(r.solutions_found == all.size());
    CHECK(r.counts == expected);
    CHECK(r.solutions_up_to_iso == oracle::iso_classes(all));
    CHECK(census(n, 4).counts_up_to_iso == r.counts_up_to_iso);
  }
  CHECK(census(2).total_pairs_examined == "256");
  CHECK(census(3).total_pairs_examined == "387420489");
}

TEST_CASE("sim fails to be a congruence first at three elements",
          "[enumeration]") {
  CHECK(census(1).counts.count("sim_not_congruence") == 0);
  CHECK(census(2).counts.count("sim_not_congruence") == 0);
  CHECK(census(3).counts.at("sim_not_congruence") > 0);
}

TEST_CASE("census fixture for two elements", "[enumeration]") {
  auto const listed = io::parse_solution_list(
      oracle::read_file(std::string(YBE_FIXTURES) + "/census_n2.json"));
  std::set<std::vector<element_type>> a, b;
  for (auto const& S : listed) {
    a.insert(oracle::key(S));
  }
  for (auto const& S : enumerate_solutions(2)) {
    b.insert(oracle::key(S));
  }
  CHECK(listed.size() == 43);
  CHECK(a == b);
}

TEST_CASE("exhaustive bound", "[enumeration]") {
  CHECK_THROWS_AS(count_solutions(5), CarrierTooLarge);
  CHECK_THROWS_AS(census(6), CarrierTooLarge);
  CHECK_THROWS_AS(enumerate_solutions(0), InvalidParameter);
  CHECK_THROWS_AS(search(5, SearchPredicate::parse("degenerate")), CarrierTooLarge);
}

TEST_CASE("predicates parse", "[enumeration]") {
  CHECK(SearchPredicate::parse("irretractable").name() == "irretractable");
  CHECK(SearchPredicate::parse("mpl_equals(2)").name() == "mpl_equals(2)");
  CHECK(SearchPredicate::parse("mpl_at_most:3").name() == "mpl_at_most(3)");
  CHECK_THROWS_AS(SearchPredicate::parse("mpl_equals"), InvalidInput);
  CHECK_THROWS_AS(SearchPredicate::parse("degenerate(1)"), InvalidInput);
  CHECK_THROWS_AS(SearchPredicate::parse("mpl_equals(x)"), InvalidInput);
  CHECK_THROWS_AS(SearchPredicate::parse("nonsense"), InvalidInput);
}

TEST_CASE("search", "[enumeration]") {
  auto const p = SearchPredicate::parse("sim_not_congruence");
  CHECK(search(2, p).empty());
  SearchOptions all;
  all.limit       = 100;
  auto const low  = search(2, SearchPredicate::parse("mpl_at_most(1)"), all);
  CHECK(std::find(low.begin(), low.end(), projection_solution(2)) != low.end());
  SearchOptions opts;
  opts.limit       = 4;
  auto const found = search(3, p, opts);
  REQUIRE(found.size() == 4);
  for (auto const& S : found) {
    auto const A = as_algebra(S);
    CHECK_FALSE(oracle::congruence(A, oracle::sim(A)));
  }
  // Seeds come first, also above the exhaustive bound.
  SearchOptions seeded;
  seeded.seeds = {five_point_degenerate(), projection_solution(5)};
  auto const s = search(5, p, seeded);
  REQUIRE(s.size() == 1);
  CHECK(s[0].sigma_table() == five_point_degenerate().sigma_table());

  SearchOptions sampled;
  sampled.samples  = 40;
  sampled.limit    = 100;
  sampled.rng_seed = 3;
  auto const q = search(5, SearchPredicate::parse("degenerate"), sampled);
  CHECK_FALSE(q.empty());
  for (auto const& S : q) {
    CHECK(classify(S).degenerate);
  }
  CHECK(q == search(5, SearchPredicate::parse("degenerate"), sampled));
}

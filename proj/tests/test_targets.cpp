#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "chains/common.hpp"
#include "chains/targets.hpp"

using namespace chains;

namespace {

using I64 = std::int64_t;
using Vec = std::vector<I64>;

bool brute_member(TargetKind k, I64 m) {
  switch (k) {
    case TargetKind::Squares:
      return is_square(m) && m >= 1;
    case TargetKind::Cubes:
      return is_cube(m) && m >= 1;
    case TargetKind::Triangular:
      return is_triangular(m);
    case TargetKind::Pentagonal:
      return is_gen_pentagonal(m);
    case TargetKind::Fibonacci: {
      I64 a = 0, b = 1;
      while (b < m) {
        I64 t = a + b;
        a = b;
        b = t;
      }
      return m >= 1 && b == m;
    }
    case TargetKind::Lucas: {
      if (m == 1) return true;
      I64 a = 1, b = 3;
      while (b < m) {
        I64 t = a + b;
        a = b;
        b = t;
      }
      return m >= 3 && b == m;
    }
    case TargetKind::Primes: {
      if (m < 2) return false;
      for (I64 d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Cubes, TargetKind::Triangular,
        TargetKind::Pentagonal, TargetKind::Fibonacci, TargetKind::Lucas,
        TargetKind::Primes, TargetKind::Recurrence, TargetKind::Explicit}) {
    auto parsed = parse_target_kind(to_string(k));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == k);
  }
  CHECK_FALSE(parse_target_kind("hexagonal").has_value());
}

TEST_CASE("pentagonal starts 1 2 5 7 12 15") {
  TargetSet ts = TargetSet::make(TargetKind::Pentagonal);
  CHECK(ts.values_upto(15) == Vec{1, 2, 5, 7, 12, 15});
}

TEST_CASE("recurrence 4,5 members up to 40") {
  TargetSet ts = TargetSet::recurrence(4, 5);
  CHECK(ts.values_upto(40) == Vec{4, 5, 9, 14, 23, 37});
  CHECK(ts.recurrence_seeds() == std::pair<I64, I64>{4, 5});
}

TEST_CASE("explicit singleton membership") {
  TargetSet ts = TargetSet::explicit_set({3});
  CHECK(ts.contains(3));
  CHECK_FALSE(ts.contains(4));
}

TEST_CASE("explicit list preconditions") {
  CHECK_THROWS(TargetSet::explicit_set({}));
  CHECK_THROWS(TargetSet::explicit_set({5, 3}));
  CHECK_THROWS(TargetSet::explicit_set({3, 3}));
  CHECK_THROWS(TargetSet::explicit_set({0, 3}));
}

TEST_CASE("recurrence seed preconditions") {
  CHECK_THROWS(TargetSet::recurrence(0, 5));
  CHECK_THROWS(TargetSet::recurrence(4, -1));
  CHECK_THROWS(TargetSet::recurrence(4, 4));
}

TEST_CASE("values_upto examples") {
  CHECK(TargetSet::make(TargetKind::Lucas).values_upto(12) ==
        Vec{1, 3, 4, 7, 11});
  CHECK(TargetSet::make(TargetKind::Cubes).values_upto(1000) ==
        Vec{1, 8, 27, 64, 125, 216, 343, 512, 729, 1000});
  CHECK(TargetSet::make(TargetKind::Squares).values_upto(4) == Vec{1, 4});
}

TEST_CASE("contains examples") {
  CHECK(TargetSet::make(TargetKind::Fibonacci).contains(8));
  CHECK_FALSE(TargetSet::make(TargetKind::Squares).contains(24));
  CHECK(TargetSet::make(TargetKind::Triangular).contains(91));
}

TEST_CASE("partners examples") {
  CHECK(TargetSet::make(TargetKind::Fibonacci).partners(1, 11) ==
        std::vector<int>{2, 4, 7});
  CHECK(TargetSet::make(TargetKind::Squares).partners(8, 16) ==
        std::vector<int>{1});
  CHECK(TargetSet::make(TargetKind::Cubes).partners(256, 295) ==
        std::vector<int>{87});
}

TEST_CASE("membership matches direct predicates to 1e6 (sampled stride)") {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Cubes, TargetKind::Triangular,
        TargetKind::Pentagonal, TargetKind::Fibonacci, TargetKind::Lucas,
        TargetKind::Primes}) {
    TargetSet ts = TargetSet::make(k);
    for (I64 m = 1; m <= 20000; ++m)
      REQUIRE(ts.contains(m) == brute_member(k, m));
    for (I64 m = 999000; m <= 1000000; ++m)
      REQUIRE(ts.contains(m) == brute_member(k, m));
  }
}

TEST_CASE("contains consistent with values_upto over 1e6") {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Cubes, TargetKind::Triangular,
        TargetKind::Pentagonal, TargetKind::Fibonacci, TargetKind::Lucas}) {
    TargetSet ts = TargetSet::make(k);
    Vec vals = ts.values_upto(1000000);
    std::set<I64> in(vals.begin(), vals.end());
    REQUIRE(in.size() == vals.size());
    for (std::size_t i = 1; i < vals.size(); ++i)
      REQUIRE(vals[i - 1] < vals[i]);
    for (I64 v : vals) REQUIRE(ts.contains(v));
    // spot-check non-members between consecutive members
    for (std::size_t i = 1; i < vals.size() && i < 60; ++i)
      if (vals[i] - vals[i - 1] > 1)
        REQUIRE_FALSE(ts.contains(vals[i - 1] + 1));
  }
}

TEST_CASE("partners symmetry, n <= 500") {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Cubes, TargetKind::Triangular,
        TargetKind::Pentagonal, TargetKind::Fibonacci, TargetKind::Lucas,
        TargetKind::Primes}) {
    TargetSet ts = TargetSet::make(k);
    const int n = 500;
    std::vector<std::set<int>> adj(n + 1);
    for (int x = 1; x <= n; ++x) {
      auto ps = ts.partners(x, n);
      adj[x] = std::set<int>(ps.begin(), ps.end());
      REQUIRE(adj[x].count(x) == 0);
    }
    for (int x = 1; x <= n; ++x)
      for (int y : adj[x]) REQUIRE(adj[y].count(x) == 1);
  }
}

TEST_CASE("fibonacci and lucas caches satisfy the recurrence") {
  for (TargetKind k : {TargetKind::Fibonacci, TargetKind::Lucas}) {
    Vec v = TargetSet::make(k).values_upto(I64{1} << 60);
    REQUIRE(v.size() > 50);
    for (std::size_t i = 2; i < v.size(); ++i) {
      // the first few members collapse duplicates (1,2,3,... vs 1,3,4)
      if (v[i] > 10) REQUIRE(v[i] == v[i - 1] + v[i - 2]);
    }
  }
}

TEST_CASE("large membership stays exact near 2^62") {
  TargetSet sq = TargetSet::make(TargetKind::Squares);
  I64 r = 2147483647;  // 2^31 - 1
  CHECK(sq.contains(r * r));
  CHECK_FALSE(sq.contains(r * r - 1));
  TargetSet cu = TargetSet::make(TargetKind::Cubes);
  I64 c = 1664510;  // c^3 < 2^62
  CHECK(cu.contains(c * c * c));
  CHECK_FALSE(cu.contains(c * c * c + 1));
}

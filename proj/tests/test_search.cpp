#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "chains/search.hpp"
#include "chains/sumgraph.hpp"

using namespace chains;

namespace {

// Plain permutation enumeration with prefix-validity pruning only; no
// heuristics, so it is an independent ground truth for small n.
void oracle_extend(const SumGraph& g, std::vector<int>& seq,
                   std::vector<bool>& used,
                   std::set<std::vector<int>>& chains,
                   std::set<std::vector<int>>& necklaces) {
  int n = g.n;
  if (static_cast<int>(seq.size()) == n) {
    chains.insert(canonical_chain(seq));
    if (g.targets.contains(seq.front() + seq.back()) && n >= 3)
      necklaces.insert(canonical_necklace(seq));
    return;
  }
  for (int y = 1; y <= n; ++y) {
    if (used[y]) continue;
    if (!seq.empty() && !g.targets.contains(seq.back() + y)) continue;
    used[y] = true;
    seq.push_back(y);
    oracle_extend(g, seq, used, chains, necklaces);
    seq.pop_back();
    used[y] = false;
  }
}

struct OracleResult {
  std::set<std::vector<int>> chains;
  std::set<std::vector<int>> necklaces;
};

OracleResult oracle(const SumGraph& g) {
  OracleResult r;
  std::vector<int> seq;
  std::vector<bool> used(g.n + 1, false);
  oracle_extend(g, seq, used, r.chains, r.necklaces);
  return r;
}

}  // namespace

TEST_CASE("find_chain examples") {
  TargetSet fib = TargetSet::make(TargetKind::Fibonacci);
  CHECK_FALSE(find_chain(build_graph(14, fib)).has_value());

  auto c5 = find_chain(build_graph(5, fib));
  REQUIRE(c5.has_value());
  CHECK(c5->beads == std::vector<int>{4, 1, 2, 3, 5});

  TargetSet sq = TargetSet::make(TargetKind::Squares);
  CHECK_FALSE(find_chain(build_graph(24, sq)).has_value());
}

TEST_CASE("find_necklace examples") {
  TargetSet sq = TargetSet::make(TargetKind::Squares);
  auto n32 = find_necklace(build_graph(32, sq));
  REQUIRE(n32.has_value());
  CHECK(verify_sequence(n32->beads, sq, true).valid);

  TargetSet tri = TargetSet::make(TargetKind::Triangular);
  CHECK_FALSE(find_necklace(build_graph(14, tri)).has_value());

  TargetSet fib = TargetSet::make(TargetKind::Fibonacci);
  CHECK_FALSE(find_necklace(build_graph(13, fib)).has_value());
}

TEST_CASE("degenerate conventions for n = 1 and n = 2") {
  TargetSet fib = TargetSet::make(TargetKind::Fibonacci);
  auto c1 = find_chain(build_graph(1, fib));
  REQUIRE(c1.has_value());
  CHECK(c1->beads == std::vector<int>{1});
  CHECK_FALSE(find_necklace(build_graph(1, fib)).has_value());

  auto c2 = find_chain(build_graph(2, fib));
  REQUIRE(c2.has_value());
  CHECK(c2->beads == std::vector<int>{1, 2});
  CHECK_FALSE(find_necklace(build_graph(2, fib)).has_value());
}

TEST_CASE("enumerate_chains examples") {
  TargetSet fib = TargetSet::make(TargetKind::Fibonacci);
  auto e13 = enumerate_chains(build_graph(13, fib), 100);
  CHECK(e13.chains.size() == 2);
  CHECK_FALSE(e13.truncated);

  auto e21 = enumerate_chains(build_graph(21, fib), 100);
  CHECK(e21.chains.size() == 1);

  TargetSet sq = TargetSet::make(TargetKind::Squares);
  auto e15 = enumerate_chains(build_graph(15, sq), 100);
  REQUIRE(e15.chains.size() == 1);
  CHECK(e15.chains[0].beads ==
        std::vector<int>{8, 1, 15, 10, 6, 3, 13, 12, 4, 5, 11, 14, 2, 7, 9});
}

TEST_CASE("enumeration respects cap and sets the truncation flag") {
  TargetSet pri = TargetSet::make(TargetKind::Primes);
  SumGraph g = build_graph(10, pri);
  auto full = enumerate_chains(g, 100000);
  REQUIRE(full.chains.size() > 2);
  auto cut = enumerate_chains(g, 2);
  CHECK(cut.chains.size() == 2);
  CHECK(cut.truncated);
  for (auto& c : cut.chains)
    CHECK(std::find(full.chains.begin(), full.chains.end(), c) !=
          full.chains.end());
}

TEST_CASE("search matches the permutation oracle for n <= 12") {
  for (TargetKind k :
       {TargetKind::Squares, TargetKind::Triangular, TargetKind::Pentagonal,
        TargetKind::Fibonacci, TargetKind::Lucas, TargetKind::Primes}) {
    TargetSet ts = TargetSet::make(k);
    for (int n = 3; n <= 12; ++n) {
      SumGraph g = build_graph(n, ts);
      OracleResult want = oracle(g);

      auto found = find_chain(g);
      REQUIRE(found.has_value() == !want.chains.empty());
      if (found) REQUIRE(want.chains.count(found->beads) == 1);

      auto listed = enumerate_chains(g, 100000);
      REQUIRE(listed.chains.size() == want.chains.size());
      for (auto& c : listed.chains) REQUIRE(want.chains.count(c.beads) == 1);
      REQUIRE(std::is_sorted(
          listed.chains.begin(), listed.chains.end(),
          [](const Chain& a, const Chain& b) { return a.beads < b.beads; }));

      auto neck = find_necklace(g);
      REQUIRE(neck.has_value() == !want.necklaces.empty());
      if (neck) REQUIRE(want.necklaces.count(neck->beads) == 1);
    }
  }
}

TEST_CASE("canonical forms") {
  CHECK(canonical_chain({5, 3, 2, 1, 4}) == std::vector<int>{4, 1, 2, 3, 5});
  CHECK(canonical_chain({4, 1, 2, 3, 5}) == std::vector<int>{4, 1, 2, 3, 5});
  // rotate to 1, direction toward the smaller neighbor
  CHECK(canonical_necklace({3, 12, 9, 6, 4, 11, 10, 5, 1, 2, 8, 7}) ==
        std::vector<int>{1, 2, 8, 7, 3, 12, 9, 6, 4, 11, 10, 5});
  CHECK(canonical_necklace({1, 5, 10, 11, 4, 6, 9, 12, 3, 7, 8, 2}) ==
        std::vector<int>{1, 2, 8, 7, 3, 12, 9, 6, 4, 11, 10, 5});
  // idempotence
  auto once = canonical_necklace({7, 3, 12, 9, 6, 4, 11, 10, 5, 1, 2, 8});
  CHECK(canonical_necklace(once) == once);
}

TEST_CASE("tiny node budget raises BudgetExceeded, never 'none'") {
  TargetSet sq = TargetSet::make(TargetKind::Squares);
  SumGraph g = build_graph(31, sq);
  CHECK_THROWS_AS(find_chain(g, SearchLimits{3}), BudgetExceeded);
}

TEST_CASE("spectrum parallel equals sequential") {
  TargetSet tri = TargetSet::make(TargetKind::Triangular);
  auto seq = spectrum(tri, 2, 24, SpectrumMode::Both, true, 1);
  auto par = spectrum(tri, 2, 24, SpectrumMode::Both, true, 4);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].n == par[i].n);
    CHECK(seq[i].chain == par[i].chain);
    CHECK(seq[i].necklace == par[i].necklace);
    CHECK(seq[i].chain_count == par[i].chain_count);
  }
}

TEST_CASE("fibonacci chain spectrum to 100") {
  TargetSet fib = TargetSet::make(TargetKind::Fibonacci);
  std::set<int> want{1, 2, 3,  4,  5,  7,  8,  9,  11, 12,
                     13, 20, 21, 33, 34, 54, 55, 88, 89};
  auto rows = spectrum(fib, 1, 100, SpectrumMode::Chain, false, 4);
  for (auto& row : rows) {
    REQUIRE(row.chain != Outcome::BudgetExceeded);
    REQUIRE((row.chain == Outcome::Yes) == (want.count(row.n) == 1));
  }
}

TEST_CASE("forced-move soundness over a spectrum run") {
  for (TargetKind k : {TargetKind::Fibonacci, TargetKind::Lucas,
                       TargetKind::Squares, TargetKind::Triangular}) {
    TargetSet ts = TargetSet::make(k);
    for (int n = 3; n <= 40; ++n) {
      SumGraph g = build_graph(n, ts);
      auto anomalies = degree_anomalies(g);
      if (anomalies.monovalent.size() < 3) continue;
      REQUIRE_FALSE(find_chain(g).has_value());
    }
  }
}

TEST_CASE("every found object verifies") {
  TargetSet pen = TargetSet::make(TargetKind::Pentagonal);
  for (int n = 4; n <= 25; ++n) {
    SumGraph g = build_graph(n, pen);
    if (auto c = find_chain(g)) REQUIRE(verify_sequence(c->beads, pen, false).valid);
    if (auto nk = find_necklace(g))
      REQUIRE(verify_sequence(nk->beads, pen, true).valid);
  }
}

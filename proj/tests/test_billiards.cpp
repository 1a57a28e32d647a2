#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "chains/billiards.hpp"
#include "chains/sumgraph.hpp"

using namespace chains;

namespace {

using I64 = std::int64_t;
using Vec = std::vector<I64>;

std::vector<I64> all_beads(const TableDecomposition& d) {
  std::vector<I64> out;
  for (auto& p : d.paths) out.insert(out.end(), p.begin(), p.end());
  for (auto& c : d.cycles) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

I64 pmod(I64 v, I64 m) { return ((v % m) + m) % m; }

}  // namespace

TEST_CASE("rect_table construction and pockets") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  CHECK(t.perimeter() == 21);
  CHECK(t.pockets() == Vec{2, 17});

  CHECK(rect_table(13, 21, 34, 42).pockets() == Vec{17, 21});

  CHECK_THROWS_AS(rect_table(4, 13, 25, 33), SemiperimeterViolation);
  CHECK_THROWS_AS(rect_table(5, 9, 12, 16), CoverageViolation);
  CHECK_THROWS_AS(rect_table(2, 4, 8, 10), PocketCountViolation);
}

TEST_CASE("validate_fold_system") {
  CHECK(validate_fold_system(rect_table(4, 13, 25, 34).fold_a()).empty());

  FoldSystem bad(10, {{1, 5, 7}, {6, 10, 12}});
  auto violations = validate_fold_system(bad);
  REQUIRE_FALSE(violations.empty());
  CHECK(std::any_of(violations.begin(), violations.end(),
                    [](const FoldViolation& v) { return v.bead == 1; }));

  FoldSystem cubic2(387, {{1, 342, 343}, {343, 386, 729}, {387, 387, 774}});
  CHECK(validate_fold_system(cubic2).empty());
}

TEST_CASE("fold apply is an involution with the stated pockets") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  FoldSystem f = t.fold_a(), g = t.fold_b();
  for (I64 x = 1; x <= 21; ++x) {
    CHECK(f.apply(f.apply(x)) == x);
    CHECK(g.apply(g.apply(x)) == x);
  }
  CHECK(f.pockets() == Vec{2});
  CHECK(g.pockets() == Vec{17});
}

TEST_CASE("decompose reproduces the degenerate 21-table exactly") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  REQUIRE(d.paths.size() == 1);
  REQUIRE(d.cycles.size() == 1);
  CHECK(d.paths[0] == Vec{2, 11, 14, 20, 5, 8, 17});
  CHECK(d.cycles[0] == Vec{1, 3, 10, 15, 19, 6, 7, 18, 16, 9, 4, 21, 13, 12});
  CHECK(d.pockets == Vec{2, 17});

  std::vector<I64> want(21);
  std::iota(want.begin(), want.end(), 1);
  CHECK(all_beads(d) == want);
}

TEST_CASE("decompose: all-odd table splits into four 18-cycles") {
  BilliardTable t = rect_table(9, 49, 81, 121);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  CHECK(d.paths.empty());
  REQUIRE(d.cycles.size() == 4);
  for (auto& c : d.cycles) CHECK(c.size() == 18);
}

TEST_CASE("decompose: coprime table gives one complete path") {
  BilliardTable t = rect_table(13, 21, 34, 42);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  REQUIRE(d.paths.size() == 1);
  CHECK(d.cycles.empty());
  CHECK(d.paths[0].size() == 21);
}

TEST_CASE("lemma_predict") {
  auto l1 = lemma_predict(rect_table(4, 13, 25, 34));
  CHECK_FALSE(l1.complete);
  CHECK(l1.gcd == 3);

  auto l2 = lemma_predict(rect_table(36, 121, 1764, 1849));
  CHECK(l2.complete);
  CHECK(l2.gcd == 1);

  auto l3 = lemma_predict(rect_table(13, 21, 34, 42));
  CHECK(l3.complete);
  CHECK(l3.gcd == 1);

  CHECK_THROWS(lemma_predict(rect_table(9, 49, 81, 121)));
}

TEST_CASE("lemma cross-validation, exhaustive P <= 120") {
  long tables = 0, mismatches = 0;
  for (I64 P = 2; P <= 120; ++P)
    for (I64 A = 1; A <= P; ++A)
      for (I64 B = A + 1; B <= P + 1; ++B) {
        I64 C = A + P, D = B + P;
        if (B >= C) continue;
        int evens = (A % 2 == 0) + (B % 2 == 0) + (C % 2 == 0) + (D % 2 == 0);
        if (evens != 2) continue;
        BilliardTable t = rect_table(A, B, C, D);
        auto pred = lemma_predict(t);
        auto s = decompose_stats(t.fold_a(), t.fold_b());
        bool complete = s.path_lengths.size() == 1 &&
                        s.cycle_lengths.empty() && s.path_lengths[0] == P;
        ++tables;
        if (pred.complete != complete) ++mismatches;
      }
  CHECK(tables > 10000);
  CHECK(mismatches == 0);
}

TEST_CASE("zero-pocket all-odd tables: cycle count is gcd/2, P <= 500") {
  long tables = 0, mismatches = 0;
  for (I64 P = 2; P <= 500; P += 2)
    for (I64 A = 1; A <= P; A += 2)
      for (I64 B = A + 2; B <= P + 1; B += 2) {
        I64 C = A + P, D = B + P;
        if (B >= C) continue;
        BilliardTable t = rect_table(A, B, C, D);
        I64 g = std::gcd(B - A, C - B);
        auto s = decompose_stats(t.fold_a(), t.fold_b());
        ++tables;
        if (!s.path_lengths.empty() ||
            static_cast<I64>(s.cycle_lengths.size()) != g / 2)
          ++mismatches;
      }
  CHECK(tables > 10000);
  CHECK(mismatches == 0);
}

TEST_CASE("alternate bounce points differ by the double-side mod P") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  const I64 P = t.perimeter(), side = t.B - t.A;
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  auto check_two_step = [&](const std::vector<I64>& seq, bool cyclic) {
    std::size_t m = seq.size();
    for (std::size_t i = 0; i + 2 < m + (cyclic ? 2 : 0); ++i) {
      I64 diff = pmod(seq[(i + 2) % m] - seq[i % m], P);
      bool ok = diff == pmod(side, P) || diff == pmod(-side, P);
      REQUIRE(ok);
    }
  };
  for (auto& p : d.paths) check_two_step(p, false);
  for (auto& c : d.cycles) check_two_step(c, true);
}

TEST_CASE("residue coloring") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  auto rc = residue_coloring(t);
  CHECK(rc.modulus == 3);
  REQUIRE(rc.component_residues.size() == 2);
  CHECK(rc.component_residues[0] == Vec{2});  // the pocket path
  CHECK(rc.component_residues[1] == Vec{0, 1});

  auto trivial = residue_coloring(rect_table(13, 21, 34, 42));
  CHECK(trivial.modulus == 1);
  REQUIRE(trivial.component_residues.size() == 1);
  CHECK(trivial.component_residues[0] == Vec{0});

  // all four targets are 1 mod 3, so adjacent beads sum to 1 mod 3
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  for (auto& c : d.cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      CHECK((c[i] + c[(i + 1) % c.size()]) % 3 == 1);
}

TEST_CASE("merge_components") {
  TargetSet sq = TargetSet::make(TargetKind::Squares);
  BilliardTable t = rect_table(9, 49, 81, 121);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  Necklace nk = merge_components(d, sq);
  CHECK(nk.beads.size() == 72);
  CHECK(verify_sequence(nk.beads, sq, true).valid);

  TargetSet tri = TargetSet::make(TargetKind::Triangular);
  TableDecomposition one;
  one.cycles = {{1, 2, 8, 7, 3, 12, 9, 6, 4, 11, 10, 5}};
  Necklace same = merge_components(one, tri);
  CHECK(same.beads ==
        std::vector<int>{1, 2, 8, 7, 3, 12, 9, 6, 4, 11, 10, 5});

  TableDecomposition stuck;
  stuck.cycles = {{1, 2, 3}, {4, 5, 6}};
  CHECK_THROWS_AS(merge_components(stuck, TargetSet::explicit_set({100})),
                  NoSpliceFound);
}

TEST_CASE("decompose_stats agrees with decompose") {
  for (auto corners : {std::array<I64, 4>{4, 13, 25, 34},
                       std::array<I64, 4>{9, 49, 81, 121},
                       std::array<I64, 4>{13, 21, 34, 42},
                       std::array<I64, 4>{36, 121, 1764, 1849}}) {
    BilliardTable t = rect_table(corners[0], corners[1], corners[2], corners[3]);
    auto d = decompose(t.fold_a(), t.fold_b());
    auto s = decompose_stats(t.fold_a(), t.fold_b());
    CHECK(s.n == t.perimeter());
    CHECK(s.pockets == d.pockets);
    REQUIRE(s.path_lengths.size() == d.paths.size());
    for (std::size_t i = 0; i < d.paths.size(); ++i)
      CHECK(s.path_lengths[i] == static_cast<I64>(d.paths[i].size()));
    REQUIRE(s.cycle_lengths.size() == d.cycles.size());
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
      CHECK(s.cycle_lengths[i] == static_cast<I64>(d.cycles[i].size()));
      CHECK(s.cycle_least_beads[i] ==
            *std::min_element(d.cycles[i].begin(), d.cycles[i].end()));
    }
  }
}

TEST_CASE("decompose partition against sum-graph adjacency, small tables") {
  for (auto corners :
       {std::array<I64, 4>{4, 13, 25, 34}, std::array<I64, 4>{13, 21, 34, 42},
        std::array<I64, 4>{9, 49, 81, 121}, std::array<I64, 4>{1, 15, 91, 105}}) {
    BilliardTable t = rect_table(corners[0], corners[1], corners[2], corners[3]);
    TargetSet ts = TargetSet::explicit_set(
        {corners[0], corners[1], corners[2], corners[3]});
    auto d = decompose(t.fold_a(), t.fold_b());
    std::vector<I64> want(t.perimeter());
    std::iota(want.begin(), want.end(), 1);
    REQUIRE(all_beads(d) == want);
    for (auto& p : d.paths) {
      std::vector<int> beads(p.begin(), p.end());
      for (std::size_t i = 0; i + 1 < beads.size(); ++i)
        REQUIRE(ts.contains(beads[i] + beads[i + 1]));
      REQUIRE(std::count(d.pockets.begin(), d.pockets.end(), p.front()) == 1);
      REQUIRE(std::count(d.pockets.begin(), d.pockets.end(), p.back()) == 1);
    }
    for (auto& c : d.cycles)
      for (std::size_t i = 0; i < c.size(); ++i)
        REQUIRE(ts.contains(c[i] + c[(i + 1) % c.size()]));
  }
}

TEST_CASE("render_svg is deterministic and marks strokes") {
  BilliardTable t = rect_table(4, 13, 25, 34);
  auto d = decompose(t.fold_a(), t.fold_b());
  std::string a = render_svg(t, d);
  std::string b = render_svg(t, d);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("path") != std::string::npos);

  BilliardTable fib = rect_table(13, 21, 34, 42);
  auto fd = decompose(fib.fold_a(), fib.fold_b());
  std::string s = render_svg(fib, fd);
  CHECK(s.find("6½") != std::string::npos);
  CHECK(s.find("10½") != std::string::npos);
}

TEST_CASE("fold_pair_from_json") {
  std::string text = R"({"n": 387,
    "f": [[1, 124, 125], [125, 387, 512]],
    "g": [[1, 342, 343], [343, 386, 729], [387, 387, 774]]})";
  auto [f, g] = fold_pair_from_json(text);
  CHECK(f.n() == 387);
  CHECK(validate_fold_system(f).empty());
  CHECK(validate_fold_system(g).empty());
  auto d = decompose(f, g);
  REQUIRE(d.paths.size() == 1);
  CHECK(d.paths[0].size() == 387);

  CHECK_THROWS(fold_pair_from_json("{\"n\": 5}"));
  CHECK_THROWS(fold_pair_from_json("not json"));
}

#include "chains/constructions.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>

#include "chains/common.hpp"
#include "chains/sumgraph.hpp"

namespace chains {

namespace {

std::vector<int> to_int_beads(const std::vector<std::int64_t>& beads) {
  std::vector<int> out;
  out.reserve(beads.size());
  for (std::int64_t b : beads) {
    if (b > std::numeric_limits<int>::max())
      throw OverflowError("bead value exceeds int range");
    out.push_back(static_cast<int>(b));
  }
  return out;
}

void verify_or_throw(std::span<const int> beads, const TargetSet& ts,
                     bool closed, const char* what) {
  auto report = verify_sequence(beads, ts, closed);
  if (!report.valid)
    throw std::logic_error(std::string(what) + ": constructed sequence failed verification");
}

// Fibonacci-like values from two seeds, up to the int range.
std::vector<std::int64_t> recurrence_values(std::int64_t x0, std::int64_t x1) {
  std::vector<std::int64_t> vals{x0, x1};
  while (vals.back() < (std::int64_t{1} << 32))
    vals.push_back(vals[vals.size() - 2] + vals.back());
  return vals;
}

// Pocket path of the table over three consecutive recurrence values:
// doubled corners (prev, cur, next, 2*cur), perimeter cur. The maximal
// bead cur is always a pocket, so the n-1 chain drops one endpoint.
std::vector<int> recurrence_table_chain(std::int64_t prev, std::int64_t cur,
                                        std::int64_t next) {
  BilliardTable t = rect_table(prev, cur, next, 2 * cur);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  if (d.paths.size() != 1 || !d.cycles.empty() ||
      d.paths[0].size() != static_cast<std::size_t>(cur))
    throw std::logic_error("recurrence table did not yield a complete path");
  return to_int_beads(d.paths[0]);
}

std::vector<int> theorem_chain(int n, const std::vector<std::int64_t>& vals,
                               std::size_t first_k) {
  for (std::size_t k = first_k; k + 1 < vals.size(); ++k) {
    if (vals[k] == n)
      return recurrence_table_chain(vals[k - 1], vals[k], vals[k + 1]);
    if (vals[k] - 1 == n) {
      auto beads = recurrence_table_chain(vals[k - 1], vals[k], vals[k + 1]);
      if (beads.front() == vals[k]) std::reverse(beads.begin(), beads.end());
      if (beads.back() != vals[k])
        throw std::logic_error("maximal bead is not a path endpoint");
      beads.pop_back();
      return beads;
    }
  }
  throw NoChain(n);
}

}  // namespace

Chain fibonacci_chain(int n) {
  if (n < 2) throw ParameterViolation("need n >= 2");
  TargetSet ts = TargetSet::make(TargetKind::Fibonacci);
  if (n == 9 || n == 11) {
    std::vector<int> beads =
        n == 9 ? std::vector<int>{9, 4, 1, 7, 6, 2, 3, 5, 8}
               : std::vector<int>{9, 4, 1, 7, 6, 2, 11, 10, 3, 5, 8};
    verify_or_throw(beads, ts, false, "fibonacci_chain");
    return make_chain(std::move(beads));
  }
  // 1 1 2 3 5 8 ...; tables need k >= 4, i.e. value >= 3.
  auto fib = recurrence_values(1, 1);
  auto beads = theorem_chain(n, fib, 3);
  verify_or_throw(beads, ts, false, "fibonacci_chain");
  return make_chain(std::move(beads));
}

Chain lucas_chain(int n) {
  if (n < 2) throw ParameterViolation("need n >= 2");
  TargetSet ts = TargetSet::make(TargetKind::Lucas);
  if (n == 5) {
    auto found = find_chain(build_graph(5, ts));
    if (!found) throw std::logic_error("expected a Lucas chain at n=5");
    return *found;
  }
  // 2 1 3 4 7 11 ...; tables need k >= 2, i.e. value >= 3.
  auto lucas = recurrence_values(2, 1);
  auto beads = theorem_chain(n, lucas, 2);
  verify_or_throw(beads, ts, false, "lucas_chain");
  return make_chain(std::move(beads));
}

std::vector<int> recurrence_chain_lengths(std::int64_t x0, std::int64_t x1,
                                          int bound, SearchLimits limits) {
  TargetSet ts = TargetSet::recurrence(x0, x1);
  std::vector<int> lengths;
  for (int n = 2; n <= bound; ++n)
    if (find_chain(build_graph(n, ts), limits)) lengths.push_back(n);
  return lengths;
}

std::vector<SquareNecklaceRow> square_necklace_rows(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::vector<SquareNecklaceRow> rows;
  for (auto [r, s] : pairs) {
    if (r < 1 || s < 1 || r == s || std::gcd(r, s) != 1)
      throw ParameterViolation("need distinct positive coprime r, s");
    std::int64_t x = std::abs((r + s) * (r + s) - 2 * r * r);
    std::int64_t y = std::abs((r + s) * (r + s) - 2 * s * s);
    if (x == 0 || y == 0)
      throw ParameterViolation("degenerate pair: zero component");
    while (x % 2 == 0 && y % 2 == 0) {
      x /= 2;
      y /= 2;
    }
    if (x > y) std::swap(x, y);
    const std::int64_t X = 6 * x, Y = 6 * y;
    const std::int64_t N = Y * Y - X * X;

    std::vector<SquareNecklaceRow> here;
    for (std::int64_t p = 2; p * p < N; p += 2) {
      if (N % p != 0) continue;
      std::int64_t q = N / p;
      if (q % 2 != 0) continue;
      if ((p % 4 == 2) == (q % 4 == 2)) continue;  // u, v would be even
      std::int64_t u = (p + q) / 2, v = (q - p) / 2;
      if (v < 1 || u % 3 == 0 || v % 3 == 0) continue;
      SquareNecklaceRow row;
      row.r = r;
      row.s = s;
      row.x = x;
      row.y = y;
      row.corner_roots = {X, Y, v, u};
      std::sort(row.corner_roots.begin(), row.corner_roots.end());
      auto sq = [](std::int64_t t) { return t * t; };
      std::int64_t A = sq(row.corner_roots[0]), B = sq(row.corner_roots[1]),
                   C = sq(row.corner_roots[2]), D = sq(row.corner_roots[3]);
      row.double_sides = {B - A, C - B};
      row.perimeter = C - A;
      row.sides_coprime = std::gcd(B - A, C - B) == 1;
      here.push_back(row);
    }
    std::sort(here.begin(), here.end(),
              [](const SquareNecklaceRow& a, const SquareNecklaceRow& b) {
                return a.perimeter < b.perimeter;
              });
    rows.insert(rows.end(), here.begin(), here.end());
  }
  return rows;
}

Necklace build_necklace_from_corners(std::int64_t A, std::int64_t B,
                                     std::int64_t C, std::int64_t D,
                                     const TargetSet& ts) {
  BilliardTable t = rect_table(A, B, C, D);
  const std::int64_t P = t.perimeter();
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  std::vector<int> beads;
  if (d.pockets.size() == 2) {
    if (d.paths.size() != 1 || d.paths[0].size() != static_cast<std::size_t>(P))
      throw Degenerate("pocket path does not cover the perimeter");
    if (!ts.contains(d.pockets[0] + d.pockets[1]))
      throw ClosureFailure("pocket beads " + std::to_string(d.pockets[0]) +
                           "+" + std::to_string(d.pockets[1]) +
                           " do not sum to a target");
    beads = to_int_beads(d.paths[0]);
  } else {
    if (d.cycles.size() != 1 ||
        d.cycles[0].size() != static_cast<std::size_t>(P))
      throw Degenerate("table splits into several cycles");
    beads = to_int_beads(d.cycles[0]);
  }
  verify_or_throw(beads, ts, true, "build_necklace_from_corners");
  return make_necklace(std::move(beads));
}

Necklace odd_square_family(std::int64_t r, std::int64_t s) {
  if (r < 1 || r % 2 == 0 || s % 2 == 0)
    throw ParameterViolation("r and s must be positive odd integers");
  if (s - 2 * r < 1 || s + 2 * r >= 2 * s - r)
    throw ParameterViolation("corner roots must be increasing");
  if (2 * (s - r) * (s - r) < 9 * r * r - 1)
    throw ParameterViolation("need 2(s-r)^2 >= 9r^2 - 1 to keep bead 1");
  auto sq = [](std::int64_t t) { return t * t; };
  std::int64_t A = sq(s - 2 * r), B = sq(s + 2 * r), C = sq(2 * s - r),
               D = sq(2 * s + r);
  for (std::int64_t corner : {A, B, C, D})
    if (corner % 8 != 1)
      throw std::logic_error("odd square not 1 mod 8");
  BilliardTable t = rect_table(A, B, C, D);
  TableDecomposition d = decompose(t.fold_a(), t.fold_b());
  if (!d.pockets.empty())
    throw std::logic_error("all-odd table produced pockets");
  TargetSet ts = TargetSet::make(TargetKind::Squares);
  Necklace nk = merge_components(d, ts);
  verify_or_throw(nk.beads, ts, true, "odd_square_family");
  if (nk.beads.size() != static_cast<std::size_t>(3 * (s * s - r * r)))
    throw std::logic_error("unexpected necklace length");
  return nk;
}

Chain cubic_chain(bool drop_max) {
  FoldSystem f(387, {{1, 124, 125}, {125, 387, 512}});
  FoldSystem g(387, {{1, 342, 343}, {343, 386, 729}, {387, 387, 774}});
  TableDecomposition d = decompose(f, g);
  if (d.paths.size() != 1 || !d.cycles.empty() || d.paths[0].size() != 387)
    throw std::logic_error("cubic table did not yield a single complete path");
  auto beads = to_int_beads(d.paths[0]);
  if (beads.front() == 387) std::reverse(beads.begin(), beads.end());
  if (drop_max) {
    if (beads.back() != 387)
      throw std::logic_error("387 is not a path endpoint");
    beads.pop_back();
  }
  verify_or_throw(beads, TargetSet::make(TargetKind::Cubes), false,
                  "cubic_chain");
  return make_chain(std::move(beads));
}

std::vector<CubicNecklaceCandidate> cubic_necklace_candidates(
    std::int64_t bound) {
  if (bound < 3) throw ParameterViolation("bound must be at least 3");
  if (bound > (std::int64_t{1} << 17))
    throw ParameterViolation("bound too large");
  std::unordered_map<std::int64_t,
                     std::vector<std::pair<std::int64_t, std::int64_t>>>
      by_sum;
  for (std::int64_t i = 1; i <= bound; i += 2)
    for (std::int64_t j = i + 2; j <= bound; j += 2)
      by_sum[i * i * i + j * j * j].push_back({i, j});
  std::vector<CubicNecklaceCandidate> out;
  for (const auto& [sum, ps] : by_sum) {
    if (ps.size() < 2) continue;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        // Inner pair (b, c) strictly inside outer pair (a, d).
        if (ps[i].first >= ps[j].first) continue;
        CubicNecklaceCandidate cand;
        cand.a = ps[i].first;
        cand.d = ps[i].second;
        cand.b = ps[j].first;
        cand.c = ps[j].second;
        auto cube = [](std::int64_t t) { return t * t * t; };
        cand.gcd_value =
            std::gcd(cube(cand.c) - cube(cand.b), cube(cand.b) - cube(cand.a));
        cand.coverage_ok = cube(cand.a) < cube(cand.c) - cube(cand.b);
        cand.perimeter = cube(cand.c) - cube(cand.a);
        cand.predicted_components = cand.gcd_value / 2;
        out.push_back(cand);
      }
  }
  std::sort(out.begin(), out.end(),
            [](const CubicNecklaceCandidate& p, const CubicNecklaceCandidate& q) {
              return std::tie(p.a, p.b, p.c, p.d) <
                     std::tie(q.a, q.b, q.c, q.d);
            });
  return out;
}

namespace {

struct ListedRow {
  std::array<std::int64_t, 4> corners;
  std::pair<std::int64_t, std::int64_t> sides;
  std::int64_t perimeter;
};

const ListedRow kTriangularRows[] = {
    {{1, 15, 91, 105}, {7, 38}, 90},
    {{55, 153, 253, 351}, {49, 50}, 198},
    {{91, 231, 325, 465}, {47, 70}, 234},
    {{15, 253, 465, 703}, {106, 119}, 450},
    {{21, 55, 561, 595}, {17, 253}, 540},
    {{45, 153, 595, 703}, {54, 221}, 550},
    {{91, 253, 741, 903}, {81, 244}, 650},
    {{253, 703, 1035, 1485}, {166, 225}, 782},
    {{3, 325, 903, 1225}, {161, 289}, 900},
    {{325, 703, 1275, 1653}, {189, 286}, 950},
    {{45, 91, 1035, 1081}, {23, 472}, 990},
    {{465, 703, 1653, 1891}, {119, 475}, 1188},
    {{171, 1225, 1431, 2485}, {103, 527}, 1260},
    {{45, 325, 1431, 1711}, {140, 553}, 1386},
    {{1, 55, 1431, 1485}, {27, 688}, 1430},
    {{45, 1035, 1711, 2701}, {338, 495}, 1666},
    {{1, 435, 1711, 2145}, {217, 638}, 1710},
    {{171, 703, 1953, 2485}, {266, 625}, 1782},
    {{91, 153, 1891, 1953}, {31, 869}, 1800},
    {{55, 1485, 1891, 3321}, {203, 715}, 1836},
    {{105, 595, 2211, 2701}, {245, 808}, 2106},
    {{15, 231, 2485, 2701}, {108, 1127}, 2470},
    {{91, 1485, 2701, 4095}, {608, 697}, 2610},
    {{55, 435, 2701, 3081}, {190, 1133}, 2646},
    {{21, 595, 3081, 3655}, {287, 1243}, 3060},
    {{3, 325, 3081, 3403}, {161, 1378}, 3078},
    {{171, 253, 3321, 3403}, {41, 1584}, 3250},
    {{1, 91, 4005, 4095}, {45, 1957}, 4004},
};

const ListedRow kPentagonalRows[] = {
    {{15, 35, 57, 77}, {10, 11}, 42},
    {{1, 7, 51, 57}, {3, 22}, 50},
    {{7, 35, 117, 145}, {14, 41}, 110},
    {{35, 77, 145, 187}, {21, 34}, 110},
    {{15, 117, 145, 247}, {51, 14}, 130},
    {{57, 155, 247, 345}, {49, 46}, 190},
    {{7, 145, 287, 425}, {69, 71}, 280},
    {{1, 15, 287, 301}, {7, 136}, 286},
    {{7, 51, 301, 345}, {22, 125}, 294},
    {{7, 77, 425, 495}, {35, 174}, 418},
};

}  // namespace

std::vector<FigurateRow> figurate_table_rows(TargetKind kind) {
  const ListedRow* listed = nullptr;
  std::size_t count = 0;
  bool (*is_figurate)(std::int64_t) = nullptr;
  if (kind == TargetKind::Triangular) {
    listed = kTriangularRows;
    count = std::size(kTriangularRows);
    is_figurate = &is_triangular;
  } else if (kind == TargetKind::Pentagonal) {
    listed = kPentagonalRows;
    count = std::size(kPentagonalRows);
    is_figurate = &is_gen_pentagonal;
  } else {
    throw ParameterViolation("kind must be triangular or pentagonal");
  }

  TargetSet ts = TargetSet::make(kind);
  std::vector<FigurateRow> rows;
  for (std::size_t i = 0; i < count; ++i) {
    FigurateRow row;
    row.corners = listed[i].corners;
    row.listed_sides = listed[i].sides;
    row.listed_perimeter = listed[i].perimeter;
    auto [A, B, C, D] = row.corners;
    auto note = [&row](std::string s) { row.discrepancies.push_back(std::move(s)); };
    bool shape_ok = true;
    for (std::int64_t c : row.corners) {
      if (!is_figurate(c)) {
        note("corner " + std::to_string(c) + " is not figurate");
        shape_ok = false;
      }
      if (c % 2 == 0) {
        note("corner " + std::to_string(c) + " is even");
        shape_ok = false;
      }
    }
    if (!(A < B && B < C && C < D)) {
      note("corners not increasing");
      shape_ok = false;
    }
    if (D - B != C - A) {
      note("opposite sides differ");
      shape_ok = false;
    }
    row.sides = {(B - A) / 2, (C - B) / 2};
    row.perimeter = C - A;
    // The published sides come in either order; compare as a pair.
    if (std::minmax(row.sides.first, row.sides.second) !=
        std::minmax(row.listed_sides.first, row.listed_sides.second))
      note("sides differ from listed");
    if (std::gcd(row.sides.first, row.sides.second) != 1) {
      note("sides share a factor");
      shape_ok = false;
    }
    if (row.perimeter != row.listed_perimeter)
      note("perimeter differs from listed");
    if (shape_ok) {
      try {
        row.necklace = build_necklace_from_corners(A, B, C, D, ts);
      } catch (const std::exception& e) {
        note(std::string("necklace construction failed: ") + e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Necklace extend_necklace(const Necklace& nk, const TargetSet& ts) {
  const int n = static_cast<int>(nk.beads.size());
  if (n < 3) throw ParameterViolation("necklace too short to extend");
  const int m = n + 1;
  std::pair<int, int> best{0, 0};
  std::size_t best_pos = 0;
  for (int i = 0; i < n; ++i) {
    int u = nk.beads[i];
    int v = nk.beads[(i + 1) % n];
    if (!ts.contains(u + m) || !ts.contains(v + m)) continue;
    std::pair<int, int> cand = std::minmax(u, v);
    if (best.first == 0 || cand < best) {
      best = cand;
      best_pos = static_cast<std::size_t>(i);
    }
  }
  if (best.first == 0)
    throw NoInsertionPoint("no adjacent pair admits bead " + std::to_string(m));
  std::vector<int> beads = nk.beads;
  beads.insert(beads.begin() + static_cast<std::ptrdiff_t>(best_pos) + 1, m);
  verify_or_throw(beads, ts, true, "extend_necklace");
  return make_necklace(std::move(beads));
}

}  // namespace chains

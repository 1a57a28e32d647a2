#include "chains/billiards.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cassert>
#include <numeric>

#include <json.hpp>

#include "chains/common.hpp"

namespace chains {

namespace {

constexpr std::int64_t kMaxMaterializedN = std::int64_t{1} << 25;

class Bitmap {
public:
  explicit Bitmap(std::int64_t n) : bits_((n + 64) / 64, 0) {}
  bool test(std::int64_t i) const {
    return bits_[static_cast<std::size_t>(i >> 6)] >> (i & 63) & 1;
  }
  void set(std::int64_t i) {
    bits_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
  }

private:
  std::vector<std::uint64_t> bits_;
};

bool fixes(const FoldSystem& fs, std::int64_t x) { return fs.apply(x) == x; }

// Shared traversal: walk the alternating fold orbit starting at `x`,
// first applying `first`. Emits every bead including `x`. Returns true
// if the walk ended in a pocket (path), false if it closed (cycle).
template <typename Emit>
bool trace(const FoldSystem& f, const FoldSystem& g, std::int64_t x,
           const FoldSystem* first, Emit&& emit) {
  emit(x);
  const FoldSystem* use = first;
  std::int64_t cur = x;
  for (;;) {
    std::int64_t nx = use->apply(cur);
    if (nx == cur) return true;  // pocket of `use`
    if (nx == x) return false;   // closed the cycle
    emit(nx);
    cur = nx;
    use = (use == &f) ? &g : &f;
  }
}

template <typename EmitPathBead, typename PathDone, typename EmitCycleBead,
          typename CycleDone>
void decompose_walk(const FoldSystem& f, const FoldSystem& g,
                    std::vector<std::int64_t>& pockets_out,
                    EmitPathBead&& path_bead, PathDone&& path_done,
                    EmitCycleBead&& cycle_bead, CycleDone&& cycle_done) {
  if (f.n() != g.n())
    throw std::invalid_argument("fold systems disagree on bead range");
  const std::int64_t n = f.n();
  Bitmap visited(n + 1);

  auto pf = f.pockets();
  auto pg = g.pockets();
  pockets_out = pf;
  pockets_out.insert(pockets_out.end(), pg.begin(), pg.end());
  std::sort(pockets_out.begin(), pockets_out.end());

  for (std::int64_t p : pockets_out) {
    if (visited.test(p)) continue;
    const FoldSystem* first = fixes(f, p) ? &g : &f;
    bool ended_in_pocket = trace(f, g, p, first, [&](std::int64_t b) {
      visited.set(b);
      path_bead(b);
    });
    assert(ended_in_pocket);
    (void)ended_in_pocket;
    path_done();
  }
  for (std::int64_t x = 1; x <= n; ++x) {
    if (visited.test(x)) continue;
    bool ended_in_pocket = trace(f, g, x, &f, [&](std::int64_t b) {
      visited.set(b);
      cycle_bead(b);
    });
    assert(!ended_in_pocket);
    (void)ended_in_pocket;
    cycle_done();
  }
}

}  // namespace

FoldSystem::FoldSystem(std::int64_t n, std::vector<FoldSegment> segments)
    : n_(n), segments_(std::move(segments)) {
  if (n < 1) throw std::invalid_argument("fold system needs n >= 1");
  std::sort(segments_.begin(), segments_.end(),
            [](const FoldSegment& a, const FoldSegment& b) { return a.lo < b.lo; });
}

std::int64_t FoldSystem::apply(std::int64_t x) const {
  for (const auto& seg : segments_)
    if (x >= seg.lo && x <= seg.hi) return seg.sum - x;
  throw std::out_of_range("bead not covered by any fold segment");
}

std::vector<std::int64_t> FoldSystem::pockets() const {
  std::vector<std::int64_t> out;
  for (const auto& seg : segments_) {
    if (seg.sum % 2 != 0) continue;
    std::int64_t p = seg.sum / 2;
    if (p >= seg.lo && p <= seg.hi) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FoldViolation> validate_fold_system(const FoldSystem& fs) {
  std::vector<FoldViolation> out;
  const auto& segs = fs.segments();
  std::int64_t expect = 1;
  for (const auto& seg : segs) {
    if (seg.lo > seg.hi)
      out.push_back({seg.lo, "segment with lo > hi"});
    if (seg.lo != expect)
      out.push_back({seg.lo, seg.lo > expect ? "gap in segment cover"
                                             : "overlapping segments"});
    expect = seg.hi + 1;
  }
  if (expect != fs.n() + 1)
    out.push_back({fs.n(), "segments do not cover 1..n"});
  if (!out.empty()) return out;  // structural problems mask bead checks

  for (const auto& seg : segs) {
    for (std::int64_t x = seg.lo; x <= seg.hi; ++x) {
      std::int64_t y = seg.sum - x;
      if (y < 1 || y > fs.n()) {
        out.push_back({x, "image " + std::to_string(y) + " outside 1..n"});
        continue;
      }
      if (fs.apply(y) != x)
        out.push_back({x, "not an involution: f(f(x)) != x"});
    }
  }
  return out;
}

BilliardTable rect_table(std::int64_t A, std::int64_t B, std::int64_t C,
                         std::int64_t D) {
  if (!(0 < A && A < B && B < C && C < D))
    throw TableError("corners must satisfy 0 < A < B < C < D");
  if (C - A != D - B)
    throw SemiperimeterViolation("semiperimeter identity C-A = D-B fails");
  const std::int64_t P = C - A;
  if (B > P + 1)
    throw CoverageViolation("corner B exceeds perimeter + 1; beads lost");
  int evens = (A % 2 == 0) + (B % 2 == 0) + (C % 2 == 0) + (D % 2 == 0);
  if (evens != 0 && evens != 2)
    throw PocketCountViolation("table must have 0 or 2 integer corners");
  return BilliardTable{A, B, C, D};
}

FoldSystem BilliardTable::fold_a() const {
  const std::int64_t P = perimeter();
  std::vector<FoldSegment> segs;
  if (A >= 2) segs.push_back({1, A - 1, A});
  segs.push_back({A, P, C});
  return FoldSystem(P, std::move(segs));
}

FoldSystem BilliardTable::fold_b() const {
  const std::int64_t P = perimeter();
  std::vector<FoldSegment> segs;
  segs.push_back({1, std::min(B - 1, P), B});
  if (B <= P) segs.push_back({B, P, D});
  return FoldSystem(P, std::move(segs));
}

std::vector<std::int64_t> BilliardTable::pockets() const {
  auto out = fold_a().pockets();
  auto pb = fold_b().pockets();
  out.insert(out.end(), pb.begin(), pb.end());
  std::sort(out.begin(), out.end());
  return out;
}

TableDecomposition decompose(const FoldSystem& f, const FoldSystem& g) {
  if (f.n() > kMaxMaterializedN)
    throw std::invalid_argument(
        "range too large to materialize; use decompose_stats");
  TableDecomposition d;
  std::vector<std::int64_t> current;
  decompose_walk(
      f, g, d.pockets, [&](std::int64_t b) { current.push_back(b); },
      [&] {
        d.paths.push_back(std::move(current));
        current.clear();
      },
      [&](std::int64_t b) { current.push_back(b); },
      [&] {
        d.cycles.push_back(std::move(current));
        current.clear();
      });
  return d;
}

DecompositionStats decompose_stats(const FoldSystem& f, const FoldSystem& g) {
  DecompositionStats s;
  s.n = f.n();
  std::int64_t len = 0;
  std::int64_t least = 0;
  decompose_walk(
      f, g, s.pockets, [&](std::int64_t) { ++len; },
      [&] {
        s.path_lengths.push_back(len);
        len = 0;
      },
      [&](std::int64_t b) {
        if (len == 0) least = b;
        ++len;
      },
      [&] {
        s.cycle_lengths.push_back(len);
        s.cycle_least_beads.push_back(least);
        len = 0;
      });
  return s;
}

LemmaPrediction lemma_predict(const BilliardTable& t) {
  if (t.pockets().size() != 2)
    throw std::invalid_argument("lemma applies to two-pocket tables");
  LemmaPrediction p;
  p.gcd = std::gcd(t.B - t.A, t.C - t.B);
  p.complete = (p.gcd == 1);
  return p;
}

ResidueColoring residue_coloring(const BilliardTable& t) {
  if (t.pockets().size() != 2)
    throw std::invalid_argument("residue coloring applies to two-pocket tables");
  ResidueColoring rc;
  rc.modulus = std::gcd(t.B - t.A, t.C - t.B);
  auto d = decompose(t.fold_a(), t.fold_b());
  auto classes = [&](const std::vector<std::int64_t>& beads) {
    std::vector<std::int64_t> rs;
    for (std::int64_t b : beads) rs.push_back(b % rc.modulus);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
  };
  for (const auto& p : d.paths) rc.component_residues.push_back(classes(p));
  for (const auto& c : d.cycles) rc.component_residues.push_back(classes(c));
  return rc;
}

namespace {

// Breaks one edge in every remaining cycle and reconnects the open
// walks into a single circuit. Needed when no cycle pair admits a
// two-edge splice: on the all-odd-corner square tables every candidate
// second cross edge sums to 2 mod 8, which is never a square, so the
// loops can only be joined all at once. Cycle 0 anchors the circuit;
// the first depth-first solution (break positions and directions in
// ascending order) is taken, so the result is deterministic.
bool cyclic_splice(std::vector<std::vector<int>>& cycles,
                   const TargetSet& ts) {
  const std::size_t k = cycles.size();
  struct Pick {
    std::size_t c;
    int i;
    int dir;
  };
  std::vector<Pick> picks;
  std::vector<char> used(k, 0);

  auto head = [&](const Pick& p) {
    const auto& c = cycles[p.c];
    const int m = static_cast<int>(c.size());
    return c[((p.i + p.dir) % m + m) % m];
  };
  auto tail = [&](const Pick& p) { return cycles[p.c][p.i]; };

  std::function<bool()> dfs = [&]() -> bool {
    if (picks.size() == k)
      return ts.contains(std::int64_t{tail(picks.back())} +
                         head(picks.front()));
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      const int m = static_cast<int>(cycles[c].size());
      for (int i = 0; i < m; ++i) {
        for (int dir : {1, -1}) {
          Pick p{c, i, dir};
          if (!picks.empty() &&
              !ts.contains(std::int64_t{tail(picks.back())} + head(p)))
            continue;
          picks.push_back(p);
          if (dfs()) return true;
          picks.pop_back();
        }
      }
      used[c] = 0;
      if (picks.empty()) break;  // anchor the circuit at cycle 0
    }
    return false;
  };
  if (!dfs()) return false;

  std::vector<int> merged;
  for (const Pick& p : picks) {
    const auto& c = cycles[p.c];
    const int m = static_cast<int>(c.size());
    for (int s = 1; s <= m; ++s)
      merged.push_back(c[((p.i + s * p.dir) % m + m * m) % m]);
  }
  cycles.assign(1, std::move(merged));
  return true;
}

}  // namespace

Necklace merge_components(const TableDecomposition& d, const TargetSet& ts) {
  if (!d.pockets.empty() || !d.paths.empty())
    throw std::invalid_argument("merge needs a cycles-only decomposition");
  if (d.cycles.empty()) throw std::invalid_argument("no cycles to merge");

  std::vector<std::vector<int>> cycles;
  std::int64_t total = 0;
  for (const auto& c : d.cycles) {
    std::vector<int> ci;
    for (std::int64_t b : c) {
      if (b > kMaxMaterializedN)
        throw std::invalid_argument("cycle beads too large to merge");
      ci.push_back(static_cast<int>(b));
    }
    total += static_cast<std::int64_t>(ci.size());
    cycles.push_back(std::move(ci));
  }

  auto least_bead = [](const std::vector<int>& c) {
    return *std::min_element(c.begin(), c.end());
  };

  while (cycles.size() > 1) {
    std::sort(cycles.begin(), cycles.end(),
              [&](const auto& a, const auto& b) {
                return least_bead(a) < least_bead(b);
              });
    // Splice the first cycle with the earliest partner admitting one,
    // at the lexicographically least (u, v, x, y).
    bool spliced = false;
    auto& c1 = cycles.front();
    const int k1 = static_cast<int>(c1.size());
    for (std::size_t j = 1; j < cycles.size() && !spliced; ++j) {
      auto& c2 = cycles[j];
      const int k2 = static_cast<int>(c2.size());
      int best_i = -1, best_dir1 = 0, best_j = -1, best_dir2 = 0;
      std::array<int, 4> best{};
      for (int i = 0; i < k1; ++i) {
        for (int d1 : {1, -1}) {
          int u = c1[i];
          int v = c1[(i + d1 + k1) % k1];
          for (int jj = 0; jj < k2; ++jj) {
            for (int d2 : {1, -1}) {
              int x = c2[jj];
              int y = c2[(jj + d2 + k2) % k2];
              if (!ts.contains(static_cast<std::int64_t>(u) + x)) continue;
              if (!ts.contains(static_cast<std::int64_t>(v) + y)) continue;
              std::array<int, 4> cand{u, v, x, y};
              if (best_i < 0 || cand < best) {
                best = cand;
                best_i = i;
                best_dir1 = d1;
                best_j = jj;
                best_dir2 = d2;
              }
            }
          }
        }
      }
      if (best_i < 0) continue;
      // Break u-v in c1 and x-y in c2; add u-x and v-y. Walk c1 from v
      // around to u (away from the removed edge), then cross to x and
      // walk c2 from x around to y.
      std::vector<int> merged;
      merged.reserve(c1.size() + c2.size());
      for (int s = 0; s < k1; ++s)  // v first, u last
        merged.push_back(c1[(best_i + (s + 1) * best_dir1 + k1 * k1) % k1]);
      for (int s = 0; s < k2; ++s)  // x first, y last; closes y-v
        merged.push_back(c2[(best_j - s * best_dir2 + k2 * k2) % k2]);
      cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(j));
      cycles.front() = std::move(merged);
      spliced = true;
    }
    if (!spliced && !cyclic_splice(cycles, ts)) throw NoSpliceFound();
  }

  if (static_cast<std::int64_t>(cycles.front().size()) != total)
    throw std::logic_error("merge lost beads");
  return make_necklace(std::move(cycles.front()));
}

std::pair<FoldSystem, FoldSystem> fold_pair_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("f") || !j.contains("g"))
    throw std::invalid_argument("fold JSON needs fields n, f, g");
  std::int64_t n = j.at("n").get<std::int64_t>();
  auto read = [&](const char* key) {
    std::vector<FoldSegment> segs;
    for (const auto& row : j.at(key)) {
      if (!row.is_array() || row.size() != 3)
        throw std::invalid_argument("fold segment must be [lo, hi, sum]");
      segs.push_back({row[0].get<std::int64_t>(), row[1].get<std::int64_t>(),
                      row[2].get<std::int64_t>()});
    }
    return FoldSystem(n, std::move(segs));
  };
  return {read("f"), read("g")};
}

}  // namespace chains

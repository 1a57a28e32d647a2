#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chains/sequences.hpp"
#include "chains/targets.hpp"

namespace chains {

class TableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class SemiperimeterViolation : public TableError {
public:
  using TableError::TableError;
};
class CoverageViolation : public TableError {
public:
  using TableError::TableError;
};
class PocketCountViolation : public TableError {
public:
  using TableError::TableError;
};

/// One straight stretch of a fold involution: beads x in [lo, hi] map
/// to sum - x.
struct FoldSegment {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t sum = 0;
};

/// Piecewise involution f(x) = s(x) - x on beads 1..n, one diagonal
/// family of a billiard table. Fixed points (2x = s) are pockets.
class FoldSystem {
public:
  FoldSystem(std::int64_t n, std::vector<FoldSegment> segments);

  std::int64_t n() const { return n_; }
  const std::vector<FoldSegment>& segments() const { return segments_; }

  std::int64_t apply(std::int64_t x) const;
  std::vector<std::int64_t> pockets() const;

private:
  std::int64_t n_;
  std::vector<FoldSegment> segments_;  // sorted by lo at construction
};

struct FoldViolation {
  std::int64_t bead;
  std::string what;
};

/// Checks cover/disjoint/range/involution invariants; violations are
/// data, not exceptions.
std::vector<FoldViolation> validate_fold_system(const FoldSystem& fs);

/// Rectangular table with doubled corners A < B < C < D. Perimeter
/// P = C - A = D - B equals the bead count.
struct BilliardTable {
  std::int64_t A = 0, B = 0, C = 0, D = 0;

  std::int64_t perimeter() const { return C - A; }
  FoldSystem fold_a() const;  // sums A and C
  FoldSystem fold_b() const;  // sums B and D
  std::vector<std::int64_t> pockets() const;
};

BilliardTable rect_table(std::int64_t A, std::int64_t B, std::int64_t C,
                         std::int64_t D);

struct TableDecomposition {
  std::vector<std::vector<std::int64_t>> paths;   // endpoints are pockets
  std::vector<std::vector<std::int64_t>> cycles;  // cyclic bead sequences
  std::vector<std::int64_t> pockets;
};

/// Alternates the two folds from each pocket to extract paths, then
/// pulls cycles off the unvisited beads. O(n) time, bitmap-sized
/// auxiliary memory; next beads come from fold evaluation, never from
/// stored adjacency.
TableDecomposition decompose(const FoldSystem& f, const FoldSystem& g);

/// Decomposition shape only (component lengths, least beads), without
/// materializing the sequences. Suitable for multi-million-bead tables.
struct DecompositionStats {
  std::int64_t n = 0;
  std::vector<std::int64_t> pockets;
  std::vector<std::int64_t> path_lengths;
  std::vector<std::int64_t> cycle_lengths;
  std::vector<std::int64_t> cycle_least_beads;
};
DecompositionStats decompose_stats(const FoldSystem& f, const FoldSystem& g);

struct LemmaPrediction {
  bool complete = false;
  std::int64_t gcd = 0;
};

/// Coprimality criterion for two-pocket tables: the pocket-to-pocket
/// path covers every bead iff gcd(B-A, C-B) = 1.
LemmaPrediction lemma_predict(const BilliardTable& t);

struct ResidueColoring {
  std::int64_t modulus = 0;
  // Residue classes per component, paths first then cycles, in
  // decomposition order; each class list is sorted.
  std::vector<std::vector<std::int64_t>> component_residues;
};
ResidueColoring residue_coloring(const BilliardTable& t);

class NoSpliceFound : public std::runtime_error {
public:
  NoSpliceFound() : std::runtime_error("no splice merges the remaining cycles") {}
};

/// Splices a cycles-only decomposition into one necklace by breaking
/// pairs of edges (u-v, x-y) whose cross sums u+x and v+y are targets.
Necklace merge_components(const TableDecomposition& d, const TargetSet& ts);

std::string render_svg(const BilliardTable& t, const TableDecomposition& d);
std::string render_svg(const FoldSystem& f, const FoldSystem& g,
                       const TableDecomposition& d);

/// Fold-system JSON input: {"n": int, "f": [[lo,hi,sum],...], "g": [...]}.
std::pair<FoldSystem, FoldSystem> fold_pair_from_json(const std::string& text);

}  // namespace chains

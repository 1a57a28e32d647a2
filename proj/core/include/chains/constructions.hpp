#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chains/billiards.hpp"
#include "chains/search.hpp"
#include "chains/sequences.hpp"
#include "chains/targets.hpp"

namespace chains {

class NoChain : public std::runtime_error {
public:
  explicit NoChain(int n)
      : std::runtime_error("no chain exists for n=" + std::to_string(n)) {}
};

class ParameterViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Degenerate : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ClosureFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NoInsertionPoint : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fibonacci chain on 1..n, built from the rectangular table over three
/// consecutive Fibonacci numbers (with the n-1 variant dropping the
/// maximal pocket bead, and explicit special cases n = 9, 11).
/// Throws NoChain for any other n.
Chain fibonacci_chain(int n);

/// Lucas analogue; special case n = 5 comes from search.
Chain lucas_chain(int n);

/// All n in [2, bound] admitting a chain under the recurrence targets
/// seeded by x0, x1, each certified by exhaustive search.
std::vector<int> recurrence_chain_lengths(std::int64_t x0, std::int64_t x1,
                                          int bound, SearchLimits limits = {});

struct SquareNecklaceRow {
  std::int64_t r = 0, s = 0;
  std::int64_t x = 0, y = 0;  // primitive odd solution of x^2+y^2=2z^2
  std::array<std::int64_t, 4> corner_roots{};  // sorted; squares halve to corners
  std::pair<std::int64_t, std::int64_t> double_sides{};
  std::int64_t perimeter = 0;
  bool sides_coprime = false;
};

/// One row per factorization (6y)^2-(6x)^2 = u^2-v^2 with u, v odd and
/// not multiples of 3, sorted by perimeter within each input pair.
std::vector<SquareNecklaceRow> square_necklace_rows(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

/// Necklace on 1..C-A from a table with doubled corners A<B<C<D: the
/// pocket path closed through the pocket-pocket edge (two pockets), or
/// the lone cycle (zero pockets). Fully verified against ts.
Necklace build_necklace_from_corners(std::int64_t A, std::int64_t B,
                                     std::int64_t C, std::int64_t D,
                                     const TargetSet& ts);

/// All-odd-corner square table (s-2r)^2, (s+2r)^2, (2s-r)^2, (2s+r)^2:
/// four residue loops mod 8, spliced into one necklace of 3(s^2-r^2).
Necklace odd_square_family(std::int64_t r, std::int64_t s);

/// The six-corner cubic table: a chain on 1..387 whose adjacent sums
/// are all cubes, or on 1..386 with drop_max.
Chain cubic_chain(bool drop_max = false);

struct CubicNecklaceCandidate {
  std::int64_t a = 0, b = 0, c = 0, d = 0;  // odd, a^3+d^3 = b^3+c^3
  std::int64_t gcd_value = 0;      // gcd(c^3-b^3, b^3-a^3)
  bool coverage_ok = false;        // a^3 < c^3-b^3
  std::int64_t perimeter = 0;      // c^3-a^3
  std::int64_t predicted_components = 0;
};

std::vector<CubicNecklaceCandidate> cubic_necklace_candidates(
    std::int64_t bound = 1024);

struct FigurateRow {
  std::array<std::int64_t, 4> corners{};  // doubled corners as listed
  std::pair<std::int64_t, std::int64_t> listed_sides{};
  std::int64_t listed_perimeter = 0;
  std::pair<std::int64_t, std::int64_t> sides{};
  std::int64_t perimeter = 0;
  std::vector<std::string> discrepancies;  // empty = row checks out
  Necklace necklace;  // empty beads if the row fails
};

/// The published triangular and pentagonal necklace tables, re-verified
/// row by row. Kind must be Triangular or Pentagonal.
std::vector<FigurateRow> figurate_table_rows(TargetKind kind);

/// Inserts bead n+1 between the lexicographically least adjacent pair
/// (u, v) with u+(n+1) and (n+1)+v both targets.
Necklace extend_necklace(const Necklace& nk, const TargetSet& ts);

}  // namespace chains

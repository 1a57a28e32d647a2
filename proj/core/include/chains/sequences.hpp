#pragma once

#include <vector>

namespace chains {

/// Open ordering of 1..n. Canonical form is the lexicographically
/// smaller of the sequence and its reversal.
struct Chain {
  std::vector<int> beads;

  bool operator==(const Chain&) const = default;
};

/// Cyclic ordering of 1..n. Canonical form starts at bead 1 with the
/// direction chosen so the second bead is the smaller neighbor of 1.
struct Necklace {
  std::vector<int> beads;

  bool operator==(const Necklace&) const = default;
};

std::vector<int> canonical_chain(std::vector<int> beads);
std::vector<int> canonical_necklace(std::vector<int> beads);

inline Chain make_chain(std::vector<int> beads) {
  return Chain{canonical_chain(std::move(beads))};
}
inline Necklace make_necklace(std::vector<int> beads) {
  return Necklace{canonical_necklace(std::move(beads))};
}

}  // namespace chains

#include "chains/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace chains {

std::vector<int> canonical_chain(std::vector<int> beads) {
  std::vector<int> rev(beads.rbegin(), beads.rend());
  return std::min(beads, rev);
}

std::vector<int> canonical_necklace(std::vector<int> beads) {
  if (beads.empty()) return beads;
  auto it = std::find(beads.begin(), beads.end(), 1);
  if (it == beads.end())
    throw std::invalid_argument("necklace must contain bead 1");
  std::rotate(beads.begin(), it, beads.end());
  if (beads.size() > 2 && beads[1] > beads.back())
    std::reverse(beads.begin() + 1, beads.end());
  return beads;
}

}  // namespace chains

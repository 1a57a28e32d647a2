#include "chains/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace chains {

std::vector<int> parse_beads(std::istream& in) {
  std::vector<int> beads;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("not a bead value: '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > std::numeric_limits<int>::max())
      throw ParseError("not a bead value: '" + tok + "'");
    beads.push_back(static_cast<int>(v));
  }
  return beads;
}

std::vector<int> parse_beads(const std::string& text) {
  std::istringstream in(text);
  return parse_beads(in);
}

std::string format_beads(std::span<const int> beads) {
  std::string out;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(beads[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace chains

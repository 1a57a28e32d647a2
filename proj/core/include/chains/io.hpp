#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chains {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Whitespace-separated positive integers; anything else throws.
std::vector<int> parse_beads(const std::string& text);
std::vector<int> parse_beads(std::istream& in);

/// Single line, single spaces, no trailing newline.
std::string format_beads(std::span<const int> beads);

std::string read_file(const std::string& path);

}  // namespace chains

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chains/sequences.hpp"
#include "chains/sumgraph.hpp"

namespace chains {

struct SearchLimits {
  std::uint64_t node_budget = 1'000'000'000;
};

/// Budget exhaustion is a distinct outcome, never "does not exist".
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded() : std::runtime_error("search node budget exceeded") {}
};

/// Exhaustive: returns a canonical chain, or nullopt as a certificate
/// that none exists.
std::optional<Chain> find_chain(const SumGraph& g, SearchLimits limits = {});

std::optional<Necklace> find_necklace(const SumGraph& g,
                                      SearchLimits limits = {});

struct ChainEnumeration {
  std::vector<Chain> chains;  // distinct up to reversal, sorted lex
  bool truncated = false;
};
ChainEnumeration enumerate_chains(const SumGraph& g, std::size_t cap,
                                  SearchLimits limits = {});

struct NecklaceEnumeration {
  std::vector<Necklace> necklaces;  // distinct up to rotation/reflection
  bool truncated = false;
};
NecklaceEnumeration enumerate_necklaces(const SumGraph& g, std::size_t cap,
                                        SearchLimits limits = {});

enum class SpectrumMode { Chain, Necklace, Both };

enum class Outcome { No, Yes, BudgetExceeded };

struct SpectrumRow {
  int n = 0;
  Outcome chain = Outcome::No;
  Outcome necklace = Outcome::No;
  std::optional<std::uint64_t> chain_count;
  std::chrono::duration<double> elapsed{0};
};

/// One row per n in [lo, hi]. Rows are independent and may be computed
/// on several threads; the result is identical either way.
std::vector<SpectrumRow> spectrum(const TargetSet& ts, int lo, int hi,
                                  SpectrumMode mode, bool count = false,
                                  int threads = 1, SearchLimits limits = {});

}  // namespace chains

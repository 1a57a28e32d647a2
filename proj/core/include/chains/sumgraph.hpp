#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chains/targets.hpp"

namespace chains {

/// Graph on 1..n with an edge {x,y} whenever x+y is a target sum.
/// Immutable after build; adjacency lists are increasing. Never
/// contains self-loops, even when 2x is a target.
struct SumGraph {
  int n = 0;
  TargetSet targets;
  std::vector<std::vector<int>> adj;  // adj[0] unused

  std::span<const int> neighbors(int v) const { return adj[v]; }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

SumGraph build_graph(int n, const TargetSet& ts);

struct DegreeAnomalies {
  std::vector<int> isolated;
  std::vector<int> monovalent;
};
DegreeAnomalies degree_anomalies(const SumGraph& g);

/// Connected components as disjoint vertex sets covering 1..n,
/// ordered by least element; each set is increasing.
std::vector<std::vector<int>> components(const SumGraph& g);

struct AdjacencyViolation {
  int position;  // 1-based position of the left bead of the offending pair
  int left;
  int right;
  std::int64_t sum;
};

struct VerificationReport {
  bool valid = false;
  std::optional<AdjacencyViolation> violation;
  std::optional<std::string> coverage_failure;
};

/// Checks that seq is a permutation of 1..len with every adjacent sum
/// (and the wraparound sum, if closed) in the target set. Malformed
/// input is reported, never thrown.
VerificationReport verify_sequence(std::span<const int> seq,
                                   const TargetSet& ts, bool closed);

}  // namespace chains

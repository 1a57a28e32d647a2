#include "chains/sumgraph.hpp"

#include <numeric>
#include <stdexcept>

namespace chains {

namespace {

constexpr int kMaxMaterializedN = 1 << 25;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // root is the least element
  }
};

}  // namespace

SumGraph build_graph(int n, const TargetSet& ts) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  if (n > kMaxMaterializedN)
    throw std::invalid_argument(
        "range too large for materialized adjacency; use fold systems");
  SumGraph g{n, ts, {}};
  g.adj.resize(static_cast<std::size_t>(n) + 1);
  for (int x = 1; x <= n; ++x) g.adj[x] = ts.partners(x, n);
  return g;
}

DegreeAnomalies degree_anomalies(const SumGraph& g) {
  DegreeAnomalies out;
  for (int v = 1; v <= g.n; ++v) {
    if (g.degree(v) == 0) out.isolated.push_back(v);
    if (g.degree(v) == 1) out.monovalent.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> components(const SumGraph& g) {
  DisjointSet ds(g.n);
  for (int v = 1; v <= g.n; ++v)
    for (int u : g.adj[v]) ds.unite(v, u);
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(g.n) + 1);
  for (int v = 1; v <= g.n; ++v) by_root[ds.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

VerificationReport verify_sequence(std::span<const int> seq,
                                   const TargetSet& ts, bool closed) {
  VerificationReport rep;
  if (seq.empty()) {
    rep.coverage_failure = "empty sequence";
    return rep;
  }
  const int n = static_cast<int>(seq.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int b : seq) {
    if (b < 1 || b > n) {
      rep.coverage_failure =
          "bead " + std::to_string(b) + " outside 1.." + std::to_string(n);
      return rep;
    }
    if (seen[b]) {
      rep.coverage_failure = "duplicate bead " + std::to_string(b);
      return rep;
    }
    seen[b] = 1;
  }
  const int pairs = closed ? n : n - 1;
  for (int i = 0; i < pairs; ++i) {
    int a = seq[i];
    int b = seq[(i + 1) % n];
    std::int64_t sum = static_cast<std::int64_t>(a) + b;
    if (!ts.contains(sum)) {
      rep.violation = AdjacencyViolation{i + 1, a, b, sum};
      return rep;
    }
  }
  if (closed && n < 3) {
    rep.coverage_failure = "closed sequence needs at least 3 beads";
    return rep;
  }
  rep.valid = true;
  return rep;
}

}  // namespace chains
